#include "bqf/reduction.hpp"

namespace bqf {

namespace {

std::pair<Int, Int> fundamental_unit(const Int& D, Budget* b) {
    ContinuedFraction cf = cf_plus(QuadraticIrrational(0, 1, D));
    std::size_t k = cf.period.size();
    charge(b, k);
    std::size_t len = k % 2 == 0 ? k : 2 * k;
    Rat c = convergent(cf.terms(len), Flavor::Plus);
    Int t = c.get_num(), u = c.get_den();
    if (t * t - D * u * u != 1) throw std::logic_error("Pell convergent check failed");
    return {t, u};
}

}  // namespace

PellSolution pell(const Int& D, const Int& m, Budget* budget) {
    if (D <= 0 || is_square(D)) throw DomainError("pell: D must be a positive non-square integer");
    if (m <= 0) throw DomainError("pell: m must be positive");
    Budget local(Budget::kDefault);
    Budget* b = budget ? budget : &local;
    auto [t1, u1] = fundamental_unit(D, budget);
    if (m == 1) return {t1, u1, m, D};

    // Nagell: each class of t^2 - D u^2 = N (N > 0) has a member with
    // 0 <= u <= u1 sqrt(N) / sqrt(2 (t1 + 1)); (m t1, m u1) is always a solution.
    Int n = m * m;
    Int bound = isqrt(u1 * u1 * n / (2 * (t1 + 1)));
    Int cap = m * u1;
    if (bound > cap) bound = cap;
    for (Int u = 1; u <= bound; ++u) {
        b->step();
        Int t2 = D * u * u + n;
        if (is_square(t2)) return {isqrt(t2), u, m, D};
    }
    return {m * t1, m * u1, m, D};
}

HirzebruchReport hirzebruch_class_number(const Int& p, Hypothesis h) {
    if (!is_prime(p) || p <= 3 || mod(p, 4) != 3)
        throw DomainError("hypothesis failed: p must be a prime > 3 with p = 3 (mod 4)");
    HirzebruchReport rep;
    rep.p = p;
    rep.hypothesis = h;
    Int d = 4 * p;
    rep.narrow_class_number_4p = narrow_class_number(d);
    // a unit of norm -1 exists iff the period of sqrt(p) is odd
    bool norm_minus_one = cf_plus(QuadraticIrrational(0, 1, p)).period.size() % 2 == 1;
    rep.class_number_4p = norm_minus_one ? rep.narrow_class_number_4p : rep.narrow_class_number_4p / 2;
    if (h == Hypothesis::Ordinary && rep.class_number_4p != 1)
        throw DomainError("hypothesis failed: class number of Q(sqrt " + p.get_str() + ") is " +
                          rep.class_number_4p.get_str() + ", not 1");
    if (h == Hypothesis::Narrow && rep.narrow_class_number_4p != 1)
        throw DomainError("hypothesis failed: narrow class number of Q(sqrt " + p.get_str() + ") is " +
                          rep.narrow_class_number_4p.get_str() + ", not 1");
    rep.period = cf_minus(QuadraticIrrational(0, 1, p)).period;
    rep.sum = 0;
    for (const Int& a : rep.period) rep.sum += a;
    if (mod(rep.sum, 3) != 0) throw std::logic_error("period sum not divisible by 3");
    rep.class_number = rep.sum / 3 - Int(static_cast<unsigned long>(rep.period.size()));
    return rep;
}

}  // namespace bqf
