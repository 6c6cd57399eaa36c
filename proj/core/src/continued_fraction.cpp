#include <algorithm>
#include <map>

#include "bqf/reduction.hpp"

namespace bqf {

QuadraticIrrational::QuadraticIrrational(Int p, Int q, Int d) : P(std::move(p)), Q(std::move(q)), D(std::move(d)) {
    if (Q == 0) throw DomainError("quadratic irrational with zero denominator");
    if (D <= 0 || is_square(D)) throw DomainError("quadratic irrational needs a positive non-square radicand (rational input is unsupported)");
    if (mod(D - P * P, Q) != 0) {
        Int aq = abs(Q);
        P *= aq;
        D *= Q * Q;
        Q *= aq;
    }
}

int QuadraticIrrational::compare(const Rat& r) const {
    const Int& n = r.get_num();
    const Int& d = r.get_den();  // > 0
    // x < n/d  <=>  d*sqrt(D) < T (Q > 0) or d*sqrt(D) > T (Q < 0), T = nQ - dP
    Int T = n * Q - d * P;
    bool below_t = sgn(T) > 0 && d * d * D < T * T;  // d sqrt D < T
    bool less = Q > 0 ? below_t : !below_t;
    return less ? -1 : 1;
}

Int QuadraticIrrational::floor() const { return floor_div(P + isqrt(D) + (Q < 0 ? 1 : 0), Q); }

double QuadraticIrrational::approx() const {
    mpf_class s(D, 256);
    s = sqrt(s);
    mpf_class v = (mpf_class(P, 256) + s) / mpf_class(Q, 256);
    return v.get_d();
}

QuadraticIrrational QuadraticIrrational::reciprocal() const { return QuadraticIrrational(-P, (D - P * P) / Q, D); }

bool QuadraticIrrational::operator==(const QuadraticIrrational& o) const {
    return sgn(Q) == sgn(o.Q) && P * o.Q == o.P * Q && D * o.Q * o.Q == o.D * Q * Q;
}

QuadraticIrrational root_of(const Form& f) {
    if (f.a == 0) throw DomainError("root_of: a must be non-zero");
    return QuadraticIrrational(-f.b, 2 * f.a, f.discriminant());
}

Form form_with_root(const QuadraticIrrational& x) {
    return primitive_part(Form(x.Q, -2 * x.P, (x.P * x.P - x.D) / x.Q));
}

std::size_t least_rotation(const std::vector<Int>& seq) {
    std::size_t n = seq.size(), best = 0;
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const Int& x = seq[(k + i) % n];
            const Int& y = seq[(best + i) % n];
            if (x != y) {
                if (x < y) best = k;
                break;
            }
        }
    }
    return best;
}

std::vector<Int> rotate_left(const std::vector<Int>& seq, std::size_t k) {
    std::vector<Int> out(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) out[i] = seq[(i + k) % seq.size()];
    return out;
}

std::vector<Int> minimal_period(const std::vector<Int>& seq) {
    std::size_t n = seq.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = seq[i] == seq[i - d];
        if (ok) return std::vector<Int>(seq.begin(), seq.begin() + d);
    }
    return seq;
}

ContinuedFraction ContinuedFraction::canonical() const {
    ContinuedFraction out = *this;
    out.period = minimal_period(out.period);
    // absorb trailing head terms into the period
    while (!out.head.empty() && out.head.back() == out.period.back()) {
        std::rotate(out.period.rbegin(), out.period.rbegin() + 1, out.period.rend());
        out.head.pop_back();
    }
    return out;
}

std::vector<Int> ContinuedFraction::terms(std::size_t n) const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < head.size())
            out.push_back(head[i]);
        else
            out.push_back(period[(i - head.size()) % period.size()]);
    }
    return out;
}

namespace {

ContinuedFraction expand(const QuadraticIrrational& x, Flavor flavor) {
    Int P = x.P, Q = x.Q;
    const Int& D = x.D;
    Int s = isqrt(D);
    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::vector<Int> terms;
    while (true) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            ContinuedFraction cf;
            cf.flavor = flavor;
            cf.head.assign(terms.begin(), terms.begin() + it->second);
            cf.period.assign(terms.begin() + it->second, terms.end());
            return cf.canonical();
        }
        seen.emplace(key, terms.size());
        Int a = floor_div(P + s + (Q < 0 ? 1 : 0), Q);
        if (flavor == Flavor::Minus) a += 1;
        terms.push_back(a);
        P = a * Q - P;
        Q = flavor == Flavor::Plus ? Int((D - P * P) / Q) : Int((P * P - D) / Q);
    }
}

Matrix step_matrix(const Int& a, Flavor flavor) {
    return flavor == Flavor::Plus ? Matrix(a, 1, 1, 0) : Matrix(a, -1, 1, 0);
}

}  // namespace

ContinuedFraction cf_plus(const QuadraticIrrational& x) { return expand(x, Flavor::Plus); }

ContinuedFraction cf_minus(const QuadraticIrrational& x) { return expand(x, Flavor::Minus); }

QuadraticIrrational value_of(const ContinuedFraction& cf) {
    if (cf.period.empty()) throw DomainError("value_of: empty period (rational expansions are unsupported)");
    Matrix m = identity();
    for (const Int& a : cf.period) m = m * step_matrix(a, cf.flavor);
    // z = M z  =>  r z^2 + (s - p) z - q = 0, z the root > 1
    Int P = m.p - m.s, Q = 2 * m.r, D = (m.s - m.p) * (m.s - m.p) + 4 * m.q * m.r;
    Matrix h = identity();
    for (const Int& a : cf.head) h = h * step_matrix(a, cf.flavor);
    // y = (alpha z + beta) / (gamma z + delta) with z = (P + sqrt D) / Q
    Int n1 = h.p * P + h.q * Q, d1 = h.r * P + h.s * Q;
    Int X = n1 * d1 - h.p * h.r * D;
    Int Y = h.p * d1 - n1 * h.r;
    Int Z = d1 * d1 - h.r * h.r * D;
    if (Y < 0) {
        X = -X;
        Y = -Y;
        Z = -Z;
    }
    return QuadraticIrrational(X, Z, Y * Y * D);
}

Rat convergent(const std::vector<Int>& terms, Flavor flavor) {
    int sg = flavor == Flavor::Plus ? 1 : -1;
    Int p0 = 0, p1 = 1, q0 = sg, q1 = 0;
    for (const Int& a : terms) {
        Int p2 = a * p1 + sg * p0;
        Int q2 = a * q1 + sg * q0;
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
    }
    Rat r(p1, q1);
    r.canonicalize();
    return r;
}

}  // namespace bqf
