#include "bqf/integer.hpp"

namespace bqf {

int sign(const Int& x) { return sgn(x); }

Int abs(const Int& x) {
    Int r;
    mpz_abs(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw DomainError("isqrt of negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Egcd egcd(const Int& a, const Int& b) {
    Egcd e;
    mpz_gcdext(e.g.get_mpz_t(), e.x.get_mpz_t(), e.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return e;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (m == 1) return 0;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw DomainError("no modular inverse");
    return r;
}

bool lt_sqrt(const Int& x, const Int& D) { return sgn(x) < 0 || x * x < D; }

bool gt_sqrt(const Int& x, const Int& D) { return sgn(x) > 0 && x * x > D; }

std::string to_string(const Int& x) { return x.get_str(); }

Int parse_int(const std::string& s) {
    Int r;
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || r.set_str(t, 10) != 0) throw DomainError("not an integer: '" + s + "'");
    return r;
}

bool fits_int64(const Int& x) {
    static const Int lo = Int("-9223372036854775808");
    static const Int hi = Int("9223372036854775807");
    return x >= lo && x <= hi;
}

std::int64_t to_int64(const Int& x) {
    if (!fits_int64(x)) throw DomainError("integer exceeds 64 bits");
    if (x.fits_slong_p()) return x.get_si();
    return static_cast<std::int64_t>(std::stoll(x.get_str()));
}

std::vector<std::pair<Int, unsigned>> factor(const Int& n) {
    std::vector<std::pair<Int, unsigned>> out;
    Int m = abs(n);
    if (m <= 1) return out;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

bool is_prime(const Int& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

}  // namespace bqf
