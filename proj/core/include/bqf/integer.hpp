#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bqf {

using Int = mpz_class;
using Rat = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step counter for search loops. A null Budget* means unlimited.
class Budget {
public:
    explicit Budget(std::uint64_t limit) : limit_(limit) {}

    void step(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_)
            throw BudgetExhausted("search budget of " + std::to_string(limit_) + " steps exhausted");
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

    static constexpr std::uint64_t kDefault = 1'000'000;

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

inline void charge(Budget* b, std::uint64_t n = 1) {
    if (b) b->step(n);
}

int sign(const Int& x);
Int abs(const Int& x);
Int gcd(const Int& a, const Int& b);
Int isqrt(const Int& n);  // floor sqrt, n >= 0
bool is_square(const Int& n);
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int mod(const Int& a, const Int& m);  // result in [0, |m|)

struct Egcd {
    Int g, x, y;  // a*x + b*y = g >= 0
};
Egcd egcd(const Int& a, const Int& b);

// Inverse of a modulo m (m > 0); throws DomainError if not invertible.
Int inv_mod(const Int& a, const Int& m);

// Exact comparisons against sqrt(D), D > 0.
bool lt_sqrt(const Int& x, const Int& D);  // x < sqrt(D)
bool gt_sqrt(const Int& x, const Int& D);  // x > sqrt(D)

std::string to_string(const Int& x);
Int parse_int(const std::string& s);
bool fits_int64(const Int& x);
std::int64_t to_int64(const Int& x);

// Prime factorisation of |n| by trial division; intended for small inputs.
std::vector<std::pair<Int, unsigned>> factor(const Int& n);
bool is_prime(const Int& n);

}  // namespace bqf
