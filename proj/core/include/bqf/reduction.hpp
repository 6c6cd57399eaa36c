#pragma once

#include <vector>

#include "bqf/forms.hpp"

namespace bqf {

struct Reduced {
    Form form;
    Matrix witness;  // act(witness, input) == form
};

// Positive definite: the unique reduced form of the class.
Reduced reduce_definite(const Form& f);

// One Gauss step for indefinite forms: act([[0,-1],[1,t]], f).
Reduced rho(const Form& f);

struct GaussCycle {
    std::vector<Form> cycle;  // G-reduced forms in rho order
    Matrix witness;           // act(witness, input) == cycle[0]
};
GaussCycle gauss_reduce_indefinite(const Form& f);

struct ZagierResult {
    std::vector<Form> preperiod;
    std::vector<Form> cycle;
    std::vector<Int> steps;  // n for each step starting at the entry form
    Form entry;              // form the steps start from (after sign handling)
};
// One Zagier step; requires a > 0.
Form zagier_step(const Form& f, Int* n_out = nullptr);
ZagierResult zagier_reduce(const Form& f);

// zagier_reduce over every form with |a|, |b|, |c| <= bound and non-square
// positive discriminant, on machine integers. Each run must reach a cycle of
// Z-reduced forms, and its steps must match cf_minus of (b + sqrt d) / 2a.
struct ZagierScanReport {
    std::uint64_t forms = 0;
    std::uint64_t reduced = 0;     // cycle found and Z-reduced throughout
    std::uint64_t cf_matches = 0;  // step sequence equals the minus expansion
    std::optional<Form> first_failure;
};
ZagierScanReport scan_zagier_box(int bound);
// All Z-reduced forms of discriminant d > 0 (no primitivity filter).
std::vector<Form> z_reduced_forms(const Int& d);
// All G-reduced forms of discriminant d > 0, sorted.
std::vector<Form> g_reduced_forms(const Int& d, bool primitive_only = true);
// Number of proper classes of primitive forms (cycles of G-reduced forms).
Int narrow_class_number(const Int& d);

// (P + sqrt(D)) / Q with Q | D - P^2 after normalisation.
struct QuadraticIrrational {
    Int P, Q, D;

    QuadraticIrrational() = default;
    QuadraticIrrational(Int p, Int q, Int d);  // normalises

    // -1, 0, 1 as value < r, == r, > r
    int compare(const Rat& r) const;
    Int floor() const;
    double approx() const;
    QuadraticIrrational negated() const { return QuadraticIrrational(P, -Q, D); }
    QuadraticIrrational reciprocal() const;
    bool operator==(const QuadraticIrrational& o) const;
};

// omega_f = (-b + sqrt(disc)) / 2a
QuadraticIrrational root_of(const Form& f);
// Primitive form g with root_of(g) == x (leading coefficient sign chosen accordingly).
Form form_with_root(const QuadraticIrrational& x);

enum class Flavor { Plus, Minus };

struct ContinuedFraction {
    Flavor flavor = Flavor::Plus;
    std::vector<Int> head;
    std::vector<Int> period;

    bool operator==(const ContinuedFraction& o) const {
        return flavor == o.flavor && head == o.head && period == o.period;
    }
    // Minimal period and shortest head; two expansions of one value agree
    // after this.
    ContinuedFraction canonical() const;
    // First n partial quotients of the (infinite) expansion.
    std::vector<Int> terms(std::size_t n) const;
};

ContinuedFraction cf_plus(const QuadraticIrrational& x);
ContinuedFraction cf_minus(const QuadraticIrrational& x);
// Exact value of an eventually periodic plus expansion.
QuadraticIrrational value_of(const ContinuedFraction& cf);

// Convergent p/q of a finite prefix.
Rat convergent(const std::vector<Int>& terms, Flavor flavor);

// Lexicographically least rotation of a cyclic sequence and its offset.
std::size_t least_rotation(const std::vector<Int>& seq);
std::vector<Int> rotate_left(const std::vector<Int>& seq, std::size_t k);
std::vector<Int> minimal_period(const std::vector<Int>& seq);

struct PellSolution {
    Int t, u, m, D;
};
// Smallest positive (t, u) with t^2 - D u^2 = m^2.
PellSolution pell(const Int& D, const Int& m = 1, Budget* budget = nullptr);

enum class Hypothesis { Ordinary, Narrow };

struct HirzebruchReport {
    Int p;
    std::vector<Int> period;  // minimal period of cf_minus(sqrt p)
    Int sum;                  // sum of period
    Int class_number;         // sum/3 - r
    Int narrow_class_number_4p;
    Int class_number_4p;
    Hypothesis hypothesis;
};
HirzebruchReport hirzebruch_class_number(const Int& p, Hypothesis h = Hypothesis::Ordinary);

// Brute-force number of reduced primitive positive definite forms of discriminant d < 0.
Int definite_class_number(const Int& d);

}  // namespace bqf
