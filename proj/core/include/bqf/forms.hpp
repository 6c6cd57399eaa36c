#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "bqf/integer.hpp"

namespace bqf {

// ax^2 + bxy + cy^2
struct Form {
    Int a, b, c;

    Form() = default;
    Form(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    Int discriminant() const { return b * b - 4 * a * c; }
    Int operator()(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }

    bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const Form& o) const { return !(*this == o); }
    bool operator<(const Form& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// Checked constructor: rejects zero or square discriminants.
Form make_form(const Int& a, const Int& b, const Int& c);

std::ostream& operator<<(std::ostream& os, const Form& f);
std::string to_string(const Form& f);

Int discriminant(const Form& f);

enum class Kind { PositiveDefinite, NegativeDefinite, Indefinite };
Kind classify(const Form& f);
const char* kind_name(Kind k);

Int content(const Form& f);
bool is_primitive(const Form& f);
Form primitive_part(const Form& f);
Form negate(const Form& f);

// [[p,q],[r,s]] with ps - qr = 1, taken up to sign. `word` is an optional
// spelling over L = [[1,-1],[1,0]] and S = [[0,-1],[1,0]].
struct Matrix {
    Int p = 1, q = 0, r = 0, s = 1;
    std::string word;

    Matrix() = default;
    Matrix(Int p_, Int q_, Int r_, Int s_, std::string w = {})
        : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), s(std::move(s_)), word(std::move(w)) {}

    Int det() const { return p * s - q * r; }
    Int trace() const { return p + s; }
    Matrix canonical() const;  // first non-zero entry positive
    Matrix inverse() const;
    Matrix transpose() const;
    Matrix neg() const { return Matrix(-p, -q, -r, -s, word); }
    bool is_identity() const;

    Matrix operator*(const Matrix& o) const;
    // Equality in PSL2(Z): up to global sign; the word is ignored.
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix identity();
Matrix gen_L();
Matrix gen_S();
Matrix translation(const Int& k);    // [[1,k],[0,1]]
Matrix lower(const Int& k);          // [[1,0],[k,1]]
Matrix unimodular(const Int& p, const Int& q, const Int& r, const Int& s);  // checks det

// Change of variables: act(g, f)(x, y) = f(px + qy, rx + sy). This is a right
// action: act(g1, act(g2, f)) == act(g2 * g1, f).
Form act(const Matrix& g, const Form& f);

// Words over {L, S}.
Matrix matrix_of_word(const std::string& word);
std::string reduce_word(const std::string& word);  // cancels SS and LLL
std::string word_of(const Matrix& m);              // reduced normal form
Matrix with_word(Matrix m);
// Groups a word into (L²S)^k / (LS)^k blocks, e.g. "(L²S)³(LS)".
std::string format_blocks(const std::string& word);

// Reduction predicates.
bool is_reduced_definite(const Form& f);  // positive definite only
bool is_g_reduced(const Form& f);         // indefinite only
bool is_z_reduced(const Form& f);         // indefinite only
bool is_semi_reduced(const Form& f);      // indefinite only

struct ReductionStatus {
    std::optional<bool> reduced_definite, g_reduced, z_reduced, semi_reduced;
};
ReductionStatus reduction_status(const Form& f);

// Canonical class representative and equivalence.
struct FormClass {
    Form representative;

    bool operator==(const FormClass& o) const { return representative == o.representative; }
    bool operator!=(const FormClass& o) const { return !(*this == o); }
    bool operator<(const FormClass& o) const { return representative < o.representative; }
};

FormClass class_of(const Form& f);
std::optional<Matrix> equivalent(const Form& f, const Form& g);

}  // namespace bqf
