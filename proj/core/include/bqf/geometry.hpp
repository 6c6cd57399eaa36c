#pragma once

#include <optional>
#include <string>

#include "bqf/forms.hpp"

namespace bqf {

// u + v i with u = alpha/beta, v = gamma/delta, v > 0.
struct GaussianRationalPoint {
    Rat u, v;

    GaussianRationalPoint() = default;
    GaussianRationalPoint(Rat u_, Rat v_);  // checks v > 0

    Int alpha() const { return u.get_num(); }
    Int beta() const { return u.get_den(); }
    Int gamma() const { return v.get_num(); }
    Int delta() const { return v.get_den(); }
    Rat norm() const { return u * u + v * v; }  // squared distance to 0
    bool operator==(const GaussianRationalPoint& o) const { return u == o.u && v == o.v; }
};

std::string to_string(const GaussianRationalPoint& p);

// (beta^2 delta, -2 alpha beta delta, alpha^2 delta + beta^2 gamma)
Form form_of_point(const GaussianRationalPoint& w);
// Root (-b + sqrt(d)) / 2a of a positive definite form; needs |d| a perfect square.
GaussianRationalPoint point_of_form(const Form& f);
bool in_exact_domain(const Form& f);

struct Locus {
    enum class Kind { HorocycleAtInfinity, Line, HorocycleAtZero };
    Kind kind;
    Rat param;  // v = param/2 | v = param u | u^2 + (v - 1/param)^2 = 1/param^2

    bool contains(const GaussianRationalPoint& p) const;
    bool operator==(const Locus& o) const { return kind == o.kind && param == o.param; }
};

std::string to_string(const Locus& h);
const char* kind_name(Locus::Kind k);

std::optional<Locus> common_locus(const Form& f1, const Form& f2);

struct ProductPointReport {
    Form product;
    Locus locus;
    bool on_locus = false;
    bool closest = false;
    std::size_t candidates = 0;  // (a, b) pairs examined
    std::size_t members = 0;     // members of the product class found on the locus
    bool ok() const { return on_locus && closest; }
};

// The product of a concordant pair on a common locus lies on that locus and is
// the member of its class on the locus closest to 0. Checked against every
// class member with 1 <= a <= window and |b| <= window.
ProductPointReport product_point_report(const Form& f1, const Form& f2, long window = 40);
bool product_point_check(const Form& f1, const Form& f2);

}  // namespace bqf
