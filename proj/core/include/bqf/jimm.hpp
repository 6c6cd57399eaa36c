#pragma once

#include "bqf/forms.hpp"
#include "bqf/reduction.hpp"

namespace bqf {

// J on real quadratic irrationals: [a0; a1, a2, ...] -> [1_{a0-1}, 2, 1_{a1-2}, 2, ...],
// extended by J(1/x) = 1/J(x) and J(-x) = -1/J(x). Noble inputs are rejected.
QuadraticIrrational jimm_value(const QuadraticIrrational& x);
ContinuedFraction jimm_cf(const ContinuedFraction& cf);

// The rewrite alone, on a finite list of partial quotients (a0 >= 1, ai >= 1).
// A trailing run that is still open is dropped.
std::vector<Int> jimm_rewrite(const std::vector<Int>& terms);

struct JimmImage {
    Form image;         // form whose root is J(root of f)
    FormClass proper;   // its proper class
    FormClass extended; // lesser of [g] and [(-a, b, -c)]; independent of the representative
};
JimmImage jimm_class(const Form& f);

}  // namespace bqf
