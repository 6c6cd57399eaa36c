#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "bqf/forms.hpp"

namespace bqf {

// Octuple (a,b,c,d,e,f,g,h). Entry index is 4k + 2i + j with
// k the front/back axis, i up/down and j left/right.
struct Cube {
    std::array<Int, 8> v;

    Cube() { v.fill(0); }
    explicit Cube(std::array<Int, 8> x) : v(std::move(x)) {}
    Cube(long a, long b, long c, long d, long e, long f, long g, long h) : v{a, b, c, d, e, f, g, h} {}

    const Int& operator[](std::size_t i) const { return v[i]; }
    bool operator==(const Cube& o) const { return v == o.v; }
};

std::ostream& operator<<(std::ostream& os, const Cube& c);

// Plain 2x2 integer matrix (slices need not be unimodular).
struct Slice {
    Int p, q, r, s;
    bool operator==(const Slice& o) const { return p == o.p && q == o.q && r == o.r && s == o.s; }
};

struct Slicing {
    Slice U, D, L, R, F, B;
};
Slicing slice(const Cube& c);

enum class Direction { UD, LR, FB };

struct CubeForms {
    Form ud, lr, fb;
    Int discriminant;
    bool degenerate = false;  // zero or square discriminant
};
// f_UD = -det(Ux + Dy) and likewise for LR, FB.
CubeForms cube_forms(const Cube& c);
bool is_primitive(const Cube& c);  // all three forms primitive

// (M, N) -> (pM + qN, rM + sN) on the pair of the given direction. The form of
// that direction becomes act(g^T, f); the other two forms are unchanged.
Cube act3(const Matrix& g, Direction dir, const Cube& c);
Cube act3(const Matrix& g_ud, const Matrix& g_lr, const Matrix& g_fb, const Cube& c);

// [f_UD][f_LR][f_FB] == identity class. Negative definite slices are read as
// (-a, b, -c).
bool triple_product_check(const Cube& c);

// Primitive cube with f_UD == f1 and f_LR == f2 exactly.
Cube cube_from_pair(const Form& f1, const Form& f2);

struct BoxScanReport {
    std::uint64_t cubes = 0;       // all octuples visited
    std::uint64_t checked = 0;     // primitive, non-degenerate
    std::uint64_t failures = 0;
    std::optional<Cube> first_failure;
};
// Every cube with entries in [-bound, bound]; bound <= 4.
BoxScanReport scan_triple_product_box(int bound = 4);

}  // namespace bqf
