#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bqf/forms.hpp"

namespace bqf {

// Alternating Farey bunch sizes, inner bunch first. Stored as the least
// rotation by an even offset, so inner and outer roles are kept.
struct BunchCode {
    std::vector<Int> runs;

    static BunchCode canonical(std::vector<Int> runs);
    bool operator==(const BunchCode& o) const { return runs == o.runs; }
    bool operator!=(const BunchCode& o) const { return runs != o.runs; }
    Int total() const;  // river edges per period
};

std::string to_string(const BunchCode& c);

// Code of the inverse class: reversal, re-read inner first.
BunchCode inverse_code(const BunchCode& c);
bool is_symmetric(const BunchCode& c);

struct Cark {
    Form form;                // the input form
    Matrix to_river;          // act(to_river, form) == river.front()
    std::string moves;        // 'B' (new face inner) / 'T' (outer), one per river edge
    std::vector<Form> river;  // (f(u), h, f(v)) with f(u) > 0 > f(v), walk order
    BunchCode code;
    std::vector<Form> spine;  // S g0, g0, S g1, g1, ...
    std::size_t base = 0;     // spine index of the least G-reduced form
    Matrix automorph;         // W_f with its word
};

// Generator of Aut(f) with positive trace; word over L, S attached.
Matrix aut_generator(const Form& f);
Cark cark_of(const Form& f);
bool is_ambiguous_symmetric(const Form& f);

struct Representation {
    std::vector<std::pair<Int, Int>> solutions;  // one primitive vector per orbit
    std::size_t faces_visited = 0;
    bool monotone = true;  // labels grew away from the river on every explored path
};

// Primitive solutions of f(X, Y) = N up to Aut(f) and -I. Each orbit is
// reported by its member of least X^2 + Y^2 (ties: lexicographic).
Representation represent(const Form& f, const Int& N, Budget* budget = nullptr);

std::pair<Int, Int> orbit_representative(const Form& f, const std::pair<Int, Int>& v);

// Graphviz rendering of the cark with tributaries cut at `depth`.
std::string export_dot(const Cark& c, int depth);

}  // namespace bqf
