#include <doctest.h>

#include <bqf/carks.hpp>
#include <bqf/composition.hpp>
#include <cmath>

#include "support.hpp"

using namespace bqf;

namespace {

// least t, u > 0 with t^2 - d u^2 = 4, by search
std::pair<long, long> pell4(long d) {
    for (long u = 1;; ++u) {
        long t2 = d * u * u + 4;
        long t = static_cast<long>(std::llround(std::sqrt(double(t2))));
        if (t * t == t2) return {t, u};
    }
}

}  // namespace

TEST_SUITE("carks") {

TEST_CASE("running example") {
    Form f = F(25, 111, -33);
    Matrix w = aut_generator(f);
    CHECK(w == M(7, 33, 25, 118));
    CHECK(w.trace() == 125);
    CHECK(format_blocks(w.word) == "(L²S)³(LS)(L²S)(LS)²(L²S)(LS)⁴");
    Cark c = cark_of(f);
    CHECK(c.code == BunchCode::canonical(ints({3, 1, 1, 2, 1, 4})));
    CHECK(c.code.runs == ints({1, 2, 1, 4, 3, 1}));
    CHECK(c.code.total() == 12);
    CHECK(c.moves.size() == 12);
    CHECK(c.spine.size() == 2 * c.moves.size());
    CHECK(c.spine[c.base] == F(-77, 89, 25));
    CHECK(inverse_code(c.code) == cark_of(F(25, -111, -33)).code);
    CHECK_FALSE(is_symmetric(c.code));
    CHECK_FALSE(is_ambiguous_symmetric(f));
}

TEST_CASE("codes from the river walk") {
    struct Row {
        Form f;
        std::vector<Int> code;
    };
    std::vector<Row> rows = {
        {F(1, 1, -1), ints({1, 1})},
        {F(1, 0, -2), ints({2, 2})},
        {F(1, 0, -3), ints({1, 2})},
        {F(2, 3, -1), ints({1, 1, 3, 1, 1, 3})},
        {F(-55, 89, 35), ints({1, 3, 17, 1})},
        {F(3, 5, -7), ints({1, 1, 2, 1, 9, 1, 2, 1, 1, 2, 1, 9, 1, 2})},
        {F(1, 0, -7), ints({1, 1, 1, 4})},
    };
    for (const Row& r : rows) CHECK(cark_of(r.f).code.runs == r.code);
}

TEST_CASE("code is a class invariant") {
    Form f = F(-55, 89, 35);
    for (Matrix g : {M(1, 1, 0, 1), M(0, -1, 1, 0), M(2, 1, 1, 1), M(5, 2, 2, 1)})
        CHECK(cark_of(act(g, f)).code == cark_of(f).code);
}

TEST_CASE("automorph from the Pell equation t^2 - d u^2 = 4") {
    for (Form f : {F(1, 1, -1), F(1, 0, -2), F(2, 3, -1), F(3, 5, -7), F(25, 111, -33), F(-55, 89, 35)}) {
        long d = to_int64(f.discriminant());
        auto [t, u] = pell4(d);
        Matrix expect((t - to_int64(f.b) * u) / 2, -to_int64(f.c) * u, to_int64(f.a) * u, (t + to_int64(f.b) * u) / 2);
        Matrix w = aut_generator(f);
        CHECK(w == expect);
        CHECK(act(w, f) == f);
    }
}

TEST_CASE("symmetry and ambiguity") {
    for (Form f : {F(1, 0, -2), F(1, 0, -3), F(1, 0, -7), F(2, 0, -3), F(3, 5, -7), F(25, 111, -33)})
        CHECK(is_symmetric(cark_of(f).code) == is_ambiguous(f));
    CHECK(is_symmetric(BunchCode::canonical(ints({1, 2, 1, 2}))));
    CHECK_THROWS_AS(BunchCode::canonical(ints({1, 2, 3})), DomainError);
}

TEST_CASE("representations") {
    struct Row {
        Form f;
        long N;
        std::size_t orbits;
    };
    // orbit counts: brute-force vectors divided by the automorphism group
    std::vector<Row> rows = {{F(1, 0, 1), 25, 2}, {F(1, 1, 1), 7, 2}, {F(2, 1, 3), 6, 1}, {F(1, 0, 1), 3, 0}};
    for (const Row& r : rows) {
        Representation rep = represent(r.f, r.N);
        CHECK(rep.solutions.size() == r.orbits);
        for (auto [x, y] : rep.solutions) CHECK(r.f(x, y) == r.N);
    }
    Representation a = represent(F(25, 111, -33), 25);
    REQUIRE(a.solutions.size() == 1);
    CHECK(a.solutions[0] == std::make_pair(Int(1), Int(0)));
    CHECK(a.monotone);
    Representation b = represent(F(1, 1, -1), -1);
    REQUIRE(b.solutions.size() == 1);
    CHECK(b.solutions[0] == std::make_pair(Int(0), Int(1)));
    Budget tiny(3);
    CHECK_THROWS_AS(represent(F(1, 1, -1), 1000, &tiny), BudgetExhausted);
}

TEST_CASE("orbit representative") {
    Form f = F(1, 1, -1);
    Matrix w = aut_generator(f);
    std::pair<Int, Int> v{2, 1};
    std::pair<Int, Int> moved{w.p * v.first + w.q * v.second, w.r * v.first + w.s * v.second};
    CHECK(orbit_representative(f, moved) == orbit_representative(f, v));
}

TEST_CASE("dot export") {
    Cark c = cark_of(F(1, 1, -1));
    std::string dot = export_dot(c, 1);
    CHECK(dot.rfind("graph cark {", 0) == 0);
    CHECK(dot.find("color=red") != std::string::npos);
    CHECK(dot == export_dot(cark_of(F(1, 1, -1)), 1));
}

}  // TEST_SUITE
