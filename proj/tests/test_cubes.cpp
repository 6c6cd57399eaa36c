#include <doctest.h>

#include <bqf/composition.hpp>
#include <bqf/cubes.hpp>
#include <random>

#include "support.hpp"

using namespace bqf;

TEST_SUITE("cubes") {

TEST_CASE("slices and forms") {
    Cube c(0, 1, 2, 1, 1, 0, -1, -3);
    Slicing s = slice(c);
    CHECK(s.F == Slice{0, 1, 2, 1});
    CHECK(s.B == Slice{1, 0, -1, -3});
    CHECK(s.U == Slice{0, 1, 1, 0});
    CubeForms f = cube_forms(c);
    CHECK(f.ud == F(1, 0, 5));
    CHECK(f.lr == F(2, 2, 3));
    CHECK(f.fb == F(2, -2, 3));
    CHECK(f.discriminant == -20);
    CHECK_FALSE(f.degenerate);
    CHECK(triple_product_check(c));
}

TEST_CASE("identity cube is degenerate") {
    CubeForms f = cube_forms(Cube(1, 0, 0, 1, 0, 0, 1, 0));
    CHECK(f.degenerate);
    CHECK_THROWS_AS(triple_product_check(Cube(1, 0, 0, 1, 0, 0, 1, 0)), DomainError);
}

TEST_CASE("slice discriminants agree") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> e(-30, 30);
    for (int i = 0; i < 2000; ++i) {
        Cube c(e(rng), e(rng), e(rng), e(rng), e(rng), e(rng), e(rng), e(rng));
        CubeForms f = cube_forms(c);
        CHECK(f.ud.discriminant() == f.lr.discriminant());
        CHECK(f.lr.discriminant() == f.fb.discriminant());
    }
}

TEST_CASE("action along one direction") {
    Cube c(0, 1, 2, 1, 1, 0, -1, -3);
    Matrix g = M(2, 1, 1, 1);
    for (Direction dir : {Direction::UD, Direction::LR, Direction::FB}) {
        CubeForms before = cube_forms(c), after = cube_forms(act3(g, dir, c));
        const Form* b[3] = {&before.ud, &before.lr, &before.fb};
        const Form* a[3] = {&after.ud, &after.lr, &after.fb};
        int k = static_cast<int>(dir);
        for (int j = 0; j < 3; ++j) {
            if (j == k)
                CHECK(*a[j] == act(g.transpose(), *b[j]));
            else
                CHECK(*a[j] == *b[j]);
        }
    }
}

TEST_CASE("cube from a pair") {
    Cube c = cube_from_pair(F(1, 0, 5), F(2, 2, 3));
    CHECK(c == Cube(0, 1, 2, 1, 1, 0, -1, -3));
    Form f1 = F(25, 111, -33), f2 = F(-61, 35, 59);
    Cube d = cube_from_pair(f1, f2);
    CubeForms cf = cube_forms(d);
    CHECK(cf.ud == f1);
    CHECK(cf.lr == f2);
    CHECK(class_of(cf.fb) == inverse(compose(class_of(f1), class_of(f2))));
    CHECK(triple_product_check(d));
    CHECK_THROWS_AS(cube_from_pair(F(1, 0, 5), F(1, 0, 1)), DomainError);
}

TEST_CASE("small exhaustive box") {
    BoxScanReport r = scan_triple_product_box(2);
    CHECK(r.cubes == 390625);
    CHECK(r.checked == 92496);
    CHECK(r.failures == 0);
}

}  // TEST_SUITE
