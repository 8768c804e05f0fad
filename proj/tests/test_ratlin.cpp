#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minmod/ratlin.hpp"

#include <random>

using namespace minmod;

TEST_CASE("rational canonical form")
{
    Rational r = rat(2, 4);
    CHECK(r.get_num() == 1);
    CHECK(r.get_den() == 2);
    r = rat(-3, -6);
    CHECK(r.get_num() == 1);
    CHECK(r.get_den() == 2);
    r = rat(3, -6);
    CHECK(r.get_num() == -1);
    CHECK(r.get_den() == 2);
    CHECK(is_zero(rat(0, 7)));
    CHECK(rat(0, 7).get_den() == 1);
}

TEST_CASE("rref: zero, identity, dependent rows")
{
    RatMatrix z(1, 1);
    RrefResult r = rref(z);
    CHECK(r.pivots.empty());
    CHECK(is_zero(r.mat.at(0, 0)));

    RatMatrix id = RatMatrix::identity(3);
    r = rref(id);
    CHECK(r.mat == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

    // [[2,4],[1,2]] -> [[1,2],[0,0]], pivots [0]
    RatMatrix m = RatMatrix::from_rows({{rat(2), rat(4)}, {rat(1), rat(2)}});
    r = rref(m);
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(r.mat.at(0, 0) == 1);
    CHECK(r.mat.at(0, 1) == 2);
    CHECK(is_zero(r.mat.at(1, 0)));
    CHECK(is_zero(r.mat.at(1, 1)));
}

TEST_CASE("kernel: identity, zero matrix, one relation")
{
    CHECK(kernel(RatMatrix::identity(4)).dim() == 0);

    RatMatrix z(2, 3);
    Subspace k = kernel(z);
    CHECK(k.dim() == 3);
    CHECK(k == Subspace::full(3));

    RatMatrix m = RatMatrix::from_rows({{rat(1), rat(1)}});
    k = kernel(m);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis()[0][0] == 1);
    CHECK(k.basis()[0][1] == -1);
}

TEST_CASE("solve: identity, underdetermined, inconsistent")
{
    RatVector b = {rat(3), rat(-1), rat(7, 2)};
    auto x = solve(RatMatrix::identity(3), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    // [[1,1]], b=[3] -> (3,0) by the first-pivot convention
    auto y = solve(RatMatrix::from_rows({{rat(1), rat(1)}}), {rat(3)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == 3);
    CHECK(is_zero((*y)[1]));

    auto n = solve(RatMatrix(1, 1), {rat(1)});
    CHECK(!n.has_value());
}

TEST_CASE("quotient_basis edge cases")
{
    Subspace big = Subspace::full(2);
    Subspace diag = Subspace::span(2, {{rat(1), rat(0)}});
    auto reps = quotient_basis(big, big);
    CHECK(reps.empty());

    reps = quotient_basis(big, diag);
    REQUIRE(reps.size() == 1);
    // representative must be congruent to (0,1) mod span{(1,0)}
    RatVector r = diag.reduce(reps[0]);
    CHECK(is_zero(r[0]));
    CHECK(r[1] == 1);

    Subspace three = Subspace::full(3);
    reps = quotient_basis(three, Subspace(3));
    CHECK(reps.size() == 3);

    CHECK_THROWS_AS(quotient_basis(diag, big), std::invalid_argument);
}

TEST_CASE("property: rref idempotent, rank-nullity, solve exact")
{
    std::mt19937 rng(0);
    std::uniform_int_distribution<int> dim(1, 8), val(-6, 6), den(1, 4);
    for (int iter = 0; iter < 200; iter++) {
        std::size_t rows = dim(rng), cols = dim(rng);
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; i++)
            for (std::size_t j = 0; j < cols; j++)
                m.at(i, j) = rat(val(rng), den(rng));

        RrefResult once = rref(m);
        RrefResult twice = rref(once.mat);
        CHECK(once.mat == twice.mat);
        CHECK(once.pivots == twice.pivots);

        CHECK(rank(m) + kernel(m).dim() == cols);

        RatVector b(rows);
        for (std::size_t i = 0; i < rows; i++)
            b[i] = rat(val(rng), den(rng));
        auto x = solve(m, b);
        if (x.has_value())
            CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("subspace sum and intersection")
{
    Subspace a = Subspace::span(3, {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}});
    Subspace b = Subspace::span(3, {{rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}});
    CHECK(a.sum(b) == Subspace::full(3));
    Subspace i = a.intersect(b);
    REQUIRE(i.dim() == 1);
    CHECK(i.contains(RatVector{rat(0), rat(1), rat(0)}));
}
