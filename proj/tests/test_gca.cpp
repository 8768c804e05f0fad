#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minmod/gca.hpp"

#include <random>

using namespace minmod;

namespace {

GradedSpace two_odd()
{
    return GradedSpace({{0, "x", 1}, {1, "y", 1}});
}

GradedSpace xy23()
{
    return GradedSpace({{0, "x", 2}, {1, "y", 3}});
}

} // namespace

TEST_CASE("normalize: unit, odd transposition, odd square")
{
    GradedSpace s = two_odd();
    SignedMonomial m = normalize(s, {});
    CHECK(m.sign == 1);
    CHECK(m.mono.is_unit());

    // [y, x] -> -xy for odd x, y
    m = normalize(s, {1, 0});
    CHECK(m.sign == -1);
    CHECK(m.mono.factors == std::vector<int>{0, 1});

    GradedSpace odd3({{0, "x", 3}});
    m = normalize(odd3, {0, 0});
    CHECK(m.sign == 0);

    CHECK_THROWS_AS(normalize(s, {5}), std::invalid_argument);
}

TEST_CASE("normalize is neutral on canonical words")
{
    GradedSpace s({{0, "a", 1}, {1, "b", 2}, {2, "c", 2}});
    SignedMonomial m = normalize(s, {0, 1, 1, 2});
    CHECK(m.sign == 1);
    SignedMonomial again = normalize(s, m.mono.factors);
    CHECK(again.sign == 1);
    CHECK(again.mono == m.mono);
}

TEST_CASE("multiply: unit, anticommutation, odd square expansion")
{
    GradedSpace s = two_odd();
    Element x = Element::generator(s, 0), y = Element::generator(s, 1);
    Element one = Element::scalar(1);
    CHECK(multiply(s, one, y) == y);

    Element xy = multiply(s, x, y);
    Element yx = multiply(s, y, x);
    CHECK(yx == -xy);

    // (x+y)^2 = x^2 + xy + yx + y^2 = 0 for odd x, y: the squares die and
    // the cross terms cancel.  The 2xy shows up in the commutator instead.
    Element sum = x + y;
    Element sq = multiply(s, sum, sum);
    CHECK(sq.is_zero());
    CHECK(xy - yx == xy * rat(2));
}

TEST_CASE("monomial_basis enumeration with odd-square exclusion")
{
    GradedSpace s = xy23();
    auto b0 = monomial_basis(s, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].is_unit());

    auto b5 = monomial_basis(s, 5);
    REQUIRE(b5.size() == 1);
    CHECK(b5[0].factors == std::vector<int>{0, 1}); // xy

    // degree 6: x^3 survives, y^2 is excluded (y odd)
    auto b6 = monomial_basis(s, 6);
    REQUIRE(b6.size() == 1);
    CHECK(b6[0].factors == std::vector<int>{0, 0, 0});
}

TEST_CASE("monomial_basis requires cap for degree-0 generators")
{
    GradedSpace s({{0, "u", 0}});
    CHECK_THROWS_AS(monomial_basis(s, 0), std::invalid_argument);
    auto b = monomial_basis(s, 0, 3);
    CHECK(b.size() == 4); // 1, u, u^2, u^3
}

TEST_CASE("apply_derivation: unit, even square, Heisenberg relation")
{
    GradedSpace s = xy23();
    Derivation d(1);
    d.set_value(s, 1, multiply(s, Element::generator(s, 0), Element::generator(s, 0)));

    CHECK(apply_derivation(s, d, Element::scalar(1)).is_zero());

    // d(x^2) = 2x dx = 0 here; with dx = 0 the square dies
    Element x2 = multiply(s, Element::generator(s, 0), Element::generator(s, 0));
    CHECK(apply_derivation(s, d, x2).is_zero());

    GradedSpace h({{0, "v1", 1}, {1, "v2", 1}, {2, "v3", 1}});
    Derivation dh(1);
    dh.set_value(h, 2, multiply(h, Element::generator(h, 0), Element::generator(h, 1)));
    // d(v1 v3) = -v1 (v1 v2) = 0 by the odd square
    Element v1v3 = multiply(h, Element::generator(h, 0), Element::generator(h, 2));
    CHECK(apply_derivation(h, dh, v1v3).is_zero());
    // d(v2 v3) = -v2 v1 v2 = 0 as well, but d(v3) itself is v1 v2
    CHECK(apply_derivation(h, dh, Element::generator(h, 2)) ==
          multiply(h, Element::generator(h, 0), Element::generator(h, 1)));
}

TEST_CASE("matrix_of_derivation: zero map, S^2 relation, d squared")
{
    GradedSpace s = xy23();
    Derivation zero(1);
    RatMatrix mz = matrix_of_derivation(s, zero, 2);
    for (std::size_t i = 0; i < mz.rows(); i++)
        for (std::size_t j = 0; j < mz.cols(); j++)
            CHECK(is_zero(mz.at(i, j)));

    Derivation d(1);
    d.set_value(s, 1, multiply(s, Element::generator(s, 0), Element::generator(s, 0)));
    RatMatrix m3 = matrix_of_derivation(s, d, 3); // y -> x^2
    REQUIRE(m3.rows() == 1);
    REQUIRE(m3.cols() == 1);
    CHECK(m3.at(0, 0) == 1);

    for (int n = 0; n <= 9; n++) {
        RatMatrix a = matrix_of_derivation(s, d, n);
        RatMatrix b = matrix_of_derivation(s, d, n + 1);
        RatMatrix sq = b * a;
        for (std::size_t i = 0; i < sq.rows(); i++)
            for (std::size_t j = 0; j < sq.cols(); j++)
                CHECK(is_zero(sq.at(i, j)));
    }
}

TEST_CASE("property: graded commutativity and associativity")
{
    GradedSpace s({{0, "a", 1}, {1, "b", 1}, {2, "c", 2}, {3, "e", 3}});
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> val(-3, 3), pick(0, 3), len(1, 2);

    auto random_homog = [&](int target_deg) {
        Element e;
        for (int tries = 0; tries < 12; tries++) {
            std::vector<int> word;
            int deg = 0;
            while (deg < target_deg) {
                int id = pick(rng);
                word.push_back(id);
                deg += s.degree(id);
            }
            if (deg != target_deg)
                continue;
            SignedMonomial sm = normalize(s, word);
            if (sm.sign != 0)
                e.add_term(sm.mono, rat(val(rng)));
        }
        return e;
    };

    for (int iter = 0; iter < 200; iter++) {
        int da = 1 + iter % 4, db = 1 + (iter / 4) % 4;
        Element a = random_homog(da), b = random_homog(db);
        Element ab = multiply(s, a, b), ba = multiply(s, b, a);
        int sign = (da * db) % 2 == 0 ? 1 : -1;
        CHECK(ab == ba * rat(sign));

        Element c = random_homog(1 + (iter / 16) % 3);
        CHECK(multiply(s, multiply(s, a, b), c) == multiply(s, a, multiply(s, b, c)));
    }
}

TEST_CASE("property: Leibniz rule on random products")
{
    GradedSpace s({{0, "a", 1}, {1, "b", 2}, {2, "c", 3}});
    Derivation d(1);
    d.set_value(s, 0, Element::generator(s, 1));
    d.set_value(s, 2, multiply(s, Element::generator(s, 1), Element::generator(s, 1)));

    std::mt19937 rng(2);
    std::uniform_int_distribution<int> val(-3, 3);
    std::vector<Element> gens = {Element::generator(s, 0), Element::generator(s, 1),
                                 Element::generator(s, 2)};
    for (int iter = 0; iter < 100; iter++) {
        Element a = gens[iter % 3] * rat(val(rng));
        Element b = multiply(s, gens[(iter + 1) % 3], gens[(iter + 2) % 3]) * rat(val(rng));
        if (a.is_zero() || b.is_zero())
            continue;
        Element lhs = apply_derivation(s, d, multiply(s, a, b));
        int sign = (d.shift() * a.degree()) % 2 == 0 ? 1 : -1;
        Element rhs = multiply(s, apply_derivation(s, d, a), b) +
                      multiply(s, a, apply_derivation(s, d, b)) * rat(sign);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("matrix_of_derivation agrees with apply_derivation in coordinates")
{
    GradedSpace s({{0, "a", 1}, {1, "b", 2}, {2, "c", 3}});
    Derivation d(1);
    d.set_value(s, 0, Element::generator(s, 1));
    d.set_value(s, 2, multiply(s, Element::generator(s, 1), Element::generator(s, 1)));
    for (int n = 0; n <= 8; n++) {
        auto src = monomial_basis(s, n);
        auto dst = monomial_basis(s, n + 1);
        RatMatrix m = matrix_of_derivation(s, d, n);
        for (std::size_t j = 0; j < src.size(); j++) {
            Element img = apply_derivation(s, d, Element::monomial(s, src[j]));
            CHECK(coordinates(img, dst) == m.col(j));
        }
    }
}
