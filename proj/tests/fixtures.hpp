#ifndef MINMOD_TEST_FIXTURES_HPP
#define MINMOD_TEST_FIXTURES_HPP

#include "minmod/sullivan.hpp"

namespace minmod::fixtures {

/* Model of S^2: (x:2, y:3), dy = x^2. */
inline SullivanAlgebra s2_model()
{
    GradedSpace s({{0, "x", 2}, {1, "y", 3}});
    Derivation d(1);
    d.set_value(s, 1, multiply(s, Element::generator(s, 0), Element::generator(s, 0)));
    return make_sullivan(s, d);
}

/* Heisenberg model: three degree-1 generators, dv3 = v1 v2. */
inline SullivanAlgebra heisenberg()
{
    GradedSpace s({{0, "v1", 1}, {1, "v2", 1}, {2, "v3", 1}});
    Derivation d(1);
    d.set_value(s, 2, multiply(s, Element::generator(s, 0), Element::generator(s, 1)));
    return make_sullivan(s, d);
}

/* Truncation of the S^1 v S^3 model: v:1, y0..yN:3, dy_n = y_{n-1} v.
 * Complete through degree 2 only (the full V^3 is infinite dimensional). */
inline SullivanAlgebra s1_wedge_s3(int n_top)
{
    std::vector<Generator> gens = {{0, "v", 1}};
    for (int n = 0; n <= n_top; n++)
        gens.push_back({n + 1, "y" + std::to_string(n), 3});
    GradedSpace s(gens);
    Derivation d(1);
    for (int n = 1; n <= n_top; n++)
        d.set_value(s, n + 1,
                    multiply(s, Element::generator(s, n), Element::generator(s, 0)));
    return make_sullivan(s, d, 2);
}

/* (x:2, y:7), dy = x^4: minimal with vanishing quadratic part. */
inline SullivanAlgebra cp3_like()
{
    GradedSpace s({{0, "x", 2}, {1, "y", 7}});
    Derivation d(1);
    Element x = Element::generator(s, 0);
    Element x4 = multiply(s, multiply(s, x, x), multiply(s, x, x));
    d.set_value(s, 1, x4);
    return make_sullivan(s, d);
}

} // namespace minmod::fixtures

#endif
