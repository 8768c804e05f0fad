#ifndef MINMOD_SULLIVAN_HPP
#define MINMOD_SULLIVAN_HPP

#include "minmod/gca.hpp"

#include <set>
#include <string>
#include <vector>

namespace minmod {

/******** Lambda-algebras and Sullivan algebras ********/

/* Graded subspace of the generating space V: one coordinate subspace per
 * degree, coordinates running over ids_of_degree(degree). */
class GradedSubspace {
  public:
    GradedSubspace() = default;

    static GradedSubspace empty(const GradedSpace& space);
    static GradedSubspace full(const GradedSpace& space);

    const Subspace& at(int degree) const;
    void set(int degree, Subspace s);

    std::size_t total_dim() const;
    std::vector<std::pair<int, std::size_t>> dims() const; // (degree, dim), ascending

    /* basis as homogeneous elements of the algebra */
    std::vector<Element> element_basis(const GradedSpace& space) const;

    bool operator==(const GradedSubspace& rhs) const;

  private:
    std::map<int, Subspace> by_degree_;
};

struct Filtration {
    std::vector<GradedSubspace> stages;
    bool exhaustive = false;
};

/* (Lambda V, d): free graded-commutative algebra with a square-zero
 * degree +1 differential satisfying the exhaustive-filtration condition
 * V(0) = V ∩ ker d, V(n+1) = V ∩ d^{-1}(Lambda V(n)).
 *
 * cutoff = largest total degree through which the generator list is
 * complete; -1 means complete in every degree.  Operations refuse degrees
 * whose answer could be changed by absent generators. */
struct LambdaAlgebra {
    GradedSpace space;
    Derivation d;
    int cutoff = -1;

    bool complete_through(int degree) const { return cutoff < 0 || degree <= cutoff; }
};

/* Sullivan algebra: Lambda-algebra with all generator degrees >= 1. */
using SullivanAlgebra = LambdaAlgebra;

struct ValidationReport {
    bool ok = false;
    std::string message;   // empty when ok
    Filtration filtration; // meaningful when ok
};

/* Checks d has shift +1, d^2 = 0 on every generator, and the Sullivan
 * condition (the filtration exhausts the generators).  Reports the first
 * offending generator otherwise. */
ValidationReport validate(const LambdaAlgebra& alg);

/* Factories with eager validation; throw std::invalid_argument on a bad
 * presentation.  make_sullivan additionally requires degrees >= 1. */
LambdaAlgebra make_lambda(GradedSpace space, Derivation d, int cutoff = -1);
SullivanAlgebra make_sullivan(GradedSpace space, Derivation d, int cutoff = -1);

bool is_sullivan(const LambdaAlgebra& alg); // all degrees >= 1

/* Minimal ascending chain V(0) <= V(1) <= ... stabilizing at V. */
Filtration sullivan_filtration(const LambdaAlgebra& alg);

/* d maps every generator into wedge degree >= 2 */
bool is_minimal(const LambdaAlgebra& alg);

/* Wedge-2 component of d; verified square-zero (internal fault if not,
 * which cannot happen for a valid minimal algebra). */
Derivation quadratic_part(const LambdaAlgebra& alg);

struct CohomologyReport {
    int degree = 0;
    std::size_t dimension = 0;
    std::vector<Element> representatives; // independent cocycles
};

/* H^n(Lambda V, d) by exact linear algebra.  Requires degrees >= 1 and
 * n <= cutoff - 1 when truncated. */
CohomologyReport cohomology(const LambdaAlgebra& alg, int n);

/* Smallest generator subset containing seed whose span W has
 * d(Lambda W) inside Lambda W. */
struct StableSubspace {
    std::set<int> generator_subset;
    bool closed = true;
};

StableSubspace minimal_stable_subspace(const LambdaAlgebra& alg, const std::set<int>& seed);

/* Chain V_0 <= V_1 <= ... for the quadratic part:
 * V_0 = V ∩ ker d_1, V_{n+1} = V ∩ d_1^{-1}(Lambda^2 V_n). */
Filtration vn_filtration_bracketed(const LambdaAlgebra& alg);

/* Span of the wedge-p products of elements of W in total degree m,
 * in coordinates over monomials_of_wedge(space, m, p). */
Subspace wedge_span(const GradedSpace& space, const GradedSubspace& w, int m, int p);

} // namespace minmod

#endif
