#ifndef MINMOD_LIE_HPP
#define MINMOD_LIE_HPP

#include "minmod/sullivan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minmod {

/******** Graded Lie algebras ********/

/* Finite-dimensional graded Lie algebra given by a basis and structure
 * constants.  bracket(i, j) is the coordinate vector of [x_i, x_j]. */
class GradedLieAlgebra {
  public:
    GradedLieAlgebra() = default;
    GradedLieAlgebra(std::vector<std::string> names, std::vector<int> degrees);

    std::size_t dim() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<std::string>& names() const { return names_; }

    void set_bracket(std::size_t i, std::size_t j, RatVector value);
    const RatVector& bracket(std::size_t i, std::size_t j) const;

    /* bilinear extension; x, y are coordinate vectors */
    RatVector bracket_of(const RatVector& x, const RatVector& y) const;

    /* homogeneous degree of a coordinate vector; throws on mixed degrees,
     * returns -1 for zero */
    int element_degree(const RatVector& x) const;

    bool operator==(const GradedLieAlgebra& rhs) const = default;

  private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<RatVector> table_; // dim*dim entries, each of length dim
};

struct JacobiFailure {
    std::size_t i, j, k;
    RatVector defect;
};

/* nullopt when the identity holds on all basis triples */
std::optional<JacobiFailure> check_jacobi(const GradedLieAlgebra& l);

struct AntisymmetryFailure {
    std::size_t i, j;
};

std::optional<AntisymmetryFailure> check_antisymmetry(const GradedLieAlgebra& l);

/******** lower central series ********/

struct LcsTerm {
    Subspace whole;                   // inside Q^dim
    std::map<int, Subspace> by_degree; // homogeneous pieces, generator coords
};

struct LcsChain {
    std::vector<LcsTerm> terms; // terms[0] = L^1 = L
};

/* L^1 >= L^2 >= ... >= L^r (and further terms are zero once reached). */
LcsChain lcs(const GradedLieAlgebra& l, std::size_t r);

/* span of [A, B] */
Subspace bracket_subspaces(const GradedLieAlgebra& l, const Subspace& a, const Subspace& b);

bool is_nilpotent(const GradedLieAlgebra& l);

/* LCS level of each basis element (max r with x_i in L^r); throws if the
 * basis is not adapted to the series (levels must count the quotients). */
std::vector<int> lcs_levels(const GradedLieAlgebra& l);

/******** homotopy Lie algebra of a minimal Sullivan algebra ********
 *
 * The suspension pairing is fixed once and used everywhere:
 *
 *   <g h, sx, sy> = (-1)^(deg g * deg h) <g,sx> <h,sy> + <g,sy> <h,sx>
 *
 * for a stored quadratic monomial g h, where <v_i, sx_j> = delta_ij, and
 *
 *   <v, s[x,y]> = (-1)^(deg_L y + 1) <d_1 v, sx, sy>.
 *
 * These two rules make the extracted bracket graded-antisymmetric for any
 * square-zero d_1, satisfy Jacobi exactly when d_1^2 = 0, and make
 * cce_dual a two-sided inverse on structure constants. */

/* Raw extraction from a quadratic derivation; no validity requirement
 * (corrupt differentials are allowed, so Jacobi failures can be observed). */
GradedLieAlgebra bracket_from_quadratic(const GradedSpace& space, const Derivation& d1);

/* Requires a valid minimal algebra; basis element i is dual to generator
 * i with degree lowered by one. */
GradedLieAlgebra homotopy_lie_algebra(const SullivanAlgebra& alg);

/******** Cartan-Chevalley-Eilenberg dual ********/

/* Quadratic Sullivan algebra on the suspended dual of a nilpotent
 * finite-dimensional graded Lie algebra; generator i has degree
 * deg x_i + 1 and the same name. */
SullivanAlgebra cce_dual(const GradedLieAlgebra& e);

struct RoundtripReport {
    bool ok = true;
    std::string mismatch; // human-readable witness when not ok
};

/* homotopy_lie_algebra(cce_dual(e)) must reproduce e's structure
 * constants on the same basis order, exactly. */
RoundtripReport cce_roundtrip(const GradedLieAlgebra& e);

/******** LCS comparison (finite stage) ********/

struct Prop6Report {
    int n = 0;
    std::size_t dim_vn = 0;
    std::size_t dim_quotient = 0; // dim L / L^(n+2)
    bool dims_match = false;
    bool pairing_nonsingular = false;
    bool pass = false;
};

Prop6Report prop6_check(const SullivanAlgebra& alg, int n);

/******** Hurewicz map ********/

/* Matrix per Lie degree p: rows = cohomology representatives of
 * H^{p+1}(Lambda V), columns = L-basis elements of degree p; the entry is
 * the coefficient of the dual generator in the representative's linear
 * part.  max_degree bounds p + 1. */
struct HurewiczMap {
    std::map<int, RatMatrix> by_degree;           // key = Lie degree p
    std::map<int, std::vector<std::size_t>> cols; // L-basis indices per degree
};

HurewiczMap hurewicz(const SullivanAlgebra& alg, int max_degree);

/* the map must kill L^2; returns a violating (degree, column combination)
 * description or nullopt */
std::optional<std::string> hurewicz_vanishes_on_lcs2(const SullivanAlgebra& alg,
                                                     const HurewiczMap& h,
                                                     const GradedLieAlgebra& l);

/******** free and finitely presented nilpotent Lie algebras ********/

/* Free graded Lie algebra on the given generator degrees, truncated to
 * nilpotency class nil_class (brackets of length > nil_class vanish),
 * realized inside the truncated tensor algebra.  The basis is adapted to
 * the lower central series; levels()[i] is the bracket length of basis
 * element i. */
struct NilpotentPresentation {
    GradedLieAlgebra lie;
    std::vector<int> levels;
};

NilpotentPresentation free_nilpotent(const std::vector<int>& gen_degrees, int nil_class,
                                     const std::vector<std::string>& gen_names = {});

/* A relation is a Q-combination of bracket words in the generators. */
struct BracketWord {
    std::vector<int> letters; // generator indices; left-normed bracketing
    Rational coeff;
};

/* Quotient of the free nilpotent algebra by the ideal generated by the
 * relations (each relation must be level- and degree-homogeneous). */
NilpotentPresentation nilpotent_quotient(const std::vector<int>& gen_degrees,
                                         const std::vector<std::vector<BracketWord>>& relations,
                                         int nil_class,
                                         const std::vector<std::string>& gen_names = {});

/* cce_dual of the class-(n-1) nilpotent quotient of the presented algebra;
 * successive stages embed (generator lists nest). */
SullivanAlgebra pronilpotent_stage(const std::vector<int>& gen_degrees,
                                   const std::vector<std::vector<BracketWord>>& relations,
                                   int n);

} // namespace minmod

#endif
