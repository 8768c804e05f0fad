#ifndef MINMOD_MODELS_HPP
#define MINMOD_MODELS_HPP

#include "minmod/sullivan.hpp"

#include <string>
#include <vector>

namespace minmod {

/******** finite-dimensional cdga presentations ********/

/* Finite-dimensional cdga given by a basis, a multiplication table and a
 * differential.  Everything is validated: graded commutativity and
 * associativity on basis pairs/triples, the Leibniz rule, d^2 = 0, and
 * H^0 = Q. */
class CdgaPresentation {
  public:
    CdgaPresentation() = default;
    CdgaPresentation(std::vector<std::string> names, std::vector<int> degrees,
                     std::size_t unit);

    std::size_t dim() const { return names_.size(); }
    int degree(std::size_t i) const { return degrees_[i]; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::size_t unit() const { return unit_; }

    void set_product(std::size_t i, std::size_t j, RatVector value);
    void set_diff(std::size_t i, RatVector value);

    const RatVector& product(std::size_t i, std::size_t j) const;
    const RatVector& diff(std::size_t i) const;

    RatVector multiply_coords(const RatVector& a, const RatVector& b) const;
    RatVector apply_diff(const RatVector& a) const;

    std::vector<std::size_t> indices_of_degree(int n) const;
    int max_degree() const;

  private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::size_t unit_ = 0;
    std::vector<RatVector> mult_;  // dim*dim entries
    std::vector<RatVector> diff_;  // dim entries
};

/* std::invalid_argument with a witness on the first violated axiom */
void validate_presentation(const CdgaPresentation& a);

struct CdgaCohomology {
    int degree = 0;
    std::size_t dimension = 0;
    std::vector<RatVector> representatives; // coords over indices_of_degree(n)
};

CdgaCohomology cdga_cohomology(const CdgaPresentation& a, int n);

/* Degree-truncated free cdga (Lambda space / (degree > cutoff), d):
 * the target presentation for documents that describe a cdga by
 * generators and differential. */
CdgaPresentation truncated_free_cdga(const GradedSpace& space, const Derivation& d,
                                     int cutoff);

/******** morphisms into a presentation ********/

struct CdgaMorphism {
    SullivanAlgebra source;
    CdgaPresentation target;
    std::map<int, RatVector> values; // generator id -> target coordinates
};

/* degree preservation and d-commutation on every generator */
void validate_morphism(const CdgaMorphism& phi);

RatVector morphism_image(const CdgaMorphism& phi, const Element& e);

struct QuasiIsoDegree {
    int n = 0;
    std::size_t dim_source = 0;
    std::size_t dim_target = 0;
    bool iso = false;
};

struct QuasiIsoWitness {
    int verified_to = 0;
    std::vector<QuasiIsoDegree> per_degree;
    bool all_iso = false;
    bool injective_above = false; // H^(N+1)(phi) injective
};

QuasiIsoWitness verify_quasi_iso(const CdgaMorphism& phi, int n_max);

/******** minimal models ********/

struct MinimalModelResult {
    SullivanAlgebra model;
    CdgaMorphism morphism;
    QuasiIsoWitness witness;
};

/* Degree-by-degree construction of the minimal Sullivan model of a
 * simply connected presentation (H^0 = Q, H^1 = 0): in each degree n the
 * map is first made surjective on H^n, then its kernel on H^(n+1) is
 * killed.  The witness records iso through n_max and injectivity one
 * degree above. */
MinimalModelResult minimal_model(const CdgaPresentation& a, int n_max);

/******** builtin families ********/

/* sphere(n); s1_wedge_s3(N); heisenberg; wedge_spheres(2, k[, N]);
 * free_group_stage(g, c).  Throws on unknown name or bad parameters. */
SullivanAlgebra builtin_family(const std::string& name, const std::vector<int>& params);

std::vector<std::string> builtin_family_names();

} // namespace minmod

#endif
