#ifndef MINMOD_GCA_HPP
#define MINMOD_GCA_HPP

#include "minmod/ratlin.hpp"

#include <map>
#include <string>
#include <vector>

namespace minmod {

/******** Free graded-commutative algebras over Q ********/

struct Generator {
    int id;
    std::string name;
    int degree; // >= 0
};

/* Ordered generator list.  Canonical factor order inside monomials is by
 * (degree, id), independent of declaration order. */
class GradedSpace {
  public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const Generator& gen(int id) const;
    const std::vector<Generator>& gens() const { return gens_; }
    int degree(int id) const { return gen(id).degree; }
    bool is_odd(int id) const { return degree(id) % 2 != 0; }

    int find(const std::string& name) const; // -1 if absent
    bool has_degree_zero() const;

    /* ids of the given degree, in canonical order */
    std::vector<int> ids_of_degree(int degree) const;

    /* true iff a < b in canonical (degree, id) order */
    bool before(int a, int b) const;

    int add(const std::string& name, int degree); // returns new id

    bool operator==(const GradedSpace& rhs) const;

  private:
    std::vector<Generator> gens_;
};

/* Canonical monomial: factor ids sorted by (degree, id); odd generators
 * appear at most once. */
struct Monomial {
    std::vector<int> factors;
    int degree = 0;
    int wedge = 0;

    bool is_unit() const { return factors.empty(); }
    bool operator==(const Monomial& rhs) const { return factors == rhs.factors; }
    // graded-lex: total degree, then wedge degree, then factor list
    bool operator<(const Monomial& rhs) const
    {
        if (degree != rhs.degree) return degree < rhs.degree;
        if (wedge != rhs.wedge) return wedge < rhs.wedge;
        return factors < rhs.factors;
    }
};

Monomial unit_monomial();

/* sign * canonical monomial; sign 0 encodes the zero result (odd square) */
struct SignedMonomial {
    int sign = 0;
    Monomial mono;
};

/* Koszul normalization of an arbitrary word of generator ids.  Transposing
 * adjacent factors a, b contributes (-1)^(deg a * deg b); a repeated odd
 * generator kills the word. */
SignedMonomial normalize(const GradedSpace& space, const std::vector<int>& word);

/* Homogeneous element: finitely many monomials of one common total degree.
 * Zero elements carry degree -1. */
class Element {
  public:
    Element() = default;

    static Element zero() { return Element(); }
    static Element scalar(const Rational& c); // degree 0
    static Element generator(const GradedSpace& space, int id);
    static Element monomial(const GradedSpace& space, const Monomial& m,
                            const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return degree_; } // -1 for zero
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const;
    int min_wedge() const; // over stored terms; 0 for zero element
    int max_wedge() const;

    /* component of the given wedge degree */
    Element wedge_component(int wedge) const;

    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator*(const Rational& c) const;
    Element operator-() const { return *this * Rational(-1); }
    bool operator==(const Element& rhs) const { return terms_ == rhs.terms_; }

    void add_term(const Monomial& m, const Rational& c); // merges, drops zeros

  private:
    std::map<Monomial, Rational> terms_;
    int degree_ = -1;
};

Element multiply(const GradedSpace& space, const Element& a, const Element& b);

/* All canonical monomials of total degree n and wedge degree exactly p. */
std::vector<Monomial> monomials_of_wedge(const GradedSpace& space, int n, int p);

/* All canonical monomials of total degree n, ordered graded-lex.  If the
 * space has degree-0 generators a wedge cap must be supplied (the full
 * list is infinite). */
std::vector<Monomial> monomial_basis(const GradedSpace& space, int n, int max_wedge = -1);

/* Coordinates of e in the given ordered monomial list; throws if a term
 * falls outside the list. */
RatVector coordinates(const Element& e, const std::vector<Monomial>& basis);

Element element_from_coordinates(const GradedSpace& space, const RatVector& coords,
                                 const std::vector<Monomial>& basis);

/* Degree-shift derivation, determined by its values on generators.
 * Missing generators map to zero. */
class Derivation {
  public:
    Derivation() : shift_(0) {}
    explicit Derivation(int shift) : shift_(shift) {}

    int shift() const { return shift_; }
    void set_value(const GradedSpace& space, int gen_id, const Element& value);
    Element value(int gen_id) const;
    const std::map<int, Element>& values() const { return values_; }

  private:
    int shift_;
    std::map<int, Element> values_;
};

/* Graded Leibniz extension:
 *   theta(ab) = theta(a) b + (-1)^(shift * deg a) a theta(b). */
Element apply_derivation(const GradedSpace& space, const Derivation& theta, const Element& e);

/* Matrix of theta from the degree-n monomial basis to the degree-(n+shift)
 * basis, columns indexed by the source basis. */
RatMatrix matrix_of_derivation(const GradedSpace& space, const Derivation& theta, int n,
                               int max_wedge = -1);

/* Algebra morphism determined by generator images, evaluated on e.  The
 * images live in the target space. */
Element morphism_apply(const GradedSpace& source, const std::map<int, Element>& values,
                       const GradedSpace& target, const Element& e);

std::string to_string(const GradedSpace& space, const Monomial& m);
std::string to_string(const GradedSpace& space, const Element& e);

} // namespace minmod

#endif
