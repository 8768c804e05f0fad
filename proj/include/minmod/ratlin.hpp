#ifndef MINMOD_RATLIN_HPP
#define MINMOD_RATLIN_HPP

#include "minmod/rational.hpp"

#include <optional>
#include <vector>

namespace minmod {

using RatVector = std::vector<Rational>;

RatVector unit_vector(std::size_t n, std::size_t i);

/* Dense matrix over Q.  Row-major; small sizes throughout, so no sparse
 * storage is attempted. */
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    static RatMatrix from_cols(const std::vector<RatVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;

    RatMatrix transposed() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatVector apply(const RatVector& v) const;

    bool operator==(const RatMatrix& rhs) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct RrefResult {
    RatMatrix mat;
    std::vector<std::size_t> pivots; // ascending pivot columns
};

/* Unique reduced row-echelon form. */
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/* Any x with m*x = b, or nullopt.  Free variables are set to zero, so the
 * first-pivot solution is returned deterministically. */
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/* Subspace of Q^ambient in canonical form: the basis rows are the reduced
 * row-echelon form of any spanning set, so equality of subspaces is
 * equality of representations. */
class Subspace {
  public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    /* span of the given vectors (each of length ambient) */
    static Subspace span(std::size_t ambient, const std::vector<RatVector>& vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RatVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const RatVector& v) const;
    bool contains(const Subspace& other) const;

    /* residue of v modulo the subspace (zero iff contained) */
    RatVector reduce(const RatVector& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& rhs) const = default;

  private:
    std::size_t ambient_;
    std::vector<RatVector> basis_;   // reduced echelon rows
    std::vector<std::size_t> pivots_;
};

/* Null space of m, in canonical echelon form. */
Subspace kernel(const RatMatrix& m);

/* Column span of m. */
Subspace column_space(const RatMatrix& m);

/* Representatives of a basis of big/small.  Throws if small is not
 * contained in big. */
std::vector<RatVector> quotient_basis(const Subspace& big, const Subspace& small);

} // namespace minmod

#endif
