#include "minmod/ratlin.hpp"

#include <stdexcept>

namespace minmod {


RatVector unit_vector(std::size_t n, std::size_t i)
{
    RatVector v(n);
    v[i] = 1;
    return v;
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows)
{
    if (rows.empty())
        return RatMatrix();
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != m.cols())
            throw std::invalid_argument("ragged row list");
        for (std::size_t j = 0; j < m.cols(); j++)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_cols(const std::vector<RatVector>& cols)
{
    if (cols.empty())
        return RatMatrix();
    RatMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); j++) {
        if (cols[j].size() != m.rows())
            throw std::invalid_argument("ragged column list");
        for (std::size_t i = 0; i < m.rows(); i++)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t i) const
{
    RatVector v(cols_);
    for (std::size_t j = 0; j < cols_; j++)
        v[j] = at(i, j);
    return v;
}

RatVector RatMatrix::col(std::size_t j) const
{
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; i++)
        v[i] = at(i, j);
    return v;
}

RatMatrix RatMatrix::transposed() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; i++)
        for (std::size_t j = 0; j < cols_; j++)
            t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; i++)
        for (std::size_t k = 0; k < cols_; k++) {
            if (is_zero(at(i, k)))
                continue;
            for (std::size_t j = 0; j < rhs.cols_; j++)
                p.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return p;
}

RatVector RatMatrix::apply(const RatVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix apply shape mismatch");
    RatVector out(rows_);
    for (std::size_t i = 0; i < rows_; i++) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols_; j++)
            if (!is_zero(at(i, j)))
                acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

RrefResult rref(const RatMatrix& m)
{
    RrefResult res{m, {}};
    RatMatrix& a = res.mat;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); c++) {
        std::size_t piv = r;
        while (piv < a.rows() && is_zero(a.at(piv, c)))
            piv++;
        if (piv == a.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); j++)
                swap(a.at(piv, j), a.at(r, j));
        Rational inv = 1 / a.at(r, c);
        for (std::size_t j = c; j < a.cols(); j++)
            a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); i++) {
            if (i == r || is_zero(a.at(i, c)))
                continue;
            Rational f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); j++)
                a.at(i, j) -= f * a.at(r, j);
        }
        res.pivots.push_back(c);
        r++;
    }
    return res;
}

std::size_t rank(const RatMatrix& m)
{
    return rref(m).pivots.size();
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: rhs length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t p : r.pivots)
        if (p == m.cols())
            return std::nullopt; // row [0 ... 0 | 1]
    RatVector x(m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); i++)
        x[r.pivots[i]] = r.mat.at(i, m.cols());
    return x;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<RatVector>& vectors)
{
    Subspace s(ambient);
    if (vectors.empty())
        return s;
    RrefResult r = rref(RatMatrix::from_rows(vectors));
    for (std::size_t i = 0; i < r.pivots.size(); i++)
        s.basis_.push_back(r.mat.row(i));
    s.pivots_ = r.pivots;
    return s;
}

Subspace Subspace::full(std::size_t ambient)
{
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; i++) {
        RatVector e(ambient);
        e[i] = 1;
        s.basis_.push_back(e);
        s.pivots_.push_back(i);
    }
    return s;
}

RatVector Subspace::reduce(const RatVector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("reduce: vector length mismatch");
    RatVector w = v;
    for (std::size_t i = 0; i < basis_.size(); i++) {
        const Rational& c = w[pivots_[i]];
        if (is_zero(c))
            continue;
        Rational f = c;
        for (std::size_t j = 0; j < ambient_; j++)
            w[j] -= f * basis_[i][j];
    }
    return w;
}

bool Subspace::contains(const RatVector& v) const
{
    RatVector w = reduce(v);
    for (const Rational& c : w)
        if (!is_zero(c))
            return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const
{
    for (const RatVector& v : other.basis_)
        if (!contains(v))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const
{
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("subspace sum: ambient mismatch");
    std::vector<RatVector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

/* Standard kernel trick: ker [A; B] projected onto the A-coordinates of a
 * stacked parametrization.  Vectors in both spaces are exactly the u with
 * u = sum a_i x_i = sum b_j y_j. */
Subspace Subspace::intersect(const Subspace& other) const
{
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("subspace intersect: ambient mismatch");
    if (basis_.empty() || other.basis_.empty())
        return Subspace(ambient_);
    // columns: coefficients (a, b); rows: ambient equations sum a_i x_i - sum b_j y_j = 0
    RatMatrix eq(ambient_, dim() + other.dim());
    for (std::size_t j = 0; j < dim(); j++)
        for (std::size_t i = 0; i < ambient_; i++)
            eq.at(i, j) = basis_[j][i];
    for (std::size_t j = 0; j < other.dim(); j++)
        for (std::size_t i = 0; i < ambient_; i++)
            eq.at(i, dim() + j) = -other.basis_[j][i];
    Subspace coeffs = kernel(eq);
    std::vector<RatVector> vecs;
    for (const RatVector& k : coeffs.basis()) {
        RatVector v(ambient_);
        for (std::size_t j = 0; j < dim(); j++)
            for (std::size_t i = 0; i < ambient_; i++)
                v[i] += k[j] * basis_[j][i];
        vecs.push_back(v);
    }
    return span(ambient_, vecs);
}

Subspace kernel(const RatMatrix& m)
{
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;
    std::vector<RatVector> vecs;
    for (std::size_t c = 0; c < m.cols(); c++) {
        if (is_pivot[c])
            continue;
        RatVector v(m.cols());
        v[c] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); i++)
            v[r.pivots[i]] = -r.mat.at(i, c);
        vecs.push_back(v);
    }
    return Subspace::span(m.cols(), vecs);
}

Subspace column_space(const RatMatrix& m)
{
    std::vector<RatVector> cols;
    for (std::size_t j = 0; j < m.cols(); j++)
        cols.push_back(m.col(j));
    return Subspace::span(m.rows(), cols);
}

std::vector<RatVector> quotient_basis(const Subspace& big, const Subspace& small)
{
    if (big.ambient_dim() != small.ambient_dim())
        throw std::invalid_argument("quotient_basis: ambient mismatch");
    if (!big.contains(small))
        throw std::invalid_argument("quotient_basis: small is not contained in big");
    std::vector<bool> small_pivot(big.ambient_dim(), false);
    for (std::size_t p : small.pivots())
        small_pivot[p] = true;
    std::vector<RatVector> reps;
    for (std::size_t i = 0; i < big.dim(); i++)
        if (!small_pivot[big.pivots()[i]])
            reps.push_back(big.basis()[i]);
    if (reps.size() != big.dim() - small.dim())
        throw std::runtime_error("quotient_basis: dimension bookkeeping failed");
    return reps;
}

} // namespace minmod
