#include "minmod/sullivan.hpp"

#include <algorithm>
#include <stdexcept>

namespace minmod {

/******** GradedSubspace ********/

GradedSubspace GradedSubspace::empty(const GradedSpace& space)
{
    GradedSubspace g;
    for (const Generator& gen : space.gens()) {
        if (!g.by_degree_.count(gen.degree))
            g.by_degree_[gen.degree] =
                Subspace(space.ids_of_degree(gen.degree).size());
    }
    return g;
}

GradedSubspace GradedSubspace::full(const GradedSpace& space)
{
    GradedSubspace g;
    for (const Generator& gen : space.gens()) {
        if (!g.by_degree_.count(gen.degree))
            g.by_degree_[gen.degree] =
                Subspace::full(space.ids_of_degree(gen.degree).size());
    }
    return g;
}

const Subspace& GradedSubspace::at(int degree) const
{
    static const Subspace none;
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? none : it->second;
}

void GradedSubspace::set(int degree, Subspace s)
{
    by_degree_[degree] = std::move(s);
}

std::size_t GradedSubspace::total_dim() const
{
    std::size_t n = 0;
    for (const auto& [deg, s] : by_degree_)
        n += s.dim();
    return n;
}

std::vector<std::pair<int, std::size_t>> GradedSubspace::dims() const
{
    std::vector<std::pair<int, std::size_t>> out;
    for (const auto& [deg, s] : by_degree_)
        out.emplace_back(deg, s.dim());
    return out;
}

std::vector<Element> GradedSubspace::element_basis(const GradedSpace& space) const
{
    std::vector<Element> out;
    for (const auto& [deg, s] : by_degree_) {
        std::vector<int> ids = space.ids_of_degree(deg);
        for (const RatVector& v : s.basis()) {
            Element e;
            for (std::size_t i = 0; i < ids.size(); i++)
                if (!is_zero(v[i]))
                    e = e + Element::generator(space, ids[i]) * v[i];
            out.push_back(e);
        }
    }
    return out;
}

bool GradedSubspace::operator==(const GradedSubspace& rhs) const
{
    return by_degree_ == rhs.by_degree_;
}

/******** wedge spans ********/

Subspace wedge_span(const GradedSpace& space, const GradedSubspace& w, int m, int p)
{
    std::vector<Monomial> slice = monomials_of_wedge(space, m, p);
    if (p == 0) {
        // Lambda^0 = Q, present in degree 0 only
        if (m == 0)
            return Subspace::full(1);
        return Subspace(slice.size());
    }
    std::vector<Element> basis = w.element_basis(space);
    // keep only degrees that can contribute
    std::vector<std::pair<Element, int>> factors;
    for (const Element& e : basis)
        if (!e.is_zero() && e.degree() <= m)
            factors.emplace_back(e, e.degree());

    std::vector<RatVector> vectors;
    std::vector<std::size_t> current;
    // multisets of size p: indices non-decreasing
    auto rec = [&](auto&& self, std::size_t from, int deg_left, int slots) -> void {
        if (slots == 0) {
            if (deg_left != 0)
                return;
            Element prod = Element::scalar(1);
            for (std::size_t idx : current) {
                prod = multiply(space, prod, factors[idx].first);
                if (prod.is_zero())
                    return;
            }
            vectors.push_back(coordinates(prod, slice));
            return;
        }
        for (std::size_t i = from; i < factors.size(); i++) {
            if (factors[i].second > deg_left)
                continue;
            if (!current.empty() && current.back() == i && factors[i].second % 2 != 0)
                continue; // odd element squares to zero
            current.push_back(i);
            self(self, i, deg_left - factors[i].second, slots - 1);
            current.pop_back();
        }
    };
    rec(rec, 0, m, p);
    return Subspace::span(slice.size(), vectors);
}

/******** filtrations ********/

namespace {

/* Subspace of span(generators of degree k) whose d-image lies wedge-wise
 * in Lambda(W).  stage == nullptr means "image must vanish". */
Subspace preimage_step(const GradedSpace& space, const Derivation& d, int k,
                       const GradedSubspace* stage)
{
    std::vector<int> ids = space.ids_of_degree(k);
    if (ids.empty())
        return Subspace(0);
    std::vector<Element> images;
    std::set<int> wedges;
    for (int id : ids) {
        images.push_back(d.value(id));
        for (const auto& [mono, c] : images.back().terms())
            wedges.insert(mono.wedge);
    }
    if (wedges.empty())
        return Subspace::full(ids.size());

    std::vector<RatVector> condition_rows;
    for (int p : wedges) {
        std::vector<Monomial> slice = monomials_of_wedge(space, k + d.shift(), p);
        RatMatrix dp(slice.size(), ids.size());
        for (std::size_t j = 0; j < ids.size(); j++) {
            RatVector col = coordinates(images[j].wedge_component(p), slice);
            for (std::size_t i = 0; i < slice.size(); i++)
                dp.at(i, j) = col[i];
        }
        Subspace target = stage ? wedge_span(space, *stage, k + d.shift(), p)
                                : Subspace(slice.size());
        // rows annihilating the target subspace
        Subspace ann = kernel(RatMatrix::from_rows(
            target.dim() ? target.basis() : std::vector<RatVector>{RatVector(slice.size())}));
        for (const RatVector& q : ann.basis()) {
            RatVector row(ids.size());
            for (std::size_t j = 0; j < ids.size(); j++) {
                Rational acc = 0;
                for (std::size_t i = 0; i < slice.size(); i++)
                    if (!is_zero(q[i]))
                        acc += q[i] * dp.at(i, j);
                row[j] = acc;
            }
            condition_rows.push_back(row);
        }
    }
    if (condition_rows.empty())
        return Subspace::full(ids.size());
    return kernel(RatMatrix::from_rows(condition_rows));
}

/* Shared by the Sullivan-condition filtration (with d; image wedge
 * degrees are whatever occurs) and the bracket filtration (with d1; all
 * images are wedge 2, so the spans reduce to Lambda^2 V_n). */
Filtration filtration_for(const LambdaAlgebra& alg, const Derivation& d)
{
    const GradedSpace& space = alg.space;
    std::set<int> degrees;
    for (const Generator& g : space.gens())
        degrees.insert(g.degree);

    Filtration f;
    GradedSubspace current = GradedSubspace::empty(space);
    for (int deg : degrees)
        current.set(deg, preimage_step(space, d, deg, nullptr));
    f.stages.push_back(current);

    std::size_t total = space.size();
    for (std::size_t iter = 0; iter <= total; iter++) {
        if (f.stages.back().total_dim() == total)
            break;
        GradedSubspace next = GradedSubspace::empty(space);
        const GradedSubspace& prev = f.stages.back();
        for (int deg : degrees)
            next.set(deg, preimage_step(space, d, deg, &prev));
        if (next == f.stages.back())
            break;
        f.stages.push_back(next);
    }
    f.exhaustive = f.stages.back().total_dim() == total;
    return f;
}

} // namespace

/******** validation ********/

ValidationReport validate(const LambdaAlgebra& alg)
{
    ValidationReport rep;
    if (alg.d.shift() != 1) {
        rep.message = "differential must have shift +1";
        return rep;
    }
    for (const Generator& g : alg.space.gens()) {
        Element dv = alg.d.value(g.id);
        if (!dv.is_zero() && dv.degree() != g.degree + 1) {
            rep.message = "d(" + g.name + ") has wrong degree";
            return rep;
        }
        Element ddv = apply_derivation(alg.space, alg.d, dv);
        if (!ddv.is_zero()) {
            rep.message = "d^2 != 0 on generator " + g.name;
            return rep;
        }
    }
    rep.filtration = sullivan_filtration(alg);
    if (!rep.filtration.exhaustive) {
        // name a generator never captured
        const GradedSubspace& last = rep.filtration.stages.back();
        for (const Generator& g : alg.space.gens()) {
            std::vector<int> ids = alg.space.ids_of_degree(g.degree);
            std::size_t pos =
                std::find(ids.begin(), ids.end(), g.id) - ids.begin();
            RatVector e(ids.size());
            e[pos] = 1;
            if (!last.at(g.degree).contains(e)) {
                rep.message = "Sullivan condition fails: generator " + g.name +
                              " is never captured by the filtration";
                return rep;
            }
        }
        rep.message = "Sullivan condition fails";
        return rep;
    }
    rep.ok = true;
    return rep;
}

LambdaAlgebra make_lambda(GradedSpace space, Derivation d, int cutoff)
{
    LambdaAlgebra alg{std::move(space), std::move(d), cutoff};
    ValidationReport rep = validate(alg);
    if (!rep.ok)
        throw std::invalid_argument("invalid Lambda-algebra: " + rep.message);
    return alg;
}

SullivanAlgebra make_sullivan(GradedSpace space, Derivation d, int cutoff)
{
    for (const Generator& g : space.gens())
        if (g.degree < 1)
            throw std::invalid_argument("Sullivan algebra requires degrees >= 1, generator " +
                                        g.name + " has degree " + std::to_string(g.degree));
    return make_lambda(std::move(space), std::move(d), cutoff);
}

bool is_sullivan(const LambdaAlgebra& alg)
{
    for (const Generator& g : alg.space.gens())
        if (g.degree < 1)
            return false;
    return true;
}

Filtration sullivan_filtration(const LambdaAlgebra& alg)
{
    return filtration_for(alg, alg.d);
}

bool is_minimal(const LambdaAlgebra& alg)
{
    for (const auto& [id, value] : alg.d.values())
        if (!value.is_zero() && value.min_wedge() < 2)
            return false;
    return true;
}

Derivation quadratic_part(const LambdaAlgebra& alg)
{
    if (!is_minimal(alg))
        throw std::invalid_argument("quadratic_part requires a minimal algebra");
    Derivation d1(1);
    for (const auto& [id, value] : alg.d.values())
        d1.set_value(alg.space, id, value.wedge_component(2));
    for (const Generator& g : alg.space.gens()) {
        Element sq = apply_derivation(alg.space, d1, d1.value(g.id));
        if (!sq.is_zero())
            throw std::runtime_error("internal: d1^2 != 0 on " + g.name +
                                     " for a valid minimal algebra");
    }
    return d1;
}

CohomologyReport cohomology(const LambdaAlgebra& alg, int n)
{
    if (n < 0)
        throw std::invalid_argument("cohomology: negative degree");
    for (const Generator& g : alg.space.gens())
        if (g.degree == 0)
            throw std::invalid_argument("cohomology needs generator degrees >= 1");
    if (!alg.complete_through(n + 1))
        throw std::invalid_argument("cohomology degree " + std::to_string(n) +
                                    " is beyond the reliable cutoff " +
                                    std::to_string(alg.cutoff));
    CohomologyReport rep;
    rep.degree = n;
    RatMatrix dn = matrix_of_derivation(alg.space, alg.d, n);
    Subspace cocycles = kernel(dn);
    Subspace boundaries(cocycles.ambient_dim());
    if (n >= 1) {
        RatMatrix dprev = matrix_of_derivation(alg.space, alg.d, n - 1);
        boundaries = column_space(dprev);
    }
    std::vector<RatVector> reps = quotient_basis(cocycles, boundaries);
    rep.dimension = reps.size();
    std::vector<Monomial> basis = monomial_basis(alg.space, n);
    for (const RatVector& v : reps)
        rep.representatives.push_back(element_from_coordinates(alg.space, v, basis));
    return rep;
}

StableSubspace minimal_stable_subspace(const LambdaAlgebra& alg, const std::set<int>& seed)
{
    StableSubspace out;
    std::vector<int> work(seed.begin(), seed.end());
    for (int id : work)
        alg.space.gen(id);
    out.generator_subset = seed;
    while (!work.empty()) {
        int id = work.back();
        work.pop_back();
        Element dv = alg.d.value(id);
        for (const auto& [mono, c] : dv.terms()) {
            for (int f : mono.factors) {
                if (out.generator_subset.insert(f).second)
                    work.push_back(f);
            }
        }
    }
    return out;
}

Filtration vn_filtration_bracketed(const LambdaAlgebra& alg)
{
    if (!is_minimal(alg))
        throw std::invalid_argument("vn_filtration_bracketed requires a minimal algebra");
    Derivation d1 = quadratic_part(alg);
    return filtration_for(alg, d1);
}

} // namespace minmod
