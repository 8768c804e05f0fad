#include "minmod/lie.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minmod {

/******** GradedLieAlgebra ********/

GradedLieAlgebra::GradedLieAlgebra(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees))
{
    if (names_.size() != degrees_.size())
        throw std::invalid_argument("lie basis: names/degrees length mismatch");
    table_.assign(dim() * dim(), RatVector(dim()));
}

void GradedLieAlgebra::set_bracket(std::size_t i, std::size_t j, RatVector value)
{
    if (i >= dim() || j >= dim() || value.size() != dim())
        throw std::invalid_argument("set_bracket: index out of range");
    for (std::size_t k = 0; k < dim(); k++)
        if (!is_zero(value[k]) && degrees_[k] != degrees_[i] + degrees_[j])
            throw std::invalid_argument("set_bracket: value not of degree " +
                                        std::to_string(degrees_[i] + degrees_[j]));
    table_[i * dim() + j] = std::move(value);
}

const RatVector& GradedLieAlgebra::bracket(std::size_t i, std::size_t j) const
{
    return table_[i * dim() + j];
}

RatVector GradedLieAlgebra::bracket_of(const RatVector& x, const RatVector& y) const
{
    if (x.size() != dim() || y.size() != dim())
        throw std::invalid_argument("bracket_of: length mismatch");
    RatVector out(dim());
    for (std::size_t i = 0; i < dim(); i++) {
        if (is_zero(x[i]))
            continue;
        for (std::size_t j = 0; j < dim(); j++) {
            if (is_zero(y[j]))
                continue;
            const RatVector& b = bracket(i, j);
            Rational c = x[i] * y[j];
            for (std::size_t k = 0; k < dim(); k++)
                if (!is_zero(b[k]))
                    out[k] += c * b[k];
        }
    }
    return out;
}

int GradedLieAlgebra::element_degree(const RatVector& x) const
{
    int deg = -1;
    for (std::size_t i = 0; i < dim(); i++) {
        if (is_zero(x[i]))
            continue;
        if (deg >= 0 && degrees_[i] != deg)
            throw std::invalid_argument("element_degree: mixed degrees");
        deg = degrees_[i];
    }
    return deg;
}

std::optional<AntisymmetryFailure> check_antisymmetry(const GradedLieAlgebra& l)
{
    for (std::size_t i = 0; i < l.dim(); i++)
        for (std::size_t j = 0; j < l.dim(); j++) {
            int sign = (l.degree(i) * l.degree(j)) % 2 == 0 ? -1 : 1;
            const RatVector& ij = l.bracket(i, j);
            const RatVector& ji = l.bracket(j, i);
            for (std::size_t k = 0; k < l.dim(); k++)
                if (ij[k] != ji[k] * sign)
                    return AntisymmetryFailure{i, j};
        }
    return std::nullopt;
}

std::optional<JacobiFailure> check_jacobi(const GradedLieAlgebra& l)
{
    // graded Leibniz form: [x,[y,z]] = [[x,y],z] + (-1)^(|x||y|) [y,[x,z]]
    for (std::size_t i = 0; i < l.dim(); i++)
        for (std::size_t j = 0; j < l.dim(); j++)
            for (std::size_t k = 0; k < l.dim(); k++) {
                RatVector lhs = l.bracket_of(unit_vector(l.dim(), i), l.bracket(j, k));
                RatVector t1 = l.bracket_of(l.bracket(i, j), unit_vector(l.dim(), k));
                RatVector t2 = l.bracket_of(unit_vector(l.dim(), j), l.bracket(i, k));
                int sign = (l.degree(i) * l.degree(j)) % 2 == 0 ? 1 : -1;
                RatVector defect(l.dim());
                bool bad = false;
                for (std::size_t t = 0; t < l.dim(); t++) {
                    defect[t] = lhs[t] - t1[t] - t2[t] * sign;
                    if (!is_zero(defect[t]))
                        bad = true;
                }
                if (bad)
                    return JacobiFailure{i, j, k, defect};
            }
    return std::nullopt;
}

/******** lower central series ********/

namespace {

std::map<int, std::vector<std::size_t>> degree_positions(const GradedLieAlgebra& l)
{
    std::map<int, std::vector<std::size_t>> positions;
    for (std::size_t i = 0; i < l.dim(); i++)
        positions[l.degree(i)].push_back(i);
    return positions;
}

std::map<int, Subspace> split_by_degree(const GradedLieAlgebra& l,
                                        const std::vector<RatVector>& homogeneous)
{
    auto positions = degree_positions(l);
    std::map<int, std::vector<RatVector>> vecs;
    for (const RatVector& v : homogeneous) {
        int deg = l.element_degree(v);
        if (deg < 0)
            continue;
        const std::vector<std::size_t>& pos = positions[deg];
        RatVector w(pos.size());
        for (std::size_t t = 0; t < pos.size(); t++)
            w[t] = v[pos[t]];
        vecs[deg].push_back(w);
    }
    std::map<int, Subspace> out;
    for (auto& [deg, pos] : positions)
        out[deg] = Subspace::span(pos.size(),
                                  vecs.count(deg) ? vecs[deg] : std::vector<RatVector>{});
    return out;
}

std::vector<RatVector> degree_blocks_to_spanning(const GradedLieAlgebra& l,
                                                 const std::map<int, Subspace>& blocks)
{
    auto positions = degree_positions(l);
    std::vector<RatVector> out;
    for (const auto& [deg, sub] : blocks)
        for (const RatVector& w : sub.basis()) {
            RatVector v(l.dim());
            const std::vector<std::size_t>& pos = positions.at(deg);
            for (std::size_t t = 0; t < pos.size(); t++)
                v[pos[t]] = w[t];
            out.push_back(v);
        }
    return out;
}

} // namespace

LcsChain lcs(const GradedLieAlgebra& l, std::size_t r)
{
    LcsChain chain;
    std::vector<RatVector> spanning;
    for (std::size_t i = 0; i < l.dim(); i++)
        spanning.push_back(unit_vector(l.dim(), i));
    LcsTerm first;
    first.whole = Subspace::full(l.dim());
    first.by_degree = split_by_degree(l, spanning);
    chain.terms.push_back(first);

    for (std::size_t step = 1; step < r; step++) {
        if (chain.terms.back().whole.dim() == 0)
            break;
        std::vector<RatVector> next;
        for (std::size_t i = 0; i < l.dim(); i++)
            for (const RatVector& w : spanning) {
                RatVector b = l.bracket_of(unit_vector(l.dim(), i), w);
                bool nonzero = false;
                for (const Rational& c : b)
                    if (!is_zero(c)) {
                        nonzero = true;
                        break;
                    }
                if (nonzero)
                    next.push_back(b);
            }
        LcsTerm term;
        term.whole = Subspace::span(l.dim(), next);
        term.by_degree = split_by_degree(l, next);
        spanning = degree_blocks_to_spanning(l, term.by_degree);
        chain.terms.push_back(term);
    }
    while (chain.terms.size() < r) {
        LcsTerm zero;
        zero.whole = Subspace(l.dim());
        zero.by_degree = split_by_degree(l, {});
        chain.terms.push_back(zero);
    }
    return chain;
}

Subspace bracket_subspaces(const GradedLieAlgebra& l, const Subspace& a, const Subspace& b)
{
    std::vector<RatVector> vecs;
    for (const RatVector& x : a.basis())
        for (const RatVector& y : b.basis())
            vecs.push_back(l.bracket_of(x, y));
    return Subspace::span(l.dim(), vecs);
}

bool is_nilpotent(const GradedLieAlgebra& l)
{
    LcsChain chain = lcs(l, l.dim() + 2);
    return chain.terms.back().whole.dim() == 0;
}

std::vector<int> lcs_levels(const GradedLieAlgebra& l)
{
    LcsChain chain = lcs(l, l.dim() + 2);
    if (chain.terms.back().whole.dim() != 0)
        throw std::invalid_argument("lcs_levels: algebra is not nilpotent");
    std::vector<int> levels(l.dim(), 1);
    for (std::size_t i = 0; i < l.dim(); i++) {
        RatVector e = unit_vector(l.dim(), i);
        for (std::size_t t = 0; t < chain.terms.size(); t++) {
            if (chain.terms[t].whole.contains(e))
                levels[i] = static_cast<int>(t + 1);
            else
                break;
        }
    }
    for (std::size_t t = 0; t + 1 < chain.terms.size(); t++) {
        std::size_t quotient = chain.terms[t].whole.dim() - chain.terms[t + 1].whole.dim();
        std::size_t count = 0;
        for (int lev : levels)
            if (lev == static_cast<int>(t + 1))
                count++;
        if (count != quotient)
            throw std::invalid_argument(
                "lcs_levels: basis is not adapted to the lower central series");
    }
    return levels;
}

/******** suspension pairing and bracket extraction ********/

GradedLieAlgebra bracket_from_quadratic(const GradedSpace& space, const Derivation& d1)
{
    std::size_t n = space.size();
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (const Generator& g : space.gens()) {
        if (g.degree < 1)
            throw std::invalid_argument("bracket extraction needs generator degrees >= 1");
        names.push_back(g.name);
        degrees.push_back(g.degree - 1);
    }
    std::vector<RatVector> c(n * n, RatVector(n)); // c[i*n + j][k]
    for (std::size_t k = 0; k < n; k++) {
        Element dv = d1.value(static_cast<int>(k));
        for (const auto& [mono, coeff] : dv.terms()) {
            if (mono.wedge != 2)
                throw std::invalid_argument(
                    "bracket extraction: differential is not quadratic");
            std::size_t a = static_cast<std::size_t>(mono.factors[0]);
            std::size_t b = static_cast<std::size_t>(mono.factors[1]);
            int da = space.degree(static_cast<int>(a));
            int db = space.degree(static_cast<int>(b));
            if (a == b) {
                int sign = db % 2 == 0 ? 1 : -1; // (-1)^(deg v_b), doubled diagonal
                c[a * n + a][k] += coeff * 2 * sign;
            } else {
                int s_direct = ((db + da * db) % 2 == 0) ? 1 : -1;
                int s_crossed = (da % 2 == 0) ? 1 : -1;
                c[a * n + b][k] += coeff * s_direct;
                c[b * n + a][k] += coeff * s_crossed;
            }
        }
    }
    GradedLieAlgebra l(names, degrees);
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++)
            l.set_bracket(i, j, c[i * n + j]);
    return l;
}

GradedLieAlgebra homotopy_lie_algebra(const SullivanAlgebra& alg)
{
    if (!is_minimal(alg))
        throw std::invalid_argument("homotopy_lie_algebra requires a minimal algebra");
    return bracket_from_quadratic(alg.space, quadratic_part(alg));
}

/******** Cartan-Chevalley-Eilenberg dual ********/

SullivanAlgebra cce_dual(const GradedLieAlgebra& e)
{
    if (auto bad = check_antisymmetry(e))
        throw std::invalid_argument("cce_dual: bracket is not graded-antisymmetric at (" +
                                    e.name(bad->i) + ", " + e.name(bad->j) + ")");
    if (auto bad = check_jacobi(e))
        throw std::invalid_argument("cce_dual: Jacobi fails at (" + e.name(bad->i) + ", " +
                                    e.name(bad->j) + ", " + e.name(bad->k) + ")");
    if (!is_nilpotent(e))
        throw std::invalid_argument("cce_dual: algebra is not nilpotent");

    std::vector<Generator> gens;
    for (std::size_t i = 0; i < e.dim(); i++)
        gens.push_back({static_cast<int>(i), e.name(i), e.degree(i) + 1});
    GradedSpace space(gens);

    Derivation d(1);
    for (std::size_t k = 0; k < e.dim(); k++) {
        Element value;
        for (std::size_t i = 0; i < e.dim(); i++)
            for (std::size_t j = i; j < e.dim(); j++) {
                const Rational& c = e.bracket(i, j)[k];
                if (is_zero(c))
                    continue;
                int pi = e.degree(i), pj = e.degree(j);
                int sign = (pi * (pj + 1)) % 2 == 0 ? 1 : -1;
                Rational beta = c * sign;
                if (i == j)
                    beta /= 2;
                Element mono =
                    multiply(space, Element::generator(space, static_cast<int>(i)),
                             Element::generator(space, static_cast<int>(j)));
                value = value + mono * beta;
            }
        if (!value.is_zero())
            d.set_value(space, static_cast<int>(k), value);
    }
    return make_sullivan(space, d);
}

RoundtripReport cce_roundtrip(const GradedLieAlgebra& e)
{
    RoundtripReport rep;
    GradedLieAlgebra back = homotopy_lie_algebra(cce_dual(e));
    for (std::size_t i = 0; i < e.dim(); i++)
        for (std::size_t j = 0; j < e.dim(); j++)
            if (e.bracket(i, j) != back.bracket(i, j)) {
                rep.ok = false;
                std::ostringstream os;
                os << "bracket [" << e.name(i) << ", " << e.name(j)
                   << "] differs after the roundtrip";
                rep.mismatch = os.str();
                return rep;
            }
    return rep;
}

/******** Prop 6 comparison ********/

Prop6Report prop6_check(const SullivanAlgebra& alg, int n)
{
    if (n < 0)
        throw std::invalid_argument("prop6_check: n must be >= 0");
    Prop6Report rep;
    rep.n = n;

    Filtration f = vn_filtration_bracketed(alg);
    const GradedSubspace& vn =
        f.stages[std::min<std::size_t>(static_cast<std::size_t>(n), f.stages.size() - 1)];
    rep.dim_vn = vn.total_dim();

    GradedLieAlgebra l = homotopy_lie_algebra(alg);
    LcsChain chain = lcs(l, static_cast<std::size_t>(n) + 2);
    const Subspace& deep = chain.terms[static_cast<std::size_t>(n) + 1].whole; // L^(n+2)
    rep.dim_quotient = l.dim() - deep.dim();
    rep.dims_match = rep.dim_vn == rep.dim_quotient;

    // pairing between V_n and representatives of L / L^(n+2)
    std::vector<RatVector> quotient_reps = quotient_basis(Subspace::full(l.dim()), deep);
    std::vector<RatVector> vn_vectors;
    for (const auto& [deg, dim_unused] : vn.dims()) {
        std::vector<int> ids = alg.space.ids_of_degree(deg);
        for (const RatVector& w : vn.at(deg).basis()) {
            RatVector v(alg.space.size());
            for (std::size_t t = 0; t < ids.size(); t++)
                v[ids[t]] = w[t];
            vn_vectors.push_back(v);
        }
    }
    RatMatrix pairing(vn_vectors.size(), quotient_reps.size());
    for (std::size_t a = 0; a < vn_vectors.size(); a++)
        for (std::size_t b = 0; b < quotient_reps.size(); b++) {
            Rational acc = 0;
            for (std::size_t i = 0; i < l.dim(); i++)
                acc += vn_vectors[a][i] * quotient_reps[b][i];
            pairing.at(a, b) = acc;
        }
    rep.pairing_nonsingular = rep.dims_match && rank(pairing) == vn_vectors.size();
    rep.pass = rep.dims_match && rep.pairing_nonsingular;
    return rep;
}

/******** Hurewicz ********/

HurewiczMap hurewicz(const SullivanAlgebra& alg, int max_degree)
{
    if (!is_minimal(alg))
        throw std::invalid_argument("hurewicz requires a minimal algebra");
    HurewiczMap h;
    for (int deg = 1; deg <= max_degree; deg++) {
        std::vector<std::size_t> cols;
        for (const Generator& g : alg.space.gens())
            if (g.degree == deg)
                cols.push_back(static_cast<std::size_t>(g.id));
        if (cols.empty())
            continue;
        CohomologyReport coh = cohomology(alg, deg);
        RatMatrix m(coh.representatives.size(), cols.size());
        for (std::size_t r = 0; r < coh.representatives.size(); r++) {
            Element lin = coh.representatives[r].wedge_component(1);
            for (std::size_t ci = 0; ci < cols.size(); ci++) {
                Monomial mono;
                mono.factors = {static_cast<int>(cols[ci])};
                mono.degree = deg;
                mono.wedge = 1;
                m.at(r, ci) = lin.coeff(mono);
            }
        }
        h.by_degree[deg - 1] = m; // key = Lie degree p
        h.cols[deg - 1] = cols;
    }
    return h;
}

std::optional<std::string> hurewicz_vanishes_on_lcs2(const SullivanAlgebra& alg,
                                                     const HurewiczMap& h,
                                                     const GradedLieAlgebra& l)
{
    (void)alg;
    LcsChain chain = lcs(l, 2);
    const LcsTerm& l2 = chain.terms[1];
    for (const auto& [p, m] : h.by_degree) {
        auto it = l2.by_degree.find(p);
        if (it == l2.by_degree.end())
            continue;
        const std::vector<std::size_t>& cols = h.cols.at(p);
        for (const RatVector& w : it->second.basis()) {
            if (w.size() != cols.size())
                throw std::runtime_error("hurewicz: column bookkeeping mismatch");
            for (std::size_t r = 0; r < m.rows(); r++) {
                Rational acc = 0;
                for (std::size_t ci = 0; ci < cols.size(); ci++)
                    acc += m.at(r, ci) * w[ci];
                if (!is_zero(acc))
                    return "hurewicz does not vanish on L^2 in degree " + std::to_string(p);
            }
        }
    }
    return std::nullopt;
}

/******** free nilpotent Lie algebras in the tensor truncation ********/

namespace {

using Word = std::vector<int>;
using TensorElem = std::map<Word, Rational>;

int word_degree(const std::vector<int>& gen_degrees, const Word& w)
{
    int d = 0;
    for (int letter : w)
        d += gen_degrees[letter];
    return d;
}

void tensor_add(TensorElem& a, const Word& w, const Rational& c)
{
    if (is_zero(c))
        return;
    auto [it, inserted] = a.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second))
            a.erase(it);
    }
}

/* [a, b] = ab - (-1)^(deg a * deg b) ba for degree-homogeneous a, b */
TensorElem tensor_bracket(const TensorElem& a, const TensorElem& b, int deg_a, int deg_b)
{
    TensorElem out;
    int sign = (deg_a * deg_b) % 2 == 0 ? 1 : -1;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word ab = wa;
            ab.insert(ab.end(), wb.begin(), wb.end());
            tensor_add(out, ab, ca * cb);
            Word ba = wb;
            ba.insert(ba.end(), wa.begin(), wa.end());
            tensor_add(out, ba, ca * cb * (-sign));
        }
    return out;
}

std::vector<Word> occurring_words(const std::vector<TensorElem>& elems)
{
    std::set<Word> words;
    for (const TensorElem& e : elems)
        for (const auto& [w, c] : e)
            words.insert(w);
    return std::vector<Word>(words.begin(), words.end());
}

RatVector tensor_coords(const TensorElem& e, const std::vector<Word>& words)
{
    RatVector v(words.size());
    for (std::size_t i = 0; i < words.size(); i++) {
        auto it = e.find(words[i]);
        if (it != e.end())
            v[i] = it->second;
    }
    return v;
}

struct FreeLieData {
    std::vector<TensorElem> basis_elems;
    std::vector<int> basis_levels;
    std::vector<int> basis_degrees;
    std::vector<std::string> basis_names;
};

FreeLieData build_free_lie(const std::vector<int>& gen_degrees, int nil_class,
                           const std::vector<std::string>& gen_names)
{
    FreeLieData data;
    std::size_t g = gen_degrees.size();
    std::vector<std::vector<std::size_t>> level_index(nil_class + 1);
    for (std::size_t i = 0; i < g; i++) {
        TensorElem e;
        tensor_add(e, Word{static_cast<int>(i)}, 1);
        data.basis_elems.push_back(e);
        data.basis_levels.push_back(1);
        data.basis_degrees.push_back(gen_degrees[i]);
        data.basis_names.push_back(gen_names.empty() ? "x" + std::to_string(i + 1)
                                                     : gen_names[i]);
        level_index[1].push_back(i);
    }
    for (int level = 2; level <= nil_class; level++) {
        std::vector<TensorElem> span_elems;
        for (std::size_t i = 0; i < g; i++)
            for (std::size_t prev : level_index[level - 1]) {
                TensorElem b = tensor_bracket(data.basis_elems[i], data.basis_elems[prev],
                                              gen_degrees[i], data.basis_degrees[prev]);
                if (!b.empty())
                    span_elems.push_back(b);
            }
        if (span_elems.empty())
            break;
        std::vector<Word> words = occurring_words(span_elems);
        std::vector<RatVector> vectors;
        for (const TensorElem& e : span_elems)
            vectors.push_back(tensor_coords(e, words));
        RrefResult r = rref(RatMatrix::from_rows(vectors));
        int counter = 0;
        for (std::size_t row = 0; row < r.pivots.size(); row++) {
            TensorElem e;
            for (std::size_t c = 0; c < words.size(); c++)
                if (!is_zero(r.mat.at(row, c)))
                    tensor_add(e, words[c], r.mat.at(row, c));
            std::size_t idx = data.basis_elems.size();
            data.basis_elems.push_back(e);
            data.basis_levels.push_back(level);
            data.basis_degrees.push_back(word_degree(gen_degrees, e.begin()->first));
            data.basis_names.push_back("c" + std::to_string(level) + "_" +
                                       std::to_string(++counter));
            level_index[level].push_back(idx);
        }
    }
    return data;
}

/* coordinates in the Lie basis; words longer than nil_class are dropped */
RatVector lie_coords(const FreeLieData& data, int nil_class, const TensorElem& elem)
{
    TensorElem trimmed;
    for (const auto& [w, c] : elem)
        if (static_cast<int>(w.size()) <= nil_class)
            tensor_add(trimmed, w, c);
    std::vector<TensorElem> all = data.basis_elems;
    all.push_back(trimmed);
    std::vector<Word> words = occurring_words(all);
    std::vector<RatVector> cols;
    for (const TensorElem& e : data.basis_elems)
        cols.push_back(tensor_coords(e, words));
    auto x = solve(RatMatrix::from_cols(cols), tensor_coords(trimmed, words));
    if (!x.has_value())
        throw std::runtime_error("free Lie decomposition failed");
    return *x;
}

} // namespace

NilpotentPresentation free_nilpotent(const std::vector<int>& gen_degrees, int nil_class,
                                     const std::vector<std::string>& gen_names)
{
    if (nil_class < 1)
        throw std::invalid_argument("free_nilpotent: class must be >= 1");
    if (gen_degrees.empty())
        throw std::invalid_argument("free_nilpotent: no generators");
    if (!gen_names.empty() && gen_names.size() != gen_degrees.size())
        throw std::invalid_argument("free_nilpotent: name list length mismatch");
    for (int d : gen_degrees)
        if (d < 0)
            throw std::invalid_argument("free_nilpotent: negative generator degree");

    FreeLieData data = build_free_lie(gen_degrees, nil_class, gen_names);
    std::size_t n = data.basis_elems.size();
    GradedLieAlgebra l(data.basis_names, data.basis_degrees);
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) {
            if (data.basis_levels[i] + data.basis_levels[j] > nil_class) {
                l.set_bracket(i, j, RatVector(n));
                continue;
            }
            TensorElem b = tensor_bracket(data.basis_elems[i], data.basis_elems[j],
                                          data.basis_degrees[i], data.basis_degrees[j]);
            l.set_bracket(i, j, lie_coords(data, nil_class, b));
        }
    return NilpotentPresentation{l, data.basis_levels};
}

NilpotentPresentation nilpotent_quotient(const std::vector<int>& gen_degrees,
                                         const std::vector<std::vector<BracketWord>>& relations,
                                         int nil_class,
                                         const std::vector<std::string>& gen_names)
{
    NilpotentPresentation free = free_nilpotent(gen_degrees, nil_class, gen_names);
    if (relations.empty())
        return free;
    const GradedLieAlgebra& l = free.lie;
    std::size_t n = l.dim();

    std::vector<RatVector> ideal_span;
    for (const std::vector<BracketWord>& rel : relations) {
        RatVector v(n);
        for (const BracketWord& word : rel) {
            if (word.letters.empty())
                throw std::invalid_argument("empty bracket word in relation");
            for (int letter : word.letters)
                if (letter < 0 || letter >= static_cast<int>(gen_degrees.size()))
                    throw std::invalid_argument("relation letter out of range");
            if (static_cast<int>(word.letters.size()) > nil_class)
                continue; // already zero here
            RatVector cur = unit_vector(n, static_cast<std::size_t>(word.letters.back()));
            for (std::size_t t = word.letters.size() - 1; t-- > 0;)
                cur = l.bracket_of(unit_vector(n, static_cast<std::size_t>(word.letters[t])),
                                   cur);
            for (std::size_t k = 0; k < n; k++)
                v[k] += word.coeff * cur[k];
        }
        l.element_degree(v); // degree homogeneity check
        ideal_span.push_back(v);
    }

    // close under bracketing with generators; Jacobi extends this to all of L
    std::vector<RatVector> work = ideal_span;
    Subspace ideal = Subspace::span(n, ideal_span);
    while (!work.empty()) {
        RatVector w = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < gen_degrees.size(); i++) {
            RatVector b = l.bracket_of(unit_vector(n, i), w);
            if (!ideal.contains(b)) {
                ideal_span.push_back(b);
                work.push_back(b);
                ideal = Subspace::span(n, ideal_span);
            }
        }
    }

    std::vector<RatVector> reps = quotient_basis(Subspace::full(n), ideal);
    std::vector<std::size_t> kept;
    for (const RatVector& r : reps) {
        std::size_t idx = n;
        for (std::size_t i = 0; i < n; i++)
            if (!is_zero(r[i])) {
                if (r[i] != 1 || idx != n)
                    throw std::runtime_error("nilpotent_quotient: non-unit representative");
                idx = i;
            }
        kept.push_back(idx);
    }

    std::vector<std::string> names;
    std::vector<int> degrees, levels;
    for (std::size_t idx : kept) {
        names.push_back(l.name(idx));
        degrees.push_back(l.degree(idx));
        levels.push_back(free.levels[idx]);
    }
    GradedLieAlgebra q(names, degrees);
    for (std::size_t a = 0; a < kept.size(); a++)
        for (std::size_t b = 0; b < kept.size(); b++) {
            RatVector residue = ideal.reduce(l.bracket(kept[a], kept[b]));
            RatVector coords(kept.size());
            for (std::size_t t = 0; t < kept.size(); t++) {
                coords[t] = residue[kept[t]];
                residue[kept[t]] = 0;
            }
            for (const Rational& c : residue)
                if (!is_zero(c))
                    throw std::runtime_error(
                        "nilpotent_quotient: residue outside representatives");
            q.set_bracket(a, b, coords);
        }
    return NilpotentPresentation{q, levels};
}

SullivanAlgebra pronilpotent_stage(const std::vector<int>& gen_degrees,
                                   const std::vector<std::vector<BracketWord>>& relations,
                                   int n)
{
    if (n < 2)
        throw std::invalid_argument("pronilpotent_stage: n must be >= 2");
    NilpotentPresentation pres = nilpotent_quotient(gen_degrees, relations, n - 1, {});
    return cce_dual(pres.lie);
}

} // namespace minmod
