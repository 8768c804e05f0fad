#include "minmod/gca.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minmod {

GradedSpace::GradedSpace(std::vector<Generator> gens) : gens_(std::move(gens))
{
    std::set<std::string> names;
    for (std::size_t i = 0; i < gens_.size(); i++) {
        if (gens_[i].id != static_cast<int>(i))
            throw std::invalid_argument("generator ids must be 0..n-1 in order");
        if (gens_[i].degree < 0)
            throw std::invalid_argument("negative generator degree: " + gens_[i].name);
        if (!names.insert(gens_[i].name).second)
            throw std::invalid_argument("duplicate generator name: " + gens_[i].name);
    }
}

const Generator& GradedSpace::gen(int id) const
{
    if (id < 0 || id >= static_cast<int>(gens_.size()))
        throw std::invalid_argument("unknown generator id");
    return gens_[id];
}

int GradedSpace::find(const std::string& name) const
{
    for (const Generator& g : gens_)
        if (g.name == name)
            return g.id;
    return -1;
}

bool GradedSpace::has_degree_zero() const
{
    for (const Generator& g : gens_)
        if (g.degree == 0)
            return true;
    return false;
}

std::vector<int> GradedSpace::ids_of_degree(int degree) const
{
    std::vector<int> ids;
    for (const Generator& g : gens_)
        if (g.degree == degree)
            ids.push_back(g.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool GradedSpace::before(int a, int b) const
{
    int da = degree(a), db = degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

int GradedSpace::add(const std::string& name, int degree)
{
    if (find(name) >= 0)
        throw std::invalid_argument("duplicate generator name: " + name);
    if (degree < 0)
        throw std::invalid_argument("negative generator degree: " + name);
    int id = static_cast<int>(gens_.size());
    gens_.push_back({id, name, degree});
    return id;
}

bool GradedSpace::operator==(const GradedSpace& rhs) const
{
    if (gens_.size() != rhs.gens_.size())
        return false;
    for (std::size_t i = 0; i < gens_.size(); i++)
        if (gens_[i].id != rhs.gens_[i].id || gens_[i].name != rhs.gens_[i].name ||
            gens_[i].degree != rhs.gens_[i].degree)
            return false;
    return true;
}

Monomial unit_monomial()
{
    return Monomial{};
}

SignedMonomial normalize(const GradedSpace& space, const std::vector<int>& word)
{
    std::vector<int> w;
    w.reserve(word.size());
    int sign = 1;
    for (int id : word) {
        space.gen(id); // validity check
        // insertion sort, tracking the Koszul sign of each adjacent swap
        std::size_t pos = w.size();
        w.push_back(id);
        while (pos > 0 && space.before(w[pos], w[pos - 1])) {
            if ((space.degree(w[pos]) * space.degree(w[pos - 1])) % 2 != 0)
                sign = -sign;
            std::swap(w[pos], w[pos - 1]);
            pos--;
        }
        if (pos > 0 && w[pos - 1] == w[pos] && space.is_odd(id))
            return SignedMonomial{0, Monomial{}};
    }
    Monomial m;
    m.factors = std::move(w);
    m.wedge = static_cast<int>(m.factors.size());
    for (int id : m.factors)
        m.degree += space.degree(id);
    return SignedMonomial{sign, std::move(m)};
}

Element Element::scalar(const Rational& c)
{
    Element e;
    e.add_term(unit_monomial(), c);
    return e;
}

Element Element::generator(const GradedSpace& space, int id)
{
    Monomial m;
    m.factors = {id};
    m.degree = space.degree(id);
    m.wedge = 1;
    Element e;
    e.add_term(m, 1);
    return e;
}

Element Element::monomial(const GradedSpace& space, const Monomial& m, const Rational& c)
{
    SignedMonomial sm = normalize(space, m.factors);
    Element e;
    if (sm.sign != 0)
        e.add_term(sm.mono, c * sm.sign);
    return e;
}

Rational Element::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Element::min_wedge() const
{
    int w = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.wedge < w)
            w = m.wedge;
        first = false;
    }
    return w;
}

int Element::max_wedge() const
{
    int w = 0;
    for (const auto& [m, c] : terms_)
        w = std::max(w, m.wedge);
    return w;
}

Element Element::wedge_component(int wedge) const
{
    Element out;
    for (const auto& [m, c] : terms_)
        if (m.wedge == wedge)
            out.add_term(m, c);
    return out;
}

void Element::add_term(const Monomial& m, const Rational& c)
{
    if (minmod::is_zero(c))
        return;
    if (degree_ >= 0 && m.degree != degree_ && !terms_.empty())
        throw std::invalid_argument("non-homogeneous element");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (minmod::is_zero(it->second))
            terms_.erase(it);
    }
    degree_ = terms_.empty() ? -1 : terms_.begin()->first.degree;
}

Element Element::operator+(const Element& rhs) const
{
    Element out = *this;
    for (const auto& [m, c] : rhs.terms_)
        out.add_term(m, c);
    return out;
}

Element Element::operator-(const Element& rhs) const
{
    Element out = *this;
    for (const auto& [m, c] : rhs.terms_)
        out.add_term(m, -c);
    return out;
}

Element Element::operator*(const Rational& c) const
{
    Element out;
    if (minmod::is_zero(c))
        return out;
    for (const auto& [m, k] : terms_)
        out.add_term(m, k * c);
    return out;
}

Element multiply(const GradedSpace& space, const Element& a, const Element& b)
{
    Element out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<int> word = ma.factors;
            word.insert(word.end(), mb.factors.begin(), mb.factors.end());
            SignedMonomial sm = normalize(space, word);
            if (sm.sign != 0)
                out.add_term(sm.mono, ca * cb * sm.sign);
        }
    }
    return out;
}

namespace {

void enumerate_wedge(const GradedSpace& space, const std::vector<int>& order,
                     std::size_t from, int deg_left, int wedge_left,
                     std::vector<int>& current, std::vector<Monomial>& out)
{
    if (deg_left == 0 && wedge_left == 0) {
        Monomial m;
        m.factors = current;
        std::sort(m.factors.begin(), m.factors.end(),
                  [&](int a, int b) { return space.before(a, b); });
        m.wedge = static_cast<int>(m.factors.size());
        for (int id : m.factors)
            m.degree += space.degree(id);
        out.push_back(std::move(m));
        return;
    }
    if (wedge_left == 0 || from == order.size())
        return;
    int id = order[from];
    int d = space.degree(id);
    int max_mult = space.is_odd(id) ? 1 : wedge_left;
    if (d > 0)
        max_mult = std::min(max_mult, deg_left / d);
    for (int mult = 0; mult <= max_mult; mult++) {
        if (d * mult > deg_left)
            break;
        for (int k = 0; k < mult; k++)
            current.push_back(id);
        enumerate_wedge(space, order, from + 1, deg_left - d * mult, wedge_left - mult,
                        current, out);
        for (int k = 0; k < mult; k++)
            current.pop_back();
    }
}

} // namespace

std::vector<Monomial> monomials_of_wedge(const GradedSpace& space, int n, int p)
{
    if (n < 0 || p < 0)
        return {};
    std::vector<int> order;
    for (const Generator& g : space.gens())
        order.push_back(g.id);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return space.before(a, b); });
    std::vector<Monomial> out;
    std::vector<int> current;
    enumerate_wedge(space, order, 0, n, p, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> monomial_basis(const GradedSpace& space, int n, int max_wedge)
{
    if (n < 0)
        throw std::invalid_argument("monomial_basis: negative degree");
    if (max_wedge < 0) {
        if (space.has_degree_zero())
            throw std::invalid_argument(
                "monomial_basis: wedge cap required with degree-0 generators");
        max_wedge = n; // all generators have degree >= 1
    }
    std::vector<Monomial> out;
    for (int p = 0; p <= max_wedge; p++) {
        std::vector<Monomial> part = monomials_of_wedge(space, n, p);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

RatVector coordinates(const Element& e, const std::vector<Monomial>& basis)
{
    RatVector v(basis.size());
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); i++) {
        Rational c = e.coeff(basis[i]);
        if (!is_zero(c)) {
            v[i] = c;
            found++;
        }
    }
    if (found != e.terms().size())
        throw std::invalid_argument("coordinates: element has terms outside the basis");
    return v;
}

Element element_from_coordinates(const GradedSpace& space, const RatVector& coords,
                                 const std::vector<Monomial>& basis)
{
    if (coords.size() != basis.size())
        throw std::invalid_argument("element_from_coordinates: length mismatch");
    (void)space;
    Element e;
    for (std::size_t i = 0; i < coords.size(); i++)
        if (!is_zero(coords[i]))
            e.add_term(basis[i], coords[i]);
    return e;
}

void Derivation::set_value(const GradedSpace& space, int gen_id, const Element& value)
{
    space.gen(gen_id);
    if (value.is_zero()) {
        values_.erase(gen_id);
        return;
    }
    if (value.degree() != space.degree(gen_id) + shift_)
        throw std::invalid_argument("derivation value has wrong degree on generator " +
                                    space.gen(gen_id).name);
    values_[gen_id] = value;
}

Element Derivation::value(int gen_id) const
{
    auto it = values_.find(gen_id);
    return it == values_.end() ? Element::zero() : it->second;
}

Element apply_derivation(const GradedSpace& space, const Derivation& theta, const Element& e)
{
    Element out;
    for (const auto& [m, c] : e.terms()) {
        int prefix_degree = 0;
        for (std::size_t j = 0; j < m.factors.size(); j++) {
            int id = m.factors[j];
            Element tg = theta.value(id);
            if (!tg.is_zero()) {
                int sign = (theta.shift() * prefix_degree) % 2 == 0 ? 1 : -1;
                // prefix * theta(g_j) * suffix
                Element piece = tg;
                for (std::size_t k = j + 1; k < m.factors.size(); k++)
                    piece = multiply(space, piece, Element::generator(space, m.factors[k]));
                for (std::size_t k = j; k-- > 0;)
                    piece = multiply(space, Element::generator(space, m.factors[k]), piece);
                out = out + piece * (c * sign);
            }
            prefix_degree += space.degree(id);
        }
    }
    return out;
}

RatMatrix matrix_of_derivation(const GradedSpace& space, const Derivation& theta, int n,
                               int max_wedge)
{
    std::vector<Monomial> src = monomial_basis(space, n, max_wedge);
    std::vector<Element> images(src.size());
    int target_wedge = max_wedge;
    for (std::size_t j = 0; j < src.size(); j++) {
        images[j] = apply_derivation(space, theta, Element::monomial(space, src[j]));
        if (max_wedge >= 0)
            target_wedge = std::max(target_wedge, images[j].max_wedge());
    }
    std::vector<Monomial> dst = monomial_basis(space, n + theta.shift(), target_wedge);
    RatMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); j++) {
        RatVector col = coordinates(images[j], dst);
        for (std::size_t i = 0; i < dst.size(); i++)
            m.at(i, j) = col[i];
    }
    return m;
}

Element morphism_apply(const GradedSpace& source, const std::map<int, Element>& values,
                       const GradedSpace& target, const Element& e)
{
    Element out;
    for (const auto& [m, c] : e.terms()) {
        Element prod = Element::scalar(1);
        for (int id : m.factors) {
            source.gen(id);
            auto it = values.find(id);
            Element img = it == values.end() ? Element::zero() : it->second;
            prod = multiply(target, prod, img);
            if (prod.is_zero())
                break;
        }
        out = out + prod * c;
    }
    return out;
}

std::string to_string(const GradedSpace& space, const Monomial& m)
{
    if (m.is_unit())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < m.factors.size(); i++) {
        if (i)
            os << "*";
        os << space.gen(m.factors[i]).name;
    }
    return os.str();
}

std::string to_string(const GradedSpace& space, const Element& e)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0)
                a = -a;
        }
        if (m.is_unit())
            os << to_string(a);
        else if (a == 1)
            os << to_string(space, m);
        else
            os << to_string(a) << "*" << to_string(space, m);
        first = false;
    }
    return os.str();
}

} // namespace minmod
