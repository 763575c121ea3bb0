#include "massey/cdga.hpp"

#include "massey/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace massey {

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

int koszul_sign(int p, int q) { return (p % 2 != 0 && q % 2 != 0) ? -1 : 1; }

void require_same_algebra(const Element& a, const Element& b, const char* op) {
    if (a.algebra().get() != b.algebra().get())
        throw DimensionMismatch(std::string(op) + ": elements belong to different algebras");
}

// Renders sum of coefficient * label, skipping zeros.
std::string render_combination(std::span<const Scalar> coords, const std::vector<std::string>& labels,
                               const std::string& unit_label) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const Scalar& c = coords[i];
        if (c.is_zero()) continue;
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        const std::string& label = labels[i];
        if (label == unit_label)
            os << mag;
        else if (mag.is_one())
            os << label;
        else
            os << mag << '*' << label;
        first = false;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Free presentations: sparse polynomials keyed by exponent vectors.

using Exponents = std::vector<int>;
using SparsePoly = std::map<Exponents, Scalar>;

struct FreeContext {
    const std::vector<GeneratorDecl>& gens;
    int cap;

    int degree_of(const Exponents& e) const {
        int d = 0;
        for (std::size_t g = 0; g < e.size(); ++g) d += e[g] * gens[g].degree;
        return d;
    }

    // Product of two monomials with the Koszul sign, or nullopt when an odd
    // generator would be squared.
    std::optional<std::pair<int, Exponents>> multiply(const Exponents& a, const Exponents& b) const {
        Exponents out(a.size());
        int sign = 1;
        for (std::size_t g = 0; g < a.size(); ++g) {
            out[g] = a[g] + b[g];
            if (gens[g].degree % 2 != 0 && out[g] > 1) return std::nullopt;
        }
        // Each odd generator of b passes over the odd generators of a with larger index.
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (gens[j].degree % 2 == 0 || b[j] == 0) continue;
            for (std::size_t i = j + 1; i < a.size(); ++i)
                if (gens[i].degree % 2 != 0 && a[i] != 0) sign = -sign;
        }
        return std::make_pair(sign, std::move(out));
    }

    SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) const {
        SparsePoly out;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                auto prod = multiply(ea, eb);
                if (!prod) continue;
                Scalar c = ca * cb;
                if (prod->first < 0) c = -c;
                out[prod->second] += c;
            }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    }

    SparsePoly generator(std::size_t g) const {
        Exponents e(gens.size());
        e[g] = 1;
        return {{e, Scalar(1)}};
    }

    SparsePoly one() const { return {{Exponents(gens.size()), Scalar(1)}}; }
};

std::string render_monomial(const Exponents& e, const std::vector<GeneratorDecl>& gens) {
    std::string s;
    for (std::size_t g = 0; g < e.size(); ++g) {
        if (e[g] == 0) continue;
        if (!s.empty()) s += '*';
        s += gens[g].name;
        if (e[g] > 1) s += '^' + std::to_string(e[g]);
    }
    return s.empty() ? "1" : s;
}

// All exponent vectors of total degree n, descending lexicographic order.
void enumerate_monomials(const std::vector<GeneratorDecl>& gens, std::size_t g, int remaining, Exponents& cur,
                         std::vector<Exponents>& out) {
    if (g == gens.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int deg = gens[g].degree;
    int max_e = remaining / deg;
    if (deg % 2 != 0) max_e = std::min(max_e, 1);
    for (int e = max_e; e >= 0; --e) {
        cur[g] = e;
        enumerate_monomials(gens, g + 1, remaining - e * deg, cur, out);
    }
    cur[g] = 0;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string Polynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        bool need_star = false;
        if (!t.coefficient.is_one() || t.factors.empty()) {
            os << t.coefficient;
            need_star = true;
        }
        for (const auto& [name, e] : t.factors) {
            if (need_star) os << '*';
            os << name;
            if (e != 1) os << '^' << e;
            need_star = true;
        }
    }
    return first ? "0" : os.str();
}

std::size_t CochainAlgebra::dim(int degree) const {
    if (degree < 0 || degree > cap_) return 0;
    return labels_[degree].size();
}

std::vector<std::size_t> CochainAlgebra::dims() const {
    std::vector<std::size_t> out;
    for (int n = 0; n <= cap_; ++n) out.push_back(dim(n));
    return out;
}

std::size_t CochainAlgebra::table_index(int p, int q) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(cap_ + 1) + static_cast<std::size_t>(q);
}

const Matrix& CochainAlgebra::product_table(int p, int q) const {
    if (p < 0 || q < 0 || p + q > cap_)
        throw CapOverflow("product of degrees " + std::to_string(p) + " and " + std::to_string(q) +
                              " exceeds cap " + std::to_string(cap_),
                          p + q);
    return products_[table_index(p, q)];
}

Vector CochainAlgebra::basis_product(int p, std::size_t i, int q, std::size_t j) const {
    auto row = product_table(p, q).row(i * dim(q) + j);
    return {row.begin(), row.end()};
}

const Matrix& CochainAlgebra::differential_matrix(int n) const {
    if (n < 0 || n >= cap_)
        throw CapOverflow("differential out of degree " + std::to_string(n) + " needs cap " +
                              std::to_string(n + 1) + " (cap is " + std::to_string(cap_) + ")",
                          n + 1);
    return differentials_[n];
}

std::vector<std::string> CochainAlgebra::names() const {
    switch (kind_) {
        case PresentationKind::Free: {
            std::vector<std::string> out;
            for (const auto& g : generators_) out.push_back(g.name);
            return out;
        }
        case PresentationKind::Table: {
            std::vector<std::string> out;
            for (const auto& deg : labels_) out.insert(out.end(), deg.begin(), deg.end());
            return out;
        }
        case PresentationKind::Extension: {
            auto out = base_->names();
            out.push_back(poly_generator_);
            return out;
        }
    }
    return {};
}

std::optional<Element> CochainAlgebra::named_element(std::string_view name) const {
    switch (kind_) {
        case PresentationKind::Free:
            for (std::size_t g = 0; g < generators_.size(); ++g) {
                if (generators_[g].name != name) continue;
                int deg = generators_[g].degree;
                if (deg > cap_) return std::nullopt;
                const auto& monos = monomials_[deg];
                for (std::size_t i = 0; i < monos.size(); ++i)
                    if (monos[i][g] == 1) return basis_element(deg, i);
            }
            return std::nullopt;
        case PresentationKind::Table:
            for (int n = 0; n <= cap_; ++n)
                for (std::size_t i = 0; i < labels_[n].size(); ++i)
                    if (labels_[n][i] == name) return basis_element(n, i);
            return std::nullopt;
        case PresentationKind::Extension: {
            if (name == poly_generator_) {
                if (cap_ < 2) return std::nullopt;
                return basis_element(2, extension_block_offset(*this, 2, 1));
            }
            auto e = base_->named_element(name);
            if (!e) return std::nullopt;
            Vector coords(dim(e->degree()));
            std::copy(e->coords().begin(), e->coords().end(), coords.begin());
            return Element(shared_from_this(), e->degree(), std::move(coords));
        }
    }
    return std::nullopt;
}

Element CochainAlgebra::unit() const {
    if (dim(0) == 0) throw ValidationError("algebra has no degree-0 basis");
    return basis_element(0, 0);
}

Element CochainAlgebra::zero(int degree) const { return Element(shared_from_this(), degree, Vector(dim(degree))); }

Element CochainAlgebra::basis_element(int degree, std::size_t index) const {
    return Element(shared_from_this(), degree, unit_vector(dim(degree), index));
}

bool same_structure(const CochainAlgebra& a, const CochainAlgebra& b) {
    if (&a == &b) return true;
    if (a.cap_ != b.cap_ || a.dims() != b.dims()) return false;
    return a.products_ == b.products_ && a.differentials_ == b.differentials_;
}

AlgebraPtr CochainAlgebra::with_cap(int cap) const {
    if (cap == cap_) return shared_from_this();
    if (cap < 0) throw CapOverflow("negative cap", 0);
    switch (kind_) {
        case PresentationKind::Free:
            return build_free_cdga(generators_, diffs_, cap);
        case PresentationKind::Extension:
            return tensor_polynomial_generator(base_->with_cap(cap), poly_generator_, cap);
        case PresentationKind::Table:
            break;
    }
    if (cap > cap_ && truncated_)
        throw CapOverflow("truncated table algebra cannot be extended beyond cap " + std::to_string(cap_), cap);
    std::shared_ptr<CochainAlgebra> out(new CochainAlgebra(*this));
    out->cap_ = cap;
    out->labels_.resize(cap + 1);
    out->products_.assign(static_cast<std::size_t>(cap + 1) * (cap + 1), Matrix());
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; p + q <= cap; ++q) {
            Matrix& m = out->products_[out->table_index(p, q)];
            if (p + q <= cap_)
                m = product_table(p, q);
            else
                m = Matrix(out->dim(p) * out->dim(q), out->dim(p + q));
        }
    out->differentials_.resize(cap);
    for (int n = 0; n < cap; ++n)
        out->differentials_[n] = n < cap_ ? differentials_[n] : Matrix(out->dim(n + 1), out->dim(n));
    out->truncated_ = truncated_ || (cap < cap_ && [&] {
                          for (int n = cap + 1; n <= cap_; ++n)
                              if (dim(n) != 0) return true;
                          return false;
                      }());
    return out;
}

// ---------------------------------------------------------------------------

Element::Element(AlgebraPtr algebra, int degree, Vector coords)
    : algebra_(std::move(algebra)), degree_(degree), coords_(std::move(coords)) {
    if (coords_.size() != algebra_->dim(degree_))
        throw DimensionMismatch("element of degree " + std::to_string(degree_) + " needs " +
                                std::to_string(algebra_->dim(degree_)) + " coordinates, got " +
                                std::to_string(coords_.size()));
}

std::string Element::to_string() const {
    if (degree_ < 0 || degree_ > algebra_->cap()) return "0";
    const std::string& unit_label = algebra_->dim(0) ? algebra_->labels(0)[0] : std::string();
    return render_combination(coords_, algebra_->labels(degree_), degree_ == 0 ? unit_label : std::string("\x01"));
}

Element operator+(const Element& a, const Element& b) {
    require_same_algebra(a, b, "add");
    if (a.degree_ != b.degree_) throw DimensionMismatch("add: degrees differ");
    return Element(a.algebra_, a.degree_, add(a.coords_, b.coords_));
}

Element operator-(const Element& a, const Element& b) {
    require_same_algebra(a, b, "subtract");
    if (a.degree_ != b.degree_) throw DimensionMismatch("subtract: degrees differ");
    return Element(a.algebra_, a.degree_, subtract(a.coords_, b.coords_));
}

Element operator*(const Scalar& s, const Element& a) { return Element(a.algebra_, a.degree_, scale(a.coords_, s)); }

Element Element::operator-() const { return Scalar(-1) * *this; }

bool operator==(const Element& a, const Element& b) {
    return a.algebra_.get() == b.algebra_.get() && a.degree_ == b.degree_ && a.coords_ == b.coords_;
}

Element multiply(const Element& a, const Element& b) {
    require_same_algebra(a, b, "multiply");
    const auto& alg = *a.algebra();
    int p = a.degree(), q = b.degree();
    if (p + q > alg.cap())
        throw CapOverflow("product lands in degree " + std::to_string(p + q) + " above cap " +
                              std::to_string(alg.cap()),
                          p + q);
    Vector out(alg.dim(p + q));
    if (alg.dim(p) == 0 || alg.dim(q) == 0 || out.empty()) return Element(a.algebra(), p + q, std::move(out));
    const Matrix& table = alg.product_table(p, q);
    const std::size_t dq = alg.dim(q);
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (a.coords()[i].is_zero()) continue;
        for (std::size_t j = 0; j < dq; ++j) {
            if (b.coords()[j].is_zero()) continue;
            Scalar c = a.coords()[i] * b.coords()[j];
            auto row = table.row(i * dq + j);
            for (std::size_t k = 0; k < out.size(); ++k)
                if (!row[k].is_zero()) out[k] += c * row[k];
        }
    }
    return Element(a.algebra(), p + q, std::move(out));
}

Element differential(const Element& a) {
    const auto& alg = *a.algebra();
    int n = a.degree();
    if (n + 1 > alg.cap())
        throw CapOverflow("differential of degree " + std::to_string(n) + " needs cap " + std::to_string(n + 1),
                          n + 1);
    if (n < 0 || alg.dim(n) == 0) return Element(a.algebra(), n + 1, Vector(alg.dim(n + 1)));
    return Element(a.algebra(), n + 1, alg.differential_matrix(n).apply(a.coords()));
}

Element bar(const Element& a) { return a.degree() % 2 == 0 ? a : -a; }

Element power(const Element& a, int exponent) {
    if (exponent < 0) throw ValidationError("negative exponent");
    Element out = a.algebra()->unit();
    for (int i = 0; i < exponent; ++i) out = multiply(out, a);
    return out;
}

Element evaluate(const AlgebraPtr& algebra, const Polynomial& p) {
    std::optional<Element> sum;
    for (const auto& term : p.terms) {
        if (term.coefficient.is_zero()) continue;
        Element value = algebra->unit();
        for (const auto& [name, e] : term.factors) {
            auto named = algebra->named_element(name);
            if (!named) throw ValidationError("unknown name '" + name + "'");
            value = multiply(value, power(*named, e));
        }
        value = term.coefficient * value;
        if (!sum)
            sum = value;
        else if (sum->degree() != value.degree())
            throw ValidationError("inhomogeneous expression '" + p.to_string() + "'");
        else
            sum = *sum + value;
    }
    if (!sum) return algebra->zero(0);
    return *sum;
}

// ---------------------------------------------------------------------------

AlgebraPtr build_free_cdga(std::vector<GeneratorDecl> gens, std::map<std::string, Polynomial> diffs, int cap) {
    std::set<std::string> seen;
    int max_degree = 0;
    for (const auto& g : gens) {
        if (!is_identifier(g.name)) throw ValidationError("invalid generator name '" + g.name + "'");
        if (g.degree < 1) throw ValidationError("generator '" + g.name + "' must have degree >= 1");
        if (!seen.insert(g.name).second) throw ValidationError("duplicate generator '" + g.name + "'");
        max_degree = std::max(max_degree, g.degree);
    }
    if (cap < max_degree)
        throw CapOverflow("cap " + std::to_string(cap) + " is below generator degree " + std::to_string(max_degree),
                          max_degree);

    auto index_of = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (gens[g].name == name) return g;
        return std::nullopt;
    };

    FreeContext ctx{gens, cap};
    std::vector<SparsePoly> gen_diff(gens.size());
    for (const auto& [name, poly] : diffs) {
        auto gi = index_of(name);
        if (!gi) throw ValidationError("differential given for unknown generator '" + name + "'");
        const int target = gens[*gi].degree + 1;
        SparsePoly value;
        for (const auto& term : poly.terms) {
            if (term.coefficient.is_zero()) continue;
            SparsePoly t = ctx.one();
            int deg = 0;
            for (const auto& [fname, e] : term.factors) {
                auto fi = index_of(fname);
                if (!fi) throw ValidationError("d " + name + ": unknown generator '" + fname + "'");
                if (e < 0) throw ValidationError("d " + name + ": negative exponent");
                deg += e * gens[*fi].degree;
                for (int k = 0; k < e; ++k) t = ctx.multiply(t, ctx.generator(*fi));
            }
            if (deg != target)
                throw ValidationError("ill-graded differential: d " + name + " must have degree " +
                                      std::to_string(target) + " but term '" +
                                      Polynomial{{term}}.to_string() + "' has degree " + std::to_string(deg));
            for (auto& [e, c] : t) value[e] += term.coefficient * c;
        }
        std::erase_if(value, [](const auto& kv) { return kv.second.is_zero(); });
        gen_diff[*gi] = std::move(value);
    }

    std::shared_ptr<CochainAlgebra> alg(new CochainAlgebra());
    alg->cap_ = cap;
    alg->kind_ = PresentationKind::Free;
    alg->generators_ = gens;
    alg->diffs_ = std::move(diffs);
    alg->monomials_.resize(cap + 1);
    alg->labels_.resize(cap + 1);
    std::vector<std::map<Exponents, std::size_t>> index(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        Exponents cur(gens.size());
        enumerate_monomials(gens, 0, n, cur, alg->monomials_[n]);
        for (std::size_t i = 0; i < alg->monomials_[n].size(); ++i) {
            index[n][alg->monomials_[n][i]] = i;
            alg->labels_[n].push_back(render_monomial(alg->monomials_[n][i], gens));
        }
    }

    auto to_coords = [&](const SparsePoly& p, int degree) {
        Vector v(alg->dim(degree));
        for (const auto& [e, c] : p) v[index[degree].at(e)] += c;
        return v;
    };

    alg->products_.assign(static_cast<std::size_t>(cap + 1) * (cap + 1), Matrix());
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; p + q <= cap; ++q) {
            const auto& mp = alg->monomials_[p];
            const auto& mq = alg->monomials_[q];
            Matrix table(mp.size() * mq.size(), alg->dim(p + q));
            for (std::size_t i = 0; i < mp.size(); ++i)
                for (std::size_t j = 0; j < mq.size(); ++j) {
                    auto prod = ctx.multiply(mp[i], mq[j]);
                    if (!prod) continue;
                    table(i * mq.size() + j, index[p + q].at(prod->second)) = prod->first;
                }
            alg->products_[alg->table_index(p, q)] = std::move(table);
        }

    // d(s_1 ... s_k) = sum_i (-1)^{|s_1..s_{i-1}|} s_1..s_{i-1} d(s_i) s_{i+1}..s_k
    alg->differentials_.resize(cap);
    for (int n = 0; n < cap; ++n) {
        Matrix d(alg->dim(n + 1), alg->dim(n));
        for (std::size_t col = 0; col < alg->monomials_[n].size(); ++col) {
            const Exponents& mono = alg->monomials_[n][col];
            std::vector<std::size_t> word;
            for (std::size_t g = 0; g < mono.size(); ++g)
                for (int k = 0; k < mono[g]; ++k) word.push_back(g);
            SparsePoly total;
            int prefix_degree = 0;
            for (std::size_t pos = 0; pos < word.size(); ++pos) {
                SparsePoly term = ctx.one();
                for (std::size_t l = 0; l < pos; ++l) term = ctx.multiply(term, ctx.generator(word[l]));
                term = ctx.multiply(term, gen_diff[word[pos]]);
                for (std::size_t l = pos + 1; l < word.size(); ++l) term = ctx.multiply(term, ctx.generator(word[l]));
                const bool negate = prefix_degree % 2 != 0;
                for (auto& [e, c] : term) total[e] += negate ? -c : c;
                prefix_degree += gens[word[pos]].degree;
            }
            std::erase_if(total, [](const auto& kv) { return kv.second.is_zero(); });
            d.set_column(col, to_coords(total, n + 1));
        }
        alg->differentials_[n] = std::move(d);
    }

    for (std::size_t g = 0; g < gens.size(); ++g) {
        const int deg = gens[g].degree;
        if (deg + 2 > cap) continue;
        Vector dd = alg->differentials_[deg + 1].apply(to_coords(gen_diff[g], deg + 1));
        if (!is_zero(dd)) {
            Element residue(alg, deg + 2, dd);
            throw ValidationError("d^2 != 0 on generator '" + gens[g].name + "': d(d " + gens[g].name +
                                  ") = " + residue.to_string());
        }
    }
    return alg;
}

// ---------------------------------------------------------------------------

TablePresentation::TablePresentation(int cap, bool truncated) : cap_(cap), truncated_(truncated) {
    if (cap < 0) throw ValidationError("negative cap");
    labels_.resize(cap + 1);
}

void TablePresentation::add_basis(std::string name, int degree) {
    if (!is_identifier(name)) throw ValidationError("invalid basis name '" + name + "'");
    if (degree < 0) throw ValidationError("basis element '" + name + "' has negative degree");
    if (degree > cap_)
        throw CapOverflow("basis element '" + name + "' of degree " + std::to_string(degree) + " exceeds cap",
                          degree);
    if (index_.contains(name)) throw ValidationError("duplicate basis element '" + name + "'");
    index_[name] = {degree, labels_[degree].size()};
    labels_[degree].push_back(std::move(name));
}

int TablePresentation::degree_of(std::string_view name) const { return key(name).first; }

TablePresentation::Key TablePresentation::key(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw ValidationError("unknown basis element '" + std::string(name) + "'");
    return it->second;
}

Vector TablePresentation::combination(int degree, const LinearCombination& value) const {
    Vector v(degree >= 0 && degree <= cap_ ? labels_[degree].size() : 0);
    for (const auto& [c, name] : value) {
        if (c.is_zero()) continue;
        auto [d, i] = key(name);
        if (d != degree)
            throw ValidationError("'" + name + "' has degree " + std::to_string(d) + ", expected " +
                                  std::to_string(degree));
        v[i] += c;
    }
    return v;
}

void TablePresentation::set_product(std::string_view a, std::string_view b, const LinearCombination& value) {
    Key ka = key(a), kb = key(b);
    int deg = ka.first + kb.first;
    if (deg > cap_) {
        bool all_zero = std::all_of(value.begin(), value.end(), [](const auto& t) { return t.first.is_zero(); });
        if (!all_zero)
            throw CapOverflow("product " + std::string(a) + "*" + std::string(b) + " exceeds cap", deg);
        return;
    }
    products_[{ka, kb}] = combination(deg, value);
}

void TablePresentation::set_differential(std::string_view a, const LinearCombination& value) {
    Key ka = key(a);
    Vector v = combination(ka.first + 1, value);
    if (ka.first + 1 > cap_ && !is_zero(v))
        throw CapOverflow("differential of '" + std::string(a) + "' exceeds cap", ka.first + 1);
    differentials_[ka] = std::move(v);
}

void TablePresentation::fill_implied_products() {
    if (labels_[0].empty()) return;
    const Key unit{0, 0};
    for (const auto& [name, k] : index_) {
        Vector self = unit_vector(labels_[k.first].size(), k.second);
        products_.try_emplace({unit, k}, self);
        products_.try_emplace({k, unit}, self);
    }
    auto given = products_;
    for (const auto& [pair, v] : given) {
        const auto& [ka, kb] = pair;
        products_.try_emplace({kb, ka}, koszul_sign(ka.first, kb.first) < 0 ? scale(v, Scalar(-1)) : v);
    }
}

AlgebraPtr TablePresentation::build() const {
    if (labels_[0].empty()) throw ValidationError("table algebra needs a unit in degree 0");
    std::shared_ptr<CochainAlgebra> alg(new CochainAlgebra());
    alg->cap_ = cap_;
    alg->kind_ = PresentationKind::Table;
    alg->labels_ = labels_;
    alg->truncated_ = truncated_;
    alg->products_.assign(static_cast<std::size_t>(cap_ + 1) * (cap_ + 1), Matrix());
    for (int p = 0; p <= cap_; ++p)
        for (int q = 0; p + q <= cap_; ++q)
            alg->products_[alg->table_index(p, q)] = Matrix(alg->dim(p) * alg->dim(q), alg->dim(p + q));
    for (const auto& [pair, v] : products_) {
        const auto& [ka, kb] = pair;
        Matrix& m = alg->products_[alg->table_index(ka.first, kb.first)];
        auto row = m.row(ka.second * alg->dim(kb.first) + kb.second);
        std::copy(v.begin(), v.end(), row.begin());
    }
    alg->differentials_.resize(cap_);
    for (int n = 0; n < cap_; ++n) alg->differentials_[n] = Matrix(alg->dim(n + 1), alg->dim(n));
    for (const auto& [k, v] : differentials_)
        if (k.first < cap_) alg->differentials_[k.first].set_column(k.second, v);
    if (auto violation = find_structure_violation(*alg)) throw ValidationError(*violation);
    return alg;
}

// ---------------------------------------------------------------------------

std::size_t extension_block_offset(const CochainAlgebra& ext, int degree, int power) {
    const auto& base = *ext.extension_base();
    std::size_t offset = 0;
    for (int j = 0; j < power; ++j) offset += base.dim(degree - 2 * j);
    return offset;
}

AlgebraPtr tensor_polynomial_generator(const AlgebraPtr& a, std::string name, int cap) {
    if (!is_identifier(name)) throw ValidationError("invalid generator name '" + name + "'");
    for (const auto& existing : a->names())
        if (existing == name) throw ValidationError("name '" + name + "' already used in the base algebra");
    AlgebraPtr base = a->with_cap(cap);

    std::shared_ptr<CochainAlgebra> alg(new CochainAlgebra());
    alg->cap_ = cap;
    alg->kind_ = PresentationKind::Extension;
    alg->base_ = base;
    alg->poly_generator_ = name;
    if (base->kind() == PresentationKind::Free ||
        (base->kind() == PresentationKind::Extension && !base->generators().empty())) {
        alg->generators_ = base->generators();
        alg->generators_.push_back({name, 2});
    }

    auto power_label = [&](int j) { return j == 1 ? name : name + "^" + std::to_string(j); };
    const std::string& unit_label = base->labels(0).at(0);
    alg->labels_.resize(cap + 1);
    for (int n = 0; n <= cap; ++n)
        for (int j = 0; 2 * j <= n; ++j)
            for (const auto& l : base->labels(n - 2 * j)) {
                if (j == 0)
                    alg->labels_[n].push_back(l);
                else if (l == unit_label && n - 2 * j == 0)
                    alg->labels_[n].push_back(power_label(j));
                else
                    alg->labels_[n].push_back(l + "*" + power_label(j));
            }

    alg->products_.assign(static_cast<std::size_t>(cap + 1) * (cap + 1), Matrix());
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; p + q <= cap; ++q) {
            Matrix table(alg->dim(p) * alg->dim(q), alg->dim(p + q));
            const std::size_t dq = alg->dim(q);
            for (int j = 0; 2 * j <= p; ++j)
                for (int l = 0; 2 * l <= q; ++l) {
                    const int bp = p - 2 * j, bq = q - 2 * l;
                    if (base->dim(bp) == 0 || base->dim(bq) == 0) continue;
                    const Matrix& bt = base->product_table(bp, bq);
                    const std::size_t off_p = extension_block_offset(*alg, p, j);
                    const std::size_t off_q = extension_block_offset(*alg, q, l);
                    const std::size_t off_out = extension_block_offset(*alg, p + q, j + l);
                    for (std::size_t i = 0; i < base->dim(bp); ++i)
                        for (std::size_t k = 0; k < base->dim(bq); ++k) {
                            auto src = bt.row(i * base->dim(bq) + k);
                            auto dst = table.row((off_p + i) * dq + off_q + k);
                            std::copy(src.begin(), src.end(), dst.begin() + static_cast<std::ptrdiff_t>(off_out));
                        }
                }
            alg->products_[alg->table_index(p, q)] = std::move(table);
        }

    alg->differentials_.resize(cap);
    for (int n = 0; n < cap; ++n) {
        Matrix d(alg->dim(n + 1), alg->dim(n));
        for (int j = 0; 2 * j <= n; ++j) {
            const int bn = n - 2 * j;
            if (base->dim(bn) == 0 || base->dim(bn + 1) == 0) continue;
            const Matrix& bd = base->differential_matrix(bn);
            const std::size_t off_in = extension_block_offset(*alg, n, j);
            const std::size_t off_out = extension_block_offset(*alg, n + 1, j);
            for (std::size_t r = 0; r < bd.rows(); ++r)
                for (std::size_t c = 0; c < bd.cols(); ++c) d(off_out + r, off_in + c) = bd(r, c);
        }
        alg->differentials_[n] = std::move(d);
    }
    return alg;
}

// ---------------------------------------------------------------------------

std::optional<std::string> find_structure_violation(const CochainAlgebra& a) {
    const int cap = a.cap();
    auto label = [&](int n, std::size_t i) { return a.labels(n)[i] + " (degree " + std::to_string(n) + ")"; };
    auto basis = [&](int n, std::size_t i) { return a.basis_element(n, i); };

    if (a.dim(0) == 0) return "no unit: degree 0 is empty";
    const Element one = a.unit();
    for (int n = 0; n <= cap; ++n)
        for (std::size_t i = 0; i < a.dim(n); ++i) {
            Element b = basis(n, i);
            if (!(multiply(one, b) == b) || !(multiply(b, one) == b))
                return "unit law fails on " + label(n, i);
        }

    for (int p = 0; p <= cap; ++p)
        for (int q = p; p + q <= cap; ++q)
            for (std::size_t i = 0; i < a.dim(p); ++i)
                for (std::size_t j = 0; j < a.dim(q); ++j) {
                    Element ab = multiply(basis(p, i), basis(q, j));
                    Element ba = multiply(basis(q, j), basis(p, i));
                    if (!(ab == Scalar(koszul_sign(p, q)) * ba))
                        return "graded commutativity fails on pair " + label(p, i) + ", " + label(q, j);
                }

    for (int p = 0; p <= cap; ++p)
        for (int q = 0; p + q <= cap; ++q)
            for (int r = 0; p + q + r <= cap; ++r)
                for (std::size_t i = 0; i < a.dim(p); ++i)
                    for (std::size_t j = 0; j < a.dim(q); ++j)
                        for (std::size_t k = 0; k < a.dim(r); ++k) {
                            Element x = basis(p, i), y = basis(q, j), z = basis(r, k);
                            if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
                                return "associativity fails on triple " + label(p, i) + ", " + label(q, j) + ", " +
                                       label(r, k);
                        }

    for (int n = 0; n + 2 <= cap; ++n)
        for (std::size_t i = 0; i < a.dim(n); ++i)
            if (!differential(differential(basis(n, i))).is_zero()) return "d^2 != 0 on " + label(n, i);

    for (int p = 0; p <= cap; ++p)
        for (int q = 0; p + q + 1 <= cap; ++q)
            for (std::size_t i = 0; i < a.dim(p); ++i)
                for (std::size_t j = 0; j < a.dim(q); ++j) {
                    Element x = basis(p, i), y = basis(q, j);
                    Element lhs = differential(multiply(x, y));
                    Element rhs = multiply(differential(x), y) + Scalar(p % 2 ? -1 : 1) * multiply(x, differential(y));
                    if (!(lhs == rhs)) return "Leibniz rule fails on pair " + label(p, i) + ", " + label(q, j);
                }
    return std::nullopt;
}

}  // namespace massey
