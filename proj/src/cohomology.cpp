#include "massey/cohomology.hpp"

#include "massey/errors.hpp"

namespace massey {

RingPtr CohomologyRing::compute(AlgebraPtr algebra) {
    std::shared_ptr<CohomologyRing> ring(new CohomologyRing(std::move(algebra)));
    const auto& alg = *ring->algebra_;
    for (int n = 0; n <= ring->top_degree(); ++n) {
        Degree d;
        d.cocycles = alg.dim(n) == 0 ? Subspace::zero(0) : kernel_basis(alg.differential_matrix(n));
        d.coboundaries = n == 0 || alg.dim(n - 1) == 0 ? Subspace::zero(alg.dim(n))
                                                       : Subspace::image(alg.differential_matrix(n - 1));
        Subspace spanned = d.coboundaries;
        for (const auto& z : d.cocycles.basis()) {
            if (spanned.contains(z)) continue;
            d.representatives.push_back(d.coboundaries.reduce(z));
            spanned = spanned + Subspace::span(alg.dim(n), std::span<const Vector>(&z, 1));
        }
        std::vector<Vector> cols = d.representatives;
        cols.insert(cols.end(), d.coboundaries.basis().begin(), d.coboundaries.basis().end());
        d.reps_then_boundaries = Matrix::from_columns(alg.dim(n), cols);
        ring->degrees_.push_back(std::move(d));
    }
    return ring;
}

void CohomologyRing::require_trusted(int degree) const {
    if (degree > top_degree())
        throw CapOverflow("cohomology in degree " + std::to_string(degree) + " needs cap " +
                              std::to_string(degree + 1) + " (cap is " + std::to_string(algebra_->cap()) + ")",
                          degree + 1);
}

std::size_t CohomologyRing::betti(int degree) const {
    if (degree < 0) return 0;
    require_trusted(degree);
    return degrees_[degree].representatives.size();
}

std::vector<std::size_t> CohomologyRing::betti_numbers() const {
    std::vector<std::size_t> out;
    for (const auto& d : degrees_) out.push_back(d.representatives.size());
    return out;
}

Element CohomologyRing::lift(const CohomologyClass& c) const {
    if (c.ring().get() != this) throw DimensionMismatch("class belongs to another ring");
    Vector v(algebra_->dim(c.degree()));
    if (c.degree() >= 0)
        for (std::size_t i = 0; i < c.coords().size(); ++i)
            if (!c.coords()[i].is_zero()) v = add(v, scale(degrees_[c.degree()].representatives[i], c.coords()[i]));
    return Element(algebra_, c.degree(), std::move(v));
}

std::optional<CohomologyClass> CohomologyRing::try_project(const Element& cocycle) const {
    if (cocycle.algebra().get() != algebra_.get()) throw DimensionMismatch("element belongs to another algebra");
    const int n = cocycle.degree();
    if (n < 0) return zero(n);
    require_trusted(n);
    const Degree& d = degrees_[n];
    auto sol = solve(d.reps_then_boundaries, cocycle.coords());
    if (!sol) return std::nullopt;
    sol->resize(d.representatives.size());
    return CohomologyClass(shared_from_this(), n, std::move(*sol));
}

CohomologyClass CohomologyRing::project(const Element& cocycle) const {
    auto c = try_project(cocycle);
    if (!c) throw ValidationError("'" + cocycle.to_string() + "' is not a cocycle");
    return *c;
}

CohomologyClass CohomologyRing::unit() const { return project(algebra_->unit()); }

CohomologyClass CohomologyRing::zero(int degree) const {
    if (degree >= 0) require_trusted(degree);
    return CohomologyClass(shared_from_this(), degree, Vector(degree < 0 ? 0 : betti(degree)));
}

CohomologyClass CohomologyRing::basis_class(int degree, std::size_t index) const {
    return CohomologyClass(shared_from_this(), degree, unit_vector(betti(degree), index));
}

CohomologyClass CohomologyRing::from_coords(int degree, Vector coords) const {
    return CohomologyClass(shared_from_this(), degree, std::move(coords));
}

std::optional<Element> CohomologyRing::primitive(const Element& target) const {
    const int n = target.degree();
    if (n - 1 < 0 || algebra_->dim(n - 1) == 0) {
        if (!target.is_zero()) return std::nullopt;
        return algebra_->zero(n - 1);
    }
    auto x = solve(algebra_->differential_matrix(n - 1), target.coords());
    if (!x) return std::nullopt;
    return Element(algebra_, n - 1, std::move(*x));
}

CohomologyClass::CohomologyClass(RingPtr ring, int degree, Vector coords)
    : ring_(std::move(ring)), degree_(degree), coords_(std::move(coords)) {
    const std::size_t expected = degree_ < 0 ? 0 : ring_->betti(degree_);
    if (coords_.size() != expected)
        throw DimensionMismatch("class of degree " + std::to_string(degree_) + " needs " + std::to_string(expected) +
                                " coordinates, got " + std::to_string(coords_.size()));
}

std::string CohomologyClass::to_string() const { return ring_->lift(*this).to_string(); }

namespace {
void require_same_ring(const CohomologyClass& a, const CohomologyClass& b, const char* op) {
    if (a.ring().get() != b.ring().get())
        throw DimensionMismatch(std::string(op) + ": classes belong to different rings");
}
}  // namespace

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
    require_same_ring(a, b, "add");
    if (a.degree_ != b.degree_) throw DimensionMismatch("add: degrees differ");
    return CohomologyClass(a.ring_, a.degree_, add(a.coords_, b.coords_));
}

CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
    require_same_ring(a, b, "subtract");
    if (a.degree_ != b.degree_) throw DimensionMismatch("subtract: degrees differ");
    return CohomologyClass(a.ring_, a.degree_, subtract(a.coords_, b.coords_));
}

CohomologyClass operator*(const Scalar& s, const CohomologyClass& a) {
    return CohomologyClass(a.ring_, a.degree_, scale(a.coords_, s));
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.ring_.get() == b.ring_.get() && a.degree_ == b.degree_ && a.coords_ == b.coords_;
}

CohomologyClass cup(const CohomologyClass& u, const CohomologyClass& v) {
    require_same_ring(u, v, "cup");
    const auto& ring = *u.ring();
    const int n = u.degree() + v.degree();
    if (n > ring.top_degree())
        throw CapOverflow("cup product lands in degree " + std::to_string(n) + ", trusted only through " +
                              std::to_string(ring.top_degree()),
                          n + 1);
    return ring.project(multiply(ring.lift(u), ring.lift(v)));
}

CohomologyClass induced(const AlgebraMorphism& f, const RingPtr& target_ring, const CohomologyClass& c) {
    if (f.source().get() != c.ring()->algebra().get()) throw DimensionMismatch("class is not in the morphism source");
    if (f.target().get() != target_ring->algebra().get())
        throw DimensionMismatch("target ring is not over the morphism target");
    return target_ring->project(f.apply(c.ring()->lift(c)));
}

Subspace ideal_degree_piece(const RingPtr& ring, std::span<const CohomologyClass> generators, int degree) {
    if (degree > ring->top_degree())
        throw CapOverflow("ideal piece in degree " + std::to_string(degree) + " is beyond the trusted range",
                          degree + 1);
    const std::size_t dim = degree < 0 ? 0 : ring->betti(degree);
    std::vector<Vector> spanning;
    for (const auto& g : generators) {
        if (g.ring().get() != ring.get()) throw DimensionMismatch("ideal generator from another ring");
        const int m = degree - g.degree();
        if (m < 0) continue;
        for (std::size_t i = 0; i < ring->betti(m); ++i) spanning.push_back(cup(g, ring->basis_class(m, i)).coords());
    }
    return Subspace::span(dim, spanning);
}

}  // namespace massey
