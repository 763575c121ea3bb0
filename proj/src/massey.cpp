#include "massey/cohomology.hpp"

#include "massey/errors.hpp"

#include <atomic>

namespace massey {

namespace {

std::atomic<std::uint64_t> g_computed{0};
std::atomic<std::uint64_t> g_disagreements{0};

Subspace span_of_images(std::size_t dim, const std::vector<CohomologyClass>& images) {
    std::vector<Vector> vecs;
    for (const auto& c : images) vecs.push_back(c.coords());
    return Subspace::span(dim, vecs);
}

// Subspace of class coordinates mapped through `map`, one basis vector at a time.
template <class Map>
Subspace map_subspace(const RingPtr& source, int degree, const Subspace& s, std::size_t target_dim, Map&& map) {
    std::vector<CohomologyClass> images;
    for (const auto& v : s.basis()) images.push_back(map(source->from_coords(degree, v)));
    return span_of_images(target_dim, images);
}

ContainmentReport compare(std::string law, const AffineCoset& image, MasseyResult target) {
    AffineCoset target_coset = target.coset().canonical();
    ContainmentReport rep(std::move(law), image.canonical(), std::move(target_coset), std::move(target));
    rep.point_contained = rep.target.contains(rep.image.point);
    rep.direction_contained = rep.target.direction.contains(rep.image.direction);
    return rep;
}

}  // namespace

const char* to_string(Verdict v) { return v == Verdict::Vanishes ? "vanishes" : "does-not-vanish"; }

AffineCoset MasseyResult::coset() const {
    if (!defined || !representative) throw NotDefined("Massey product is not defined: " + obstruction);
    return {representative->coords(), indeterminacy};
}

MasseyTally massey_tally() { return {g_computed.load(), g_disagreements.load()}; }

MasseyResult triple_massey(const CohomologyClass& a, const CohomologyClass& b, const CohomologyClass& c) {
    if (a.ring().get() != b.ring().get() || b.ring().get() != c.ring().get())
        throw DimensionMismatch("Massey product of classes from different rings");
    const RingPtr& ring = a.ring();
    const int p = a.degree(), q = b.degree(), r = c.degree();
    const int n = p + q + r - 1;
    const int highest = std::max({n, p + q, q + r});
    if (highest > ring->top_degree())
        throw CapOverflow("Massey product <" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() +
                              "> needs cap " + std::to_string(highest + 1) + " (cap is " +
                              std::to_string(ring->algebra()->cap()) + ")",
                          highest + 1);

    MasseyResult res(a, b, c, n);
    const std::size_t dim = n < 0 ? 0 : ring->betti(n);
    res.indeterminacy = Subspace::zero(dim);
    res.ideal_piece = Subspace::zero(dim);

    const CohomologyClass ab = cup(a, b), bc = cup(b, c);
    if (!ab.is_zero() || !bc.is_zero()) {
        res.defined = false;
        if (!ab.is_zero()) res.obstruction = "[a][b] = " + ab.to_string() + " is nonzero";
        if (!bc.is_zero())
            res.obstruction += std::string(res.obstruction.empty() ? "" : "; ") + "[b][c] = " + bc.to_string() +
                               " is nonzero";
        return res;
    }
    res.defined = true;

    const Element alpha = ring->lift(a), beta = ring->lift(b), gamma = ring->lift(c);
    auto x = ring->primitive(multiply(bar(alpha), beta));
    auto y = ring->primitive(multiply(bar(beta), gamma));
    if (!x || !y) throw Error("internal: exact product has no primitive");
    Element w = multiply(bar(alpha), *y) + multiply(bar(*x), gamma);
    if (!differential(w).is_zero()) throw Error("internal: Massey representative is not a cocycle");
    res.witness_x = *x;
    res.witness_y = *y;
    res.representative_cochain = w;
    res.representative = ring->project(w);

    std::vector<CohomologyClass> indet;
    if (q + r - 1 >= 0)
        for (std::size_t i = 0; i < ring->betti(q + r - 1); ++i)
            indet.push_back(cup(a, ring->basis_class(q + r - 1, i)));
    if (p + q - 1 >= 0)
        for (std::size_t i = 0; i < ring->betti(p + q - 1); ++i)
            indet.push_back(cup(ring->basis_class(p + q - 1, i), c));
    res.indeterminacy = span_of_images(dim, indet);

    const CohomologyClass gens[] = {a, c};
    res.ideal_piece = ideal_degree_piece(ring, gens, n);

    res.zero_test = coset_meets(res.coset(), Subspace::zero(dim)) ? Verdict::Vanishes : Verdict::DoesNotVanish;
    res.ideal_test = (res.ideal_piece + res.indeterminacy).contains(res.representative->coords())
                         ? Verdict::Vanishes
                         : Verdict::DoesNotVanish;
    ++g_computed;
    if (!res.verdicts_agree()) ++g_disagreements;
    return res;
}

CohomologyClass massey_representative(const CohomologyClass& a, const CohomologyClass& b, const CohomologyClass& c,
                                      const Element& x, const Element& y) {
    const RingPtr& ring = a.ring();
    const Element alpha = ring->lift(a), beta = ring->lift(b), gamma = ring->lift(c);
    if (!(differential(x) == multiply(bar(alpha), beta)))
        throw ValidationError("witness x does not satisfy dx = bar(a) b");
    if (!(differential(y) == multiply(bar(beta), gamma)))
        throw ValidationError("witness y does not satisfy dy = bar(b) c");
    return ring->project(multiply(bar(alpha), y) + multiply(bar(x), gamma));
}

ContainmentReport check_scaling_law(const CohomologyClass& xi, const MasseyResult& r, int slot) {
    if (!r.defined) throw NotDefined("source Massey product is not defined");
    if (xi.degree() % 2 != 0) throw ValidationError("scaling class must have even degree");
    if (slot < 1 || slot > 3) throw ValidationError("slot must be 1, 2 or 3");
    const CohomologyClass a = slot == 1 ? cup(xi, r.a) : r.a;
    const CohomologyClass b = slot == 2 ? cup(xi, r.b) : r.b;
    const CohomologyClass c = slot == 3 ? cup(xi, r.c) : r.c;
    MasseyResult target = triple_massey(a, b, c);
    if (!target.defined) throw NotDefined("scaled Massey product is not defined: " + target.obstruction);

    const RingPtr& ring = r.a.ring();
    const std::size_t dim = ring->betti(target.degree);
    auto scale_by_xi = [&](const CohomologyClass& v) { return cup(xi, v); };
    AffineCoset image{scale_by_xi(*r.representative).coords(),
                      map_subspace(ring, r.degree, r.indeterminacy, dim, scale_by_xi)};
    return compare("scaling, slot " + std::to_string(slot), image, std::move(target));
}

ContainmentReport check_functoriality(const AlgebraMorphism& f, const RingPtr& target_ring, const MasseyResult& r) {
    if (!r.defined) throw NotDefined("source Massey product is not defined");
    auto push = [&](const CohomologyClass& v) { return induced(f, target_ring, v); };
    MasseyResult target = triple_massey(push(r.a), push(r.b), push(r.c));
    if (!target.defined) throw NotDefined("image Massey product is not defined: " + target.obstruction);
    const std::size_t dim = target_ring->betti(target.degree);
    AffineCoset image{push(*r.representative).coords(),
                      map_subspace(r.a.ring(), r.degree, r.indeterminacy, dim, push)};
    return compare("functoriality", image, std::move(target));
}

ContainmentReport check_class_map_containment(std::string law, const Matrix& map, const MasseyResult& source,
                                              MasseyResult target) {
    AffineCoset src = source.coset();
    if (map.cols() != src.point.size() || map.rows() != target.a.ring()->betti(target.degree))
        throw DimensionMismatch("class map shape does not match the Massey products");
    std::vector<Vector> dirs;
    for (const auto& v : src.direction.basis()) dirs.push_back(map.apply(v));
    AffineCoset image{map.apply(src.point), Subspace::span(map.rows(), dirs)};
    return compare(std::move(law), image, std::move(target));
}

}  // namespace massey
