#include "massey/equivariant.hpp"

#include "massey/errors.hpp"

#include <algorithm>

namespace massey {

CohomologyClass transport(const CohomologyClass& c, const RingPtr& to) {
    if (c.ring().get() == to.get()) return c;
    const int n = c.degree();
    Element rep = c.ring()->lift(c);
    const auto& from_alg = *c.ring()->algebra();
    const auto& to_alg = *to->algebra();
    if (n > to_alg.cap() || from_alg.labels(n) != to_alg.labels(n))
        throw DimensionMismatch("class of degree " + std::to_string(n) + " does not belong to the target presentation");
    return to->project(Element(to->algebra(), n, rep.coords()));
}

// ---------------------------------------------------------------------------

ExtendedModel ExtendedModel::build(const AlgebraPtr& a, int cap) {
    if (cap < a->cap())
        throw CapOverflow("extension cap " + std::to_string(cap) + " is below the base cap " +
                              std::to_string(a->cap()),
                          a->cap());
    return from_extension(tensor_polynomial_generator(a, "h", cap));
}

ExtendedModel ExtendedModel::from_extension(AlgebraPtr ext) {
    if (ext->kind() != PresentationKind::Extension) throw ValidationError("not a polynomial extension");
    auto base_ring = compute_cohomology(ext->extension_base());
    auto ring = compute_cohomology(ext);
    auto inc = extension_inclusion(ext);
    auto ret = extension_retraction(ext);
    return ExtendedModel(std::move(ext), std::move(base_ring), std::move(ring), std::move(inc), std::move(ret));
}

CohomologyClass ExtendedModel::h_power(int j) const { return embed(base_ring_->unit(), j); }

CohomologyClass ExtendedModel::to_base(const CohomologyClass& a) const { return transport(a, base_ring_); }

CohomologyClass ExtendedModel::embed(const CohomologyClass& a, int j) const {
    if (a.ring().get() == ring_.get() && j == 0) return a;
    CohomologyClass b = to_base(a);
    const int n = b.degree() + 2 * j;
    ring_->betti(n);  // cap check
    Element lift = base_ring_->lift(b);
    Vector coords(algebra_->dim(n));
    const std::size_t off = extension_block_offset(*algebra_, n, j);
    for (std::size_t i = 0; i < lift.coords().size(); ++i) coords[off + i] = lift.coords()[i];
    return ring_->project(Element(algebra_, n, std::move(coords)));
}

HCoefficientDecomposition h_coefficients(const ExtendedModel& model, const CohomologyClass& c) {
    CohomologyClass cc = transport(c, model.ring());
    const int n = cc.degree();
    Element lift = model.ring()->lift(cc);
    const auto& base = model.base();
    HCoefficientDecomposition out;
    out.degree = n;
    for (int j = 0; 2 * j <= n; ++j) {
        const int bn = n - 2 * j;
        const std::size_t off = extension_block_offset(*model.algebra(), n, j);
        Vector block(base->dim(bn));
        for (std::size_t i = 0; i < block.size(); ++i) block[i] = lift.coords()[off + i];
        out.coefficients.push_back(model.base_ring()->project(Element(base, bn, std::move(block))));
    }
    return out;
}

CohomologyClass reconstruct(const ExtendedModel& model, const HCoefficientDecomposition& d) {
    CohomologyClass sum = model.ring()->zero(d.degree);
    for (std::size_t j = 0; j < d.coefficients.size(); ++j) sum = sum + model.embed(d.coefficients[j], static_cast<int>(j));
    return sum;
}

// ---------------------------------------------------------------------------

WeightedLineBundleDatum::WeightedLineBundleDatum(CohomologyClass c1_, long weight_)
    : c1(std::move(c1_)), weight(weight_) {
    if (weight == 0) throw ValidationError("line bundle weight must be nonzero");
    if (c1.degree() != 2) {
        if (!c1.is_zero()) throw ValidationError("first Chern class must have degree 2, got " + std::to_string(c1.degree()));
        c1 = c1.ring()->zero(2);
    }
}

EulerClass EulerClass::synthetic(CohomologyClass chi) {
    if (chi.degree() % 2 != 0) throw ValidationError("Euler class must have even degree");
    EulerClass e{std::move(chi), 0, {}, std::nullopt};
    e.m = e.chi.degree() / 2;
    return e;
}

EulerClass euler_class(const ExtendedModel& model, const std::vector<WeightedLineBundleDatum>& bundles) {
    if (bundles.empty()) throw ValidationError("at least one line bundle is required");
    const int m = static_cast<int>(bundles.size());
    if (2 * m > model.ring()->top_degree())
        throw CapOverflow("Euler class of degree " + std::to_string(2 * m) + " needs cap " + std::to_string(2 * m + 1),
                          2 * m + 1);
    CohomologyClass chi = model.ring()->unit();
    Scalar leading(1);
    const CohomologyClass h = model.h();
    for (const auto& b : bundles) {
        chi = cup(chi, model.embed(b.c1) + Scalar(b.weight) * h);
        leading *= Scalar(b.weight);
    }
    auto coeffs = h_coefficients(model, chi);
    CohomologyClass top = coeffs.coefficients.at(m);
    if (!(top == leading * model.base_ring()->unit()))
        throw ValidationError("Euler class leading coefficient is " + top.to_string() + ", expected " + leading.str());
    return EulerClass{std::move(chi), m, bundles, std::move(top)};
}

Matrix multiplication_matrix(const CohomologyClass& xi, int n) {
    const RingPtr& ring = xi.ring();
    const std::size_t cols = ring->betti(n);
    Matrix out(ring->betti(n + xi.degree()), cols);
    for (std::size_t i = 0; i < cols; ++i) out.set_column(i, cup(xi, ring->basis_class(n, i)).coords());
    return out;
}

ZeroDivisorReport verify_not_zero_divisor(const RingPtr& ring, const EulerClass& chi, std::optional<int> max_degree) {
    CohomologyClass c = transport(chi.chi, ring);
    ZeroDivisorReport rep;
    int last = ring->top_degree() - c.degree();
    if (max_degree) last = std::min(last, *max_degree);
    rep.checked_through = last;
    for (int n = 0; n <= last; ++n) {
        Matrix m = multiplication_matrix(c, n);
        if (rank(m) == m.cols()) continue;
        const Subspace ker = kernel_basis(m);
        rep.holds = false;
        rep.failing_degree = n;
        rep.kernel_witness = ring->from_coords(n, ker.basis().front());
        break;
    }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<CohomologyClass> coefficient(const HCoefficientDecomposition& d, int j) {
    if (j < 0 || j >= static_cast<int>(d.coefficients.size())) return std::nullopt;
    return d.coefficients[j];
}

// Solves target = p·a + q·b over H; returns (a, b) when solvable.
std::optional<std::pair<CohomologyClass, CohomologyClass>> solve_ideal(const CohomologyClass& p,
                                                                       const CohomologyClass& q,
                                                                       const CohomologyClass& target) {
    const RingPtr& ring = target.ring();
    const int n = target.degree();
    const int da = n - p.degree(), db = n - q.degree();
    const std::size_t na = da >= 0 ? ring->betti(da) : 0;
    const std::size_t nb = db >= 0 ? ring->betti(db) : 0;
    Matrix sys(ring->betti(n), na + nb);
    for (std::size_t i = 0; i < na; ++i) sys.set_column(i, cup(p, ring->basis_class(da, i)).coords());
    for (std::size_t i = 0; i < nb; ++i) sys.set_column(na + i, cup(q, ring->basis_class(db, i)).coords());
    auto sol = solve(sys, target.coords());
    if (!sol) return std::nullopt;
    Vector ca(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(na));
    Vector cb(sol->begin() + static_cast<std::ptrdiff_t>(na), sol->end());
    auto a = da >= 0 ? ring->from_coords(da, std::move(ca)) : ring->zero(0);
    auto b = db >= 0 ? ring->from_coords(db, std::move(cb)) : ring->zero(0);
    return std::make_pair(a, b);
}

}  // namespace

bool HCoefficientArgument::consistent() const {
    if (z_in_ext_ideal != x_in_base_ideal) return false;
    if (!z_in_ext_ideal) return true;
    return cancellation_holds.value_or(false) && top_coefficient_identity.value_or(false);
}

HCoefficientArgument h_coefficient_argument(const ExtendedModel& model, const EulerClass& chi_in,
                                            const CohomologyClass& u_in, const CohomologyClass& w_in,
                                            const CohomologyClass& x_in) {
    const RingPtr& ring = model.ring();
    const RingPtr& base = model.base_ring();
    const CohomologyClass chi = transport(chi_in.chi, ring);
    const int m = chi.degree() / 2;
    const CohomologyClass u = model.to_base(u_in), w = model.to_base(w_in), x = model.to_base(x_in);
    const CohomologyClass U = model.embed(u), W = model.embed(w), X = model.embed(x);
    const CohomologyClass chi2 = cup(chi, chi);
    CohomologyClass z = cup(chi, cup(chi2, X));

    HCoefficientArgument arg(x, z);
    CohomologyClass gens[] = {u, w};
    arg.x_in_base_ideal = ideal_degree_piece(base, gens, x.degree()).contains(x.coords());

    auto sol = solve_ideal(cup(chi, U), cup(chi, W), z);
    arg.z_in_ext_ideal = sol.has_value();
    if (!sol) return arg;
    arg.a = sol->first;
    arg.b = sol->second;
    // χ(χ²x − ua − wb) = 0, so with χ regular χ²x = ua + wb.
    arg.cancellation_holds = cup(chi2, X) == cup(U, *arg.a) + cup(W, *arg.b);
    arg.a_coefficients = h_coefficients(model, *arg.a);
    arg.b_coefficients = h_coefficients(model, *arg.b);
    auto chi2_coeffs = h_coefficients(model, chi2);
    arg.chi_squared_top = chi2_coeffs.coefficients.at(2 * m);
    CohomologyClass lhs = cup(*arg.chi_squared_top, x);
    CohomologyClass rhs = base->zero(x.degree());
    if (auto a2m = coefficient(*arg.a_coefficients, 2 * m)) rhs = rhs + cup(u, *a2m);
    if (auto b2m = coefficient(*arg.b_coefficients, 2 * m)) rhs = rhs + cup(w, *b2m);
    arg.top_coefficient_identity = lhs == rhs;
    return arg;
}

int lemma_3_2_required_cap(int m, int du, int dv, int dw) {
    const int n = du + dv + dw - 1;
    return std::max({n + 6 * m, du + dv + 4 * m, dv + dw + 4 * m, n}) + 1;
}

bool Lemma32Report::non_vanishing() const {
    if (!scaled_product || !scaled_product->defined || scaled_product->vanishes()) return false;
    if (!embedded_product || !embedded_product->defined || embedded_product->vanishes()) return false;
    if (!not_zero_divisor || !not_zero_divisor->holds) return false;
    if (!inclusion_containment || !inclusion_containment->holds()) return false;
    if (!retraction_containment || !retraction_containment->holds()) return false;
    if (scaling_chain.size() != 3) return false;
    for (const auto& c : scaling_chain)
        if (!c.holds()) return false;
    return witness_in_product && argument && argument->fires() && argument->consistent();
}

Lemma32Report check_lemma_3_2(const AlgebraPtr& a, const CohomologyClass& u, const CohomologyClass& v,
                              const CohomologyClass& w, const std::vector<WeightedLineBundleDatum>& bundles,
                              std::optional<int> cap) {
    Lemma32Report rep;
    rep.m = static_cast<int>(bundles.size());
    rep.required_cap = lemma_3_2_required_cap(rep.m, u.degree(), v.degree(), w.degree());
    rep.cap = cap.value_or(std::max(rep.required_cap, a->cap()));
    if (rep.cap < rep.required_cap)
        throw CapOverflow("scaled Massey product for m = " + std::to_string(rep.m) + " needs cap " +
                              std::to_string(rep.required_cap) + " (cap is " + std::to_string(rep.cap) + ")",
                          rep.required_cap);

    rep.model = ExtendedModel::build(a, rep.cap);
    const ExtendedModel& model = *rep.model;
    const CohomologyClass bu = model.to_base(u), bv = model.to_base(v), bw = model.to_base(w);

    rep.base_product = triple_massey(bu, bv, bw);
    if (!rep.base_product->defined)
        throw PremiseViolated("premise violated: <u, v, w> is not defined (" + rep.base_product->obstruction + ")");
    if (rep.base_product->vanishes())
        throw PremiseViolated("premise violated: <" + bu.to_string() + ", " + bv.to_string() + ", " + bw.to_string() +
                              "> vanishes, no non-vanishing product to transfer");

    std::vector<WeightedLineBundleDatum> local;
    for (const auto& b : bundles) local.emplace_back(model.to_base(b.c1), b.weight);
    rep.chi = euler_class(model, local);
    rep.not_zero_divisor = verify_not_zero_divisor(model.ring(), *rep.chi);

    rep.embedded_product = triple_massey(model.embed(bu), model.embed(bv), model.embed(bw));
    rep.inclusion_containment = check_functoriality(model.inclusion(), model.ring(), *rep.base_product);
    if (rep.embedded_product->defined)
        rep.retraction_containment = check_functoriality(model.retraction(), model.base_ring(), *rep.embedded_product);

    const CohomologyClass& chi = rep.chi->chi;
    MasseyResult current = *rep.embedded_product;
    for (int slot = 1; slot <= 3; ++slot) {
        rep.scaling_chain.push_back(check_scaling_law(chi, current, slot));
        current = rep.scaling_chain.back().target_product;
    }
    rep.scaled_product = current;

    const CohomologyClass x = *rep.base_product->representative;
    rep.witness = cup(chi, cup(chi, cup(chi, model.embed(x))));
    rep.witness_in_product = rep.scaled_product->defined && rep.scaled_product->coset().contains(rep.witness->coords());
    rep.argument = h_coefficient_argument(model, *rep.chi, bu, bw, x);
    rep.witness_coefficients = h_coefficients(model, *rep.witness);
    return rep;
}

}  // namespace massey
