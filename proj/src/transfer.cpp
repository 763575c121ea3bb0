#include "massey/equivariant.hpp"

#include "massey/errors.hpp"

namespace massey {

CohomologyClass HamiltonianTransferDatum::restrict_class(const CohomologyClass& c) const {
    CohomologyClass a = transport(c, ambient);
    const int n = a.degree();
    if (n < 0 || n >= static_cast<int>(restrict.size()))
        throw CapOverflow("restriction not given in degree " + std::to_string(n), n + 1);
    return fixed->from_coords(n, restrict[n].apply(a.coords()));
}

CohomologyClass HamiltonianTransferDatum::push_class(const CohomologyClass& c) const {
    CohomologyClass f = transport(c, fixed);
    const int n = f.degree();
    if (n < 0 || n >= static_cast<int>(push.size()))
        throw CapOverflow("push-forward not given in degree " + std::to_string(n), n + 2 * m() + 1);
    return ambient->from_coords(n + 2 * m(), push[n].apply(f.coords()));
}

HamiltonianTransferDatum tautological_datum(const RingPtr& fixed, const EulerClass& chi) {
    EulerClass local = chi;
    local.chi = transport(chi.chi, fixed);
    HamiltonianTransferDatum d{fixed, fixed, {}, {}, local};
    const int top = fixed->top_degree();
    for (int n = 0; n <= top; ++n) d.restrict.push_back(Matrix::identity(fixed->betti(n)));
    for (int n = 0; n + 2 * local.m <= top; ++n) d.push.push_back(multiplication_matrix(local.chi, n));
    return d;
}

std::vector<const DatumCheck*> TransferValidation::checks() const {
    return {&shape, &restrict_injective, &restrict_multiplicative, &projection_formula, &not_zero_divisor,
            &push_injective};
}

bool TransferValidation::valid() const {
    for (const auto* c : checks())
        if (!c->passed) return false;
    return corollary_consistent;
}

namespace {

void fail(DatumCheck& c, std::string detail, int degree, std::optional<Vector> witness = std::nullopt) {
    c.passed = false;
    c.detail = std::move(detail);
    c.degree = degree;
    c.witness = std::move(witness);
}

std::string shape_of(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

TransferValidation validate_transfer_datum(const HamiltonianTransferDatum& d) {
    TransferValidation v;
    const int T = d.trust_degree();
    const int m = d.m();
    const RingPtr& amb = d.ambient;
    const RingPtr& fix = d.fixed;

    // Shape.
    for (int n = 0; n <= T && v.shape.passed; ++n) {
        if (n >= static_cast<int>(d.restrict.size())) {
            fail(v.shape, "restrict missing in degree " + std::to_string(n), n);
        } else if (d.restrict[n].rows() != fix->betti(n) || d.restrict[n].cols() != amb->betti(n)) {
            fail(v.shape,
                 "restrict[" + std::to_string(n) + "] is " + shape_of(d.restrict[n]) + ", expected " +
                     std::to_string(fix->betti(n)) + "x" + std::to_string(amb->betti(n)),
                 n);
        }
    }
    for (int n = 0; n + 2 * m <= T && v.shape.passed; ++n) {
        if (n >= static_cast<int>(d.push.size())) {
            fail(v.shape, "push missing in degree " + std::to_string(n), n);
        } else if (d.push[n].rows() != amb->betti(n + 2 * m) || d.push[n].cols() != fix->betti(n)) {
            fail(v.shape,
                 "push[" + std::to_string(n) + "] is " + shape_of(d.push[n]) + ", expected " +
                     std::to_string(amb->betti(n + 2 * m)) + "x" + std::to_string(fix->betti(n)),
                 n);
        }
    }
    if (d.chi.chi.degree() != 2 * m) fail(v.shape, "Euler class degree does not match m", 2 * m);
    if (!v.shape.passed) {
        for (auto* c : {&v.restrict_injective, &v.restrict_multiplicative, &v.projection_formula, &v.not_zero_divisor,
                        &v.push_injective})
            fail(*c, "not checked: datum shape is wrong", -1);
        v.corollary_detail = "not checked";
        return v;
    }
    const CohomologyClass chi = transport(d.chi.chi, fix);

    // (i) restrict injective.
    for (int n = 0; n <= T; ++n) {
        const Matrix& r = d.restrict[n];
        if (rank(r) == r.cols()) continue;
        const Subspace ker = kernel_basis(r);
        fail(v.restrict_injective, "restrict kills a nonzero class in degree " + std::to_string(n), n,
             ker.basis().front());
        break;
    }

    // restrict is a unital ring map.
    if (!(d.restrict_class(amb->unit()) == fix->unit())) fail(v.restrict_multiplicative, "restrict(1) != 1", 0);
    for (int p = 0; p <= T && v.restrict_multiplicative.passed; ++p)
        for (int q = p; p + q <= T && v.restrict_multiplicative.passed; ++q)
            for (std::size_t i = 0; i < amb->betti(p) && v.restrict_multiplicative.passed; ++i)
                for (std::size_t j = 0; j < amb->betti(q); ++j) {
                    auto a = amb->basis_class(p, i), b = amb->basis_class(q, j);
                    if (d.restrict_class(cup(a, b)) == cup(d.restrict_class(a), d.restrict_class(b))) continue;
                    fail(v.restrict_multiplicative,
                         "restrict(a*b) != restrict(a)*restrict(b) for a = " + a.to_string() + ", b = " + b.to_string(),
                         p + q);
                    break;
                }

    // (ii) projection formula.
    for (int n = 0; n + 2 * m <= T && v.projection_formula.passed; ++n)
        for (std::size_t i = 0; i < fix->betti(n); ++i) {
            auto x = fix->basis_class(n, i);
            auto lhs = d.restrict_class(d.push_class(x));
            auto rhs = cup(chi, x);
            if (lhs == rhs) continue;
            fail(v.projection_formula,
                 "restrict(push x) = " + lhs.to_string() + " but chi*x = " + rhs.to_string() + " for x = " +
                     x.to_string(),
                 n, x.coords());
            break;
        }

    // (iii) χ regular.
    auto nzd = verify_not_zero_divisor(fix, d.chi, T - 2 * m);
    if (!nzd.holds)
        fail(v.not_zero_divisor, "chi * x = 0 for x = " + nzd.kernel_witness->to_string(), *nzd.failing_degree,
             nzd.kernel_witness->coords());

    // (iv) push injective, and the argument that forces it.
    for (int n = 0; n + 2 * m <= T; ++n) {
        const Matrix& p = d.push[n];
        if (rank(p) == p.cols()) continue;
        const Subspace ker = kernel_basis(p);
        const Vector& k = ker.basis().front();
        fail(v.push_injective, "push kills a nonzero class in degree " + std::to_string(n), n, k);
        auto x = fix->from_coords(n, k);
        auto chix = cup(chi, x);
        const bool formula_ok = v.projection_formula.passed;
        const bool regular = v.not_zero_divisor.passed;
        v.corollary_detail = "x = " + x.to_string() + " lies in ker push; restrict(push x) = 0 and chi*x = " +
                             chix.to_string();
        if (!chix.is_zero())
            v.corollary_detail += ", so the projection formula fails at x";
        else
            v.corollary_detail += ", so chi is a zero divisor";
        // With the projection formula and a regular χ no kernel vector can exist.
        v.corollary_consistent = chix.is_zero() ? !regular : !formula_ok;
        break;
    }
    if (v.push_injective.passed)
        v.corollary_detail = "push is injective through degree " + std::to_string(T - 2 * m);
    return v;
}

// ---------------------------------------------------------------------------

const char* to_string(TransferVerdict v) { return v == TransferVerdict::NonVanishing ? "non-vanishing" : "inconclusive"; }
const char* to_string(TheoremStatus s) { return s == TheoremStatus::Confirmed ? "confirmed" : "inconclusive"; }

Lemma31Report check_lemma_3_1(const HamiltonianTransferDatum& d, const CohomologyClass& u_in,
                              const CohomologyClass& v_in, const CohomologyClass& w_in) {
    auto validation = validate_transfer_datum(d);
    if (!validation.valid()) {
        std::string why;
        for (const auto* c : validation.checks())
            if (!c->passed) {
                why = c->name + ": " + c->detail;
                break;
            }
        if (why.empty()) why = validation.corollary_detail;
        throw InvalidDatum("transfer datum is invalid (" + why + ")");
    }
    const CohomologyClass u = transport(u_in, d.fixed), v = transport(v_in, d.fixed), w = transport(w_in, d.fixed);
    const CohomologyClass chi = transport(d.chi.chi, d.fixed);

    Lemma31Report rep;
    rep.fixed_product = triple_massey(u, v, w);
    const CohomologyClass cu = cup(chi, u), cv = cup(chi, v), cw = cup(chi, w);
    rep.scaled_product = triple_massey(cu, cv, cw);
    if (!rep.scaled_product->defined)
        throw PremiseViolated("premise violated: <chi u, chi v, chi w> is not defined (" +
                              rep.scaled_product->obstruction + ")");

    const CohomologyClass U = d.push_class(u), V = d.push_class(v), W = d.push_class(w);
    rep.pushed[0] = U;
    rep.pushed[1] = V;
    rep.pushed[2] = W;
    const CohomologyClass UV = cup(U, V), VW = cup(V, W);
    rep.uv_pulls_back = d.restrict_class(UV) == cup(cu, cv);
    rep.vw_pulls_back = d.restrict_class(VW) == cup(cv, cw);
    rep.uv_vanishes = UV.is_zero();
    rep.vw_vanishes = VW.is_zero();
    if (!rep.uv_vanishes || !rep.vw_vanishes) {
        rep.reason = "pushed triple is not defined upstairs";
        return rep;
    }

    rep.ambient_product = triple_massey(U, V, W);
    rep.containment = check_class_map_containment("restrict <push u, push v, push w> in <chi u, chi v, chi w>",
                                                  d.restrict.at(rep.ambient_product->degree), *rep.ambient_product,
                                                  *rep.scaled_product);
    if (rep.scaled_product->vanishes()) {
        rep.reason = "<chi u, chi v, chi w> contains zero, the hypothesis of the transfer fails";
        return rep;
    }
    if (!rep.containment->holds()) {
        rep.reason = "containment under restrict fails";
        return rep;
    }
    if (rep.ambient_product->vanishes()) {
        rep.reason = "ambient product contains zero despite the containment";
        return rep;
    }
    rep.verdict = TransferVerdict::NonVanishing;
    rep.reason = "restrict maps the ambient product into a coset avoiding zero";
    return rep;
}

TheoremReport theorem_1_1_pipeline(const AlgebraPtr& a, const CohomologyClass& u, const CohomologyClass& v,
                                   const CohomologyClass& w, const std::vector<WeightedLineBundleDatum>& bundles,
                                   const DatumFactory& datum, std::optional<int> cap) {
    TheoremReport rep(check_lemma_3_2(a, u, v, w, bundles, cap));
    if (!rep.lemma32.non_vanishing()) return rep;
    if (!datum) {
        rep.status = TheoremStatus::Confirmed;
        return rep;
    }
    const ExtendedModel& model = *rep.lemma32.model;
    HamiltonianTransferDatum d = datum(model, *rep.lemma32.chi);
    rep.validation = validate_transfer_datum(d);
    if (!rep.validation->valid()) return rep;
    rep.lemma31 = check_lemma_3_1(d, model.embed(u), model.embed(v), model.embed(w));
    if (rep.lemma31->verdict == TransferVerdict::NonVanishing) rep.status = TheoremStatus::Confirmed;
    return rep;
}

// ---------------------------------------------------------------------------

const char* to_string(ConfigOutcome o) {
    switch (o) {
        case ConfigOutcome::NoPremise: return "no-premise";
        case ConfigOutcome::DatumInvalid: return "datum-invalid";
        case ConfigOutcome::Consistent: return "consistent";
        case ConfigOutcome::Finding: return "finding";
        case ConfigOutcome::Error: return "error";
    }
    return "error";
}

std::size_t ScanReport::findings() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.outcome == ConfigOutcome::Finding;
    return n;
}

std::size_t ScanReport::invalid_data() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.outcome == ConfigOutcome::DatumInvalid;
    return n;
}

namespace {

ConfigResult run_config(const FamilyConfig& cfg) {
    ConfigResult out;
    out.name = cfg.name;
    try {
        auto ring = compute_cohomology(cfg.model);
        auto u = ring->project(cfg.u), v = ring->project(cfg.v), w = ring->project(cfg.w);
        std::vector<WeightedLineBundleDatum> bundles;
        for (const auto& [c1, k] : cfg.bundles)
            bundles.emplace_back(c1.is_zero() ? ring->zero(2) : ring->project(c1), k);
        auto rep = theorem_1_1_pipeline(cfg.model, u, v, w, bundles, cfg.datum, cfg.cap);
        if (rep.validation && !rep.validation->valid()) {
            out.outcome = ConfigOutcome::DatumInvalid;
            for (const auto* c : rep.validation->checks())
                if (!c->passed) {
                    out.detail = c->name + ": " + c->detail;
                    break;
                }
        } else if (rep.status == TheoremStatus::Confirmed) {
            out.outcome = ConfigOutcome::Consistent;
            out.detail = rep.lemma31 ? "ambient product non-vanishing" : "no datum; extended product non-vanishing";
        } else {
            out.outcome = ConfigOutcome::Finding;
            out.detail = rep.lemma31 ? rep.lemma31->reason : "extended product not shown non-vanishing";
        }
        out.report = std::move(rep);
    } catch (const PremiseViolated& e) {
        out.outcome = ConfigOutcome::NoPremise;
        out.detail = e.what();
    } catch (const Error& e) {
        out.outcome = ConfigOutcome::Error;
        out.detail = e.what();
    }
    return out;
}

}  // namespace

ScanReport scan_families(const std::vector<FamilyConfig>& family, std::uint64_t budget) {
    ScanReport rep;
    rep.total = family.size();
    const std::uint64_t start = massey_tally().computed;
    for (const auto& cfg : family) {
        if (budget && massey_tally().computed - start >= budget) {
            rep.budget_exhausted = true;
            break;
        }
        rep.results.push_back(run_config(cfg));
    }
    rep.work = massey_tally().computed - start;
    return rep;
}

}  // namespace massey
