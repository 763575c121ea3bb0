#include "massey/commands.hpp"

#include "massey/errors.hpp"
#include "massey/parse.hpp"

#include <algorithm>
#include <sstream>

namespace massey {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string show(const CohomologyClass& c) { return "[" + c.to_string() + "]"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

AlgebraPtr recap(const AlgebraPtr& a, const std::optional<int>& cap) {
    return cap && *cap != a->cap() ? a->with_cap(*cap) : a;
}

/// Degree of the first nonzero-coefficient term, with generator degrees
/// taken from the named elements of `algebra`.
int polynomial_degree(const AlgebraPtr& algebra, const Polynomial& p) {
    for (const auto& t : p.terms) {
        if (t.coefficient.is_zero()) continue;
        int deg = 0;
        for (const auto& [name, e] : t.factors) {
            auto el = algebra->named_element(name);
            if (!el) throw ValidationError("unknown name '" + name + "'");
            deg += el->degree() * e;
        }
        return deg;
    }
    return 0;
}

std::vector<BundleDecl> cli_bundles(const CommandOptions& opts) {
    std::vector<BundleDecl> out;
    for (const auto& b : opts.bundles) out.push_back(parse_bundle(b));
    return out;
}

/// Document bundles followed by command-line ones; a single trivial bundle
/// of weight one when neither is given.
std::vector<BundleDecl> all_bundles(const InputDocument& doc, const CommandOptions& opts) {
    std::vector<BundleDecl> out = doc.bundles;
    auto extra = cli_bundles(opts);
    out.insert(out.end(), extra.begin(), extra.end());
    if (out.empty()) {
        BundleDecl d;
        d.c1.terms.push_back(PolynomialTerm{Scalar(0), {}});
        d.weight = 1;
        out.push_back(d);
    }
    return out;
}

std::string describe_bundles(const std::vector<WeightedLineBundleDatum>& bundles) {
    std::vector<std::string> parts;
    for (const auto& b : bundles) parts.push_back("(" + show(b.c1) + ", weight " + std::to_string(b.weight) + ")");
    return join(parts);
}

void trail_massey(std::vector<std::string>& t, const MasseyResult& r, const std::string& label) {
    t.push_back(label + " <" + show(r.a) + ", " + show(r.b) + ", " + show(r.c) + "> in degree " +
                std::to_string(r.degree));
    if (!r.defined) {
        t.push_back("  not defined: nonzero cup product " + r.obstruction);
        return;
    }
    t.push_back("  both cup products vanish");
    t.push_back("  dx = bar(a)*b with x = " + r.witness_x->to_string());
    t.push_back("  dy = bar(b)*c with y = " + r.witness_y->to_string());
    t.push_back("  bar(a)*y + bar(x)*c = " + r.representative_cochain->to_string() + ", class " +
                show(*r.representative));
    t.push_back("  indeterminacy a*H + H*c has dimension " + std::to_string(r.indeterminacy.dim()));
    t.push_back(std::string("  zero test: ") + to_string(r.zero_test) + ", ideal test: " + to_string(r.ideal_test));
}

void trail_containment(std::vector<std::string>& t, const ContainmentReport& c, const std::string& label = "") {
    t.push_back("  " + (label.empty() ? c.law : label + " (" + c.law + ")") + ": " + (c.holds() ? "holds" : "FAILS") + " (point " +
                yes_no(c.point_contained) + ", direction " + yes_no(c.direction_contained) + ")");
}

void trail_euler(std::vector<std::string>& t, const EulerClass& e) {
    std::string s = "chi = " + show(e.chi) + ", m = " + std::to_string(e.m);
    if (!e.bundles.empty()) s += ", bundles " + describe_bundles(e.bundles);
    if (e.leading) s += ", leading coefficient " + show(*e.leading);
    t.push_back(s);
}

void trail_zero_divisor(std::vector<std::string>& t, const ZeroDivisorReport& z) {
    if (z.holds) {
        t.push_back("chi is not a zero divisor through degree " + std::to_string(z.checked_through));
    } else {
        t.push_back("chi kills " + show(*z.kernel_witness) + " in degree " + std::to_string(*z.failing_degree));
    }
}

void trail_lemma32(std::vector<std::string>& t, const Lemma32Report& r) {
    t.push_back("cap " + std::to_string(r.cap) + " (required " + std::to_string(r.required_cap) + ")");
    if (r.chi) trail_euler(t, *r.chi);
    if (r.not_zero_divisor) trail_zero_divisor(t, *r.not_zero_divisor);
    if (r.base_product) trail_massey(t, *r.base_product, "base product");
    if (r.embedded_product) trail_massey(t, *r.embedded_product, "embedded product");
    if (r.inclusion_containment) trail_containment(t, *r.inclusion_containment, "inclusion into the extension");
    if (r.retraction_containment) trail_containment(t, *r.retraction_containment, "retraction h -> 0");
    t.push_back("scaling chain:");
    for (const auto& c : r.scaling_chain) trail_containment(t, c);
    if (r.scaled_product) trail_massey(t, *r.scaled_product, "scaled product");
    if (r.witness) {
        t.push_back("chi^3 x = " + show(*r.witness) + " lies in the scaled product: " + yes_no(r.witness_in_product));
    }
    if (r.witness_coefficients) {
        std::vector<std::string> parts;
        for (std::size_t j = 0; j < r.witness_coefficients->coefficients.size(); ++j)
            parts.push_back("h^" + std::to_string(j) + ": " + show(r.witness_coefficients->coefficients[j]));
        t.push_back("h-coefficients of chi^3 x: " + join(parts));
    }
    if (r.argument) {
        const auto& a = *r.argument;
        t.push_back(std::string("x in (u, w): ") + yes_no(a.x_in_base_ideal) +
                    "; chi^3 x in (chi u, chi w): " + yes_no(a.z_in_ext_ideal) +
                    "; coefficient comparison " + (a.consistent() ? "consistent" : "INCONSISTENT"));
    }
    t.push_back(std::string("scaled product non-vanishing: ") + yes_no(r.non_vanishing()));
}

void trail_validation(std::vector<std::string>& t, const TransferValidation& v) {
    for (const auto* c : v.checks()) {
        std::string s = "datum check " + c->name + ": " + (c->passed ? "passed" : "FAILED");
        if (!c->detail.empty()) s += " (" + c->detail + ")";
        t.push_back(s);
    }
    if (!v.corollary_detail.empty()) t.push_back("kernel of push: " + v.corollary_detail);
}

void trail_lemma31(std::vector<std::string>& t, const Lemma31Report& r) {
    if (r.fixed_product) trail_massey(t, *r.fixed_product, "fixed-point product");
    if (r.scaled_product) trail_massey(t, *r.scaled_product, "scaled product");
    for (int i = 0; i < 3; ++i) {
        if (r.pushed[i]) t.push_back("push of slot " + std::to_string(i + 1) + " = " + show(*r.pushed[i]));
    }
    t.push_back(std::string("restrict(UV) = chi u * chi v: ") + yes_no(r.uv_pulls_back) +
                ", restrict(VW) = chi v * chi w: " + yes_no(r.vw_pulls_back));
    t.push_back(std::string("UV = 0: ") + yes_no(r.uv_vanishes) + ", VW = 0: " + yes_no(r.vw_vanishes));
    if (r.ambient_product) trail_massey(t, *r.ambient_product, "ambient product");
    if (r.containment) trail_containment(t, *r.containment);
    t.push_back(std::string("transfer verdict: ") + to_string(r.verdict) + (r.reason.empty() ? "" : " (" + r.reason + ")"));
}

struct Classes {
    CohomologyClass u, v, w;
};

Classes classes_of(const RingPtr& ring, const Triple& t) {
    return {parse_class(ring, t[0]), parse_class(ring, t[1]), parse_class(ring, t[2])};
}

Json source_json(const std::filesystem::path& input) {
    return input.string();
}

}  // namespace

Report cmd_cohomology(const std::filesystem::path& input, const CommandOptions& opts) {
    Report rep;
    rep.command = "cohomology";
    InputDocument doc = load_document(input);
    AlgebraPtr a = recap(doc.algebra, opts.cap);
    RingPtr ring = compute_cohomology(a);
    int top = ring->top_degree();
    if (opts.max_degree) top = std::min(top, *opts.max_degree);
    rep.payload["source"] = source_json(input);
    rep.payload["cap"] = a->cap();
    rep.payload["trusted_through"] = ring->top_degree();
    Json betti = Json::array();
    Json degrees = Json::array();
    for (int n = 0; n <= top; ++n) {
        betti.push_back(ring->betti(n));
        Json d;
        d["degree"] = n;
        d["cochain_dim"] = a->dim(n);
        d["betti"] = ring->betti(n);
        Json classes = Json::array();
        std::vector<std::string> names;
        for (std::size_t i = 0; i < ring->betti(n); ++i) {
            names.push_back(ring->basis_class(n, i).to_string());
            classes.push_back(names.back());
        }
        d["classes"] = std::move(classes);
        degrees.push_back(std::move(d));
        rep.trail.push_back("H^" + std::to_string(n) + " has dimension " + std::to_string(ring->betti(n)) +
                            (names.empty() ? "" : ": " + join(names)));
    }
    rep.payload["betti"] = std::move(betti);
    rep.payload["degrees"] = std::move(degrees);
    rep.set_exit(kExitOk);
    return rep;
}

Report cmd_massey(const std::filesystem::path& input, const Triple& triple, const CommandOptions& opts) {
    Report rep;
    rep.command = "massey";
    InputDocument doc = load_document(input);
    RingPtr ring = compute_cohomology(recap(doc.algebra, opts.cap));
    auto [u, v, w] = classes_of(ring, triple);
    MasseyResult r = triple_massey(u, v, w);
    rep.payload["source"] = source_json(input);
    rep.payload["cap"] = ring->algebra()->cap();
    rep.payload["product"] = to_json(r);
    trail_massey(rep.trail, r, "product");
    if (!r.defined) {
        rep.set_exit(kExitUndefined);
    } else if (r.vanishes()) {
        rep.set_exit(kExitVanishes);
    } else {
        rep.set_exit(kExitOk);
    }
    return rep;
}

Report cmd_euler(const std::filesystem::path& input, const CommandOptions& opts) {
    Report rep;
    rep.command = "euler";
    InputDocument doc = load_document(input);
    int m = 0;
    std::vector<BundleDecl> bundles;
    if (doc.euler && doc.bundles.empty() && opts.bundles.empty()) {
        AlgebraPtr probe = tensor_polynomial_generator(doc.algebra, "h", std::max(doc.algebra->cap(), 2));
        m = polynomial_degree(probe, *doc.euler) / 2;
    } else {
        bundles = all_bundles(doc, opts);
        m = static_cast<int>(bundles.size());
    }
    const int cap = opts.cap.value_or(doc.algebra->cap() + 2 * m + 1);
    ExtendedModel model = cartan_model_trivial(doc.algebra, cap);
    InputDocument eff = doc;
    eff.bundles = bundles;
    EulerClass chi = euler_of(eff, model);
    ZeroDivisorReport z = verify_not_zero_divisor(model.ring(), chi);
    rep.payload["source"] = source_json(input);
    rep.payload["cap"] = cap;
    rep.payload["euler"] = to_json(chi);
    rep.payload["h_coefficients"] = to_json(h_coefficients(model, chi.chi));
    rep.payload["not_zero_divisor"] = to_json(z);
    trail_euler(rep.trail, chi);
    trail_zero_divisor(rep.trail, z);
    rep.set_exit(z.holds ? kExitOk : kExitInvalidDatum);
    return rep;
}

Report cmd_lemma32(const std::filesystem::path& input, const Triple& triple, const CommandOptions& opts) {
    Report rep;
    rep.command = "lemma32";
    InputDocument doc = load_document(input);
    RingPtr ring = compute_cohomology(doc.algebra);
    auto [u, v, w] = classes_of(ring, triple);
    auto bundles = bundles_of(all_bundles(doc, opts), ring);
    Lemma32Report r = check_lemma_3_2(doc.algebra, u, v, w, bundles, opts.cap);
    rep.payload["source"] = source_json(input);
    rep.payload["report"] = to_json(r);
    trail_lemma32(rep.trail, r);
    rep.set_exit(r.non_vanishing() ? kExitOk : kExitInconclusive);
    return rep;
}

Report cmd_transfer(const std::filesystem::path& input, const std::optional<Triple>& triple,
                    const CommandOptions& opts) {
    Report rep;
    rep.command = "transfer";
    InputDocument doc = load_document(input);
    if (doc.datum.kind == DatumKind::None) throw ValidationError("document has no transfer datum");

    AlgebraPtr probe = tensor_polynomial_generator(doc.algebra, "h", std::max(doc.algebra->cap(), 2));
    int m = 0;
    InputDocument eff = doc;
    if (doc.euler && doc.bundles.empty() && opts.bundles.empty()) {
        m = polynomial_degree(probe, *doc.euler) / 2;
    } else {
        eff.bundles = all_bundles(doc, opts);
        m = static_cast<int>(eff.bundles.size());
    }
    std::optional<std::array<Polynomial, 3>> polys;
    int cap = doc.ambient ? doc.ambient->cap() : doc.algebra->cap() + 2 * m;
    if (triple) {
        polys = std::array<Polynomial, 3>{parse_polynomial((*triple)[0]), parse_polynomial((*triple)[1]),
                                          parse_polynomial((*triple)[2])};
        int need = lemma_3_2_required_cap(m, polynomial_degree(probe, (*polys)[0]),
                                          polynomial_degree(probe, (*polys)[1]),
                                          polynomial_degree(probe, (*polys)[2]));
        if (!doc.ambient) cap = std::max(cap, need);
    }
    cap = std::max(opts.cap.value_or(cap), doc.algebra->cap());
    ExtendedModel model = cartan_model_trivial(doc.algebra, cap);
    EulerClass chi = euler_of(eff, model);
    HamiltonianTransferDatum d = datum_of(eff, model, chi);
    TransferValidation val = validate_transfer_datum(d);

    rep.payload["source"] = source_json(input);
    rep.payload["cap"] = cap;
    rep.payload["datum"] = doc.datum.kind == DatumKind::Tautological ? "tautological" : "explicit";
    rep.payload["euler"] = to_json(chi);
    rep.payload["validation"] = to_json(val);
    trail_euler(rep.trail, chi);
    trail_validation(rep.trail, val);
    if (!val.valid()) {
        rep.set_exit(kExitInvalidDatum);
        return rep;
    }
    if (!triple) {
        rep.set_exit(kExitOk);
        return rep;
    }
    CohomologyClass u = model.ring()->project(evaluate(model.algebra(), (*polys)[0]));
    CohomologyClass v = model.ring()->project(evaluate(model.algebra(), (*polys)[1]));
    CohomologyClass w = model.ring()->project(evaluate(model.algebra(), (*polys)[2]));
    Lemma31Report r = check_lemma_3_1(d, u, v, w);
    rep.payload["transfer"] = to_json(r);
    trail_lemma31(rep.trail, r);
    rep.set_exit(r.verdict == TransferVerdict::NonVanishing ? kExitOk : kExitInconclusive);
    return rep;
}

Report cmd_theorem11(const std::filesystem::path& input, const Triple& triple, const CommandOptions& opts) {
    Report rep;
    rep.command = "theorem11";
    InputDocument doc = load_document(input);
    RingPtr ring = compute_cohomology(doc.algebra);
    auto [u, v, w] = classes_of(ring, triple);
    auto decls = all_bundles(doc, opts);
    auto bundles = bundles_of(decls, ring);
    DatumFactory factory;
    std::string datum_kind = "tautological";
    if (doc.datum.kind == DatumKind::Explicit) {
        datum_kind = "explicit";
        InputDocument eff = doc;
        eff.bundles = decls;
        factory = [eff](const ExtendedModel& m, const EulerClass& chi) { return datum_of(eff, m, chi); };
    } else {
        factory = [](const ExtendedModel& m, const EulerClass& chi) { return tautological_datum(m.ring(), chi); };
    }
    TheoremReport r = theorem_1_1_pipeline(doc.algebra, u, v, w, bundles, factory, opts.cap);
    rep.payload["source"] = source_json(input);
    rep.payload["datum"] = datum_kind;
    rep.payload["report"] = to_json(r);
    trail_lemma32(rep.trail, r.lemma32);
    rep.trail.push_back("transfer datum: " + datum_kind);
    if (r.validation) trail_validation(rep.trail, *r.validation);
    if (r.lemma31) trail_lemma31(rep.trail, *r.lemma31);
    rep.trail.push_back(std::string("status: ") + to_string(r.status));
    if (r.validation && !r.validation->valid()) {
        rep.set_exit(kExitInvalidDatum);
    } else {
        rep.set_exit(r.status == TheoremStatus::Confirmed ? kExitOk : kExitInconclusive);
    }
    return rep;
}

Report cmd_scan(const std::filesystem::path& family, const CommandOptions& opts) {
    Report rep;
    rep.command = "scan";
    auto configs = load_family(family);
    ScanReport r = scan_families(configs, opts.budget);
    rep.payload["source"] = source_json(family);
    rep.payload["budget"] = opts.budget;
    rep.payload["scan"] = to_json(r);
    bool errors = false;
    for (const auto& c : r.results) {
        rep.trail.push_back(c.name + ": " + to_string(c.outcome) + (c.detail.empty() ? "" : " (" + c.detail + ")"));
        errors = errors || c.outcome == ConfigOutcome::Error;
    }
    rep.trail.push_back(std::to_string(r.results.size()) + " of " + std::to_string(r.total) +
                        " configurations evaluated, " + std::to_string(r.work) + " Massey products, " +
                        std::to_string(r.findings()) + " findings, " + std::to_string(r.invalid_data()) +
                        " invalid data");
    if (r.budget_exhausted) {
        rep.set_exit(kExitBudgetExhausted);
    } else if (r.findings() > 0) {
        rep.set_exit(kExitFindings);
    } else if (r.invalid_data() > 0) {
        rep.set_exit(kExitInvalidDatum);
    } else if (errors) {
        rep.set_exit(kExitValidation);
    } else {
        rep.set_exit(kExitOk);
    }
    return rep;
}

Report run_guarded(const std::string& command, const std::function<Report()>& body) {
    const auto before = massey_tally().disagreements;
    Report rep;
    auto fail = [&](int code, const std::string& kind, const std::string& what) {
        rep = Report{};
        rep.command = command;
        rep.set_exit(code);
        rep.payload["error"] = kind;
        rep.payload["message"] = what;
        rep.trail.push_back(kind + ": " + what);
    };
    try {
        rep = body();
    } catch (const ParseError& e) {
        fail(kExitParse, "parse-error", e.what());
        rep.payload["line"] = e.line();
        rep.payload["column"] = e.column();
    } catch (const CapOverflow& e) {
        fail(kExitCapTooSmall, "cap-too-small", e.what());
        rep.payload["required_cap"] = e.required_cap();
    } catch (const PremiseViolated& e) {
        fail(kExitPremiseFailed, "premise-failed", e.what());
    } catch (const InvalidDatum& e) {
        fail(kExitInvalidDatum, "invalid-datum", e.what());
    } catch (const NotDefined& e) {
        fail(kExitUndefined, "undefined", e.what());
    } catch (const std::exception& e) {
        fail(kExitValidation, "invalid-input", e.what());
    }
    const auto after = massey_tally().disagreements;
    if (after != before) {
        rep.payload["verdict_disagreements"] = after - before;
        rep.trail.push_back("zero test and ideal test disagreed " + std::to_string(after - before) + " time(s)");
        rep.set_exit(kExitVerdictDisagreement);
    }
    return rep;
}

}  // namespace massey
