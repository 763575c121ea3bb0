#include "massey/report.hpp"

#include "massey/errors.hpp"

#include <sstream>

namespace massey {

const char* status_for(int exit_code) {
    switch (exit_code) {
        case kExitOk: return "ok";
        case kExitUsage: return "usage-error";
        case kExitParse: return "parse-error";
        case kExitValidation: return "invalid-input";
        case kExitCapTooSmall: return "cap-too-small";
        case kExitPremiseFailed: return "premise-failed";
        case kExitInvalidDatum: return "invalid-datum";
        case kExitInconclusive: return "inconclusive";
        case kExitVanishes: return "vanishes";
        case kExitUndefined: return "undefined";
        case kExitFindings: return "findings";
        case kExitBudgetExhausted: return "budget-exhausted";
        case kExitVerdictDisagreement: return "verdict-disagreement";
        default: return "error";
    }
}

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        out.push_back(to_json(Vector(row.begin(), row.end())));
    }
    return out;
}

Json to_json(const Element& e) {
    Json out;
    out["degree"] = e.degree();
    out["cochain"] = e.to_string();
    out["coords"] = to_json(e.coords());
    return out;
}

Json to_json(const CohomologyClass& c) {
    Json out;
    out["degree"] = c.degree();
    out["cocycle"] = c.to_string();
    out["coords"] = to_json(c.coords());
    return out;
}

Json to_json(const Subspace& s) {
    Json out;
    out["ambient_dim"] = s.ambient_dim();
    out["dim"] = s.dim();
    Json basis = Json::array();
    for (const auto& v : s.basis()) basis.push_back(to_json(v));
    out["basis"] = std::move(basis);
    return out;
}

Json to_json(const AffineCoset& c) {
    Json out;
    out["point"] = to_json(c.point);
    out["direction"] = to_json(c.direction);
    return out;
}

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? to_json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const MasseyResult& r) {
    Json out;
    out["triple"] = Json::array({to_json(r.a), to_json(r.b), to_json(r.c)});
    out["degree"] = r.degree;
    out["defined"] = r.defined;
    if (!r.defined) {
        out["obstruction"] = r.obstruction;
        return out;
    }
    out["witness_x"] = opt(r.witness_x);
    out["witness_y"] = opt(r.witness_y);
    out["representative_cochain"] = opt(r.representative_cochain);
    out["representative"] = opt(r.representative);
    out["indeterminacy"] = to_json(r.indeterminacy);
    out["ideal_piece"] = to_json(r.ideal_piece);
    out["zero_test"] = to_string(r.zero_test);
    out["ideal_test"] = to_string(r.ideal_test);
    out["verdicts_agree"] = r.verdicts_agree();
    return out;
}

Json to_json(const ContainmentReport& r) {
    Json out;
    out["law"] = r.law;
    out["image"] = to_json(r.image);
    out["target"] = to_json(r.target);
    out["target_product"] = to_json(r.target_product);
    out["point_contained"] = r.point_contained;
    out["direction_contained"] = r.direction_contained;
    out["holds"] = r.holds();
    return out;
}

Json to_json(const HCoefficientDecomposition& d) {
    Json out;
    out["degree"] = d.degree;
    Json coeffs = Json::array();
    for (std::size_t j = 0; j < d.coefficients.size(); ++j) {
        Json c = to_json(d.coefficients[j]);
        c["h_power"] = j;
        coeffs.push_back(std::move(c));
    }
    out["coefficients"] = std::move(coeffs);
    return out;
}

Json to_json(const EulerClass& e) {
    Json out;
    out["chi"] = to_json(e.chi);
    out["m"] = e.m;
    Json bundles = Json::array();
    for (const auto& b : e.bundles) {
        Json j;
        j["c1"] = to_json(b.c1);
        j["weight"] = b.weight;
        bundles.push_back(std::move(j));
    }
    out["bundles"] = std::move(bundles);
    out["leading"] = opt(e.leading);
    return out;
}

Json to_json(const ZeroDivisorReport& r) {
    Json out;
    out["holds"] = r.holds;
    out["checked_through"] = r.checked_through;
    out["failing_degree"] = r.failing_degree ? Json(*r.failing_degree) : Json(nullptr);
    out["kernel_witness"] = opt(r.kernel_witness);
    return out;
}

Json to_json(const HCoefficientArgument& a) {
    Json out;
    out["x"] = to_json(a.x);
    out["z"] = to_json(a.z);
    out["z_in_ext_ideal"] = a.z_in_ext_ideal;
    out["x_in_base_ideal"] = a.x_in_base_ideal;
    out["a"] = opt(a.a);
    out["b"] = opt(a.b);
    out["cancellation_holds"] = a.cancellation_holds ? Json(*a.cancellation_holds) : Json(nullptr);
    out["a_coefficients"] = opt(a.a_coefficients);
    out["b_coefficients"] = opt(a.b_coefficients);
    out["chi_squared_top"] = opt(a.chi_squared_top);
    out["top_coefficient_identity"] =
        a.top_coefficient_identity ? Json(*a.top_coefficient_identity) : Json(nullptr);
    out["fires"] = a.fires();
    out["consistent"] = a.consistent();
    return out;
}

Json to_json(const Lemma32Report& r) {
    Json out;
    out["m"] = r.m;
    out["cap"] = r.cap;
    out["required_cap"] = r.required_cap;
    out["euler"] = opt(r.chi);
    if (r.chi && r.model) out["euler_h_coefficients"] = to_json(h_coefficients(*r.model, r.chi->chi));
    out["not_zero_divisor"] = opt(r.not_zero_divisor);
    out["base_product"] = opt(r.base_product);
    out["embedded_product"] = opt(r.embedded_product);
    out["inclusion_containment"] = opt(r.inclusion_containment);
    out["retraction_containment"] = opt(r.retraction_containment);
    Json chain = Json::array();
    for (const auto& c : r.scaling_chain) chain.push_back(to_json(c));
    out["scaling_chain"] = std::move(chain);
    out["scaled_product"] = opt(r.scaled_product);
    out["witness"] = opt(r.witness);
    out["witness_in_product"] = r.witness_in_product;
    out["witness_h_coefficients"] = opt(r.witness_coefficients);
    out["argument"] = opt(r.argument);
    out["non_vanishing"] = r.non_vanishing();
    return out;
}

Json to_json(const DatumCheck& c) {
    Json out;
    out["name"] = c.name;
    out["passed"] = c.passed;
    out["detail"] = c.detail;
    out["degree"] = c.degree ? Json(*c.degree) : Json(nullptr);
    out["witness"] = opt(c.witness);
    return out;
}

Json to_json(const TransferValidation& v) {
    Json out;
    Json checks = Json::array();
    for (const auto* c : v.checks()) checks.push_back(to_json(*c));
    out["checks"] = std::move(checks);
    out["corollary_consistent"] = v.corollary_consistent;
    out["corollary_detail"] = v.corollary_detail;
    out["valid"] = v.valid();
    return out;
}

Json to_json(const Lemma31Report& r) {
    Json out;
    out["fixed_product"] = opt(r.fixed_product);
    out["scaled_product"] = opt(r.scaled_product);
    Json pushed = Json::array();
    for (const auto& p : r.pushed) pushed.push_back(opt(p));
    out["pushed"] = std::move(pushed);
    out["uv_pulls_back"] = r.uv_pulls_back;
    out["vw_pulls_back"] = r.vw_pulls_back;
    out["uv_vanishes"] = r.uv_vanishes;
    out["vw_vanishes"] = r.vw_vanishes;
    out["ambient_product"] = opt(r.ambient_product);
    out["containment"] = opt(r.containment);
    out["verdict"] = to_string(r.verdict);
    out["reason"] = r.reason;
    return out;
}

Json to_json(const TheoremReport& r) {
    Json out;
    out["status"] = to_string(r.status);
    out["lemma32"] = to_json(r.lemma32);
    out["validation"] = opt(r.validation);
    out["lemma31"] = opt(r.lemma31);
    return out;
}

Json to_json(const ScanReport& r) {
    Json out;
    out["total"] = r.total;
    out["evaluated"] = r.results.size();
    out["budget_exhausted"] = r.budget_exhausted;
    out["work"] = r.work;
    out["findings"] = r.findings();
    out["invalid_data"] = r.invalid_data();
    Json results = Json::array();
    for (const auto& c : r.results) {
        Json j;
        j["name"] = c.name;
        j["outcome"] = to_string(c.outcome);
        j["detail"] = c.detail;
        if (c.report) j["status"] = to_string(c.report->status);
        results.push_back(std::move(j));
    }
    out["results"] = std::move(results);
    return out;
}

// ---------------------------------------------------------------------------

std::string render_structured(const Report& r) {
    Json out;
    out["command"] = r.command;
    out["status"] = r.status;
    out["exit_code"] = r.exit_code;
    out["payload"] = r.payload;
    out["trail"] = r.trail;
    return out.dump(2) + "\n";
}

Report parse_structured(std::string_view text) {
    Json in;
    try {
        in = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed report: ") + e.what(), 1, static_cast<int>(e.byte));
    }
    Report r;
    try {
        r.command = in.at("command").get<std::string>();
        r.status = in.at("status").get<std::string>();
        r.exit_code = in.at("exit_code").get<int>();
        r.payload = in.at("payload");
        r.trail = in.at("trail").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what(), 1, 0);
    }
    return r;
}

namespace {

bool is_leaf(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string leaf(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

bool flat_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j) {
        if (!is_leaf(e) && !flat_array(e)) return false;
    }
    return true;
}

std::string inline_array(const Json& j) {
    std::string s = "[";
    bool first = true;
    for (const auto& e : j) {
        if (!first) s += ", ";
        first = false;
        s += e.is_array() ? inline_array(e) : leaf(e);
    }
    return s + "]";
}

void render(std::ostringstream& os, const Json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_leaf(value)) {
                os << pad << key << ": " << leaf(value) << "\n";
            } else if (flat_array(value)) {
                os << pad << key << ": " << inline_array(value) << "\n";
            } else if (value.empty()) {
                os << pad << key << ": " << (value.is_array() ? "[]" : "{}") << "\n";
            } else {
                os << pad << key << ":\n";
                render(os, value, indent + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (is_leaf(e)) {
                os << pad << "- " << leaf(e) << "\n";
            } else if (flat_array(e)) {
                os << pad << "- " << inline_array(e) << "\n";
            } else {
                os << pad << "-\n";
                render(os, e, indent + 1);
            }
        }
    } else {
        os << pad << leaf(j) << "\n";
    }
}

}  // namespace

std::string render_human(const Report& r) {
    std::ostringstream os;
    os << r.command << ": " << r.status << " (exit " << r.exit_code << ")\n";
    if (!r.trail.empty()) {
        os << "\nsteps:\n";
        for (std::size_t i = 0; i < r.trail.size(); ++i) os << "  " << (i + 1) << ". " << r.trail[i] << "\n";
    }
    if (!r.payload.empty()) {
        os << "\ndetails:\n";
        render(os, r.payload, 1);
    }
    return os.str();
}

}  // namespace massey
