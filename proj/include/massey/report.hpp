#pragma once

#include "massey/equivariant.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace massey {

using Json = nlohmann::ordered_json;

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitValidation = 3,
    kExitCapTooSmall = 4,
    kExitPremiseFailed = 5,
    kExitInvalidDatum = 6,
    kExitInconclusive = 7,
    kExitVanishes = 10,
    kExitUndefined = 11,
    kExitFindings = 12,
    kExitBudgetExhausted = 13,
    kExitVerdictDisagreement = 20,
};

const char* status_for(int exit_code);

struct Report {
    std::string command;
    std::string status = "ok";
    int exit_code = 0;
    Json payload = Json::object();
    /// Human-readable audit trail, one step per line.
    std::vector<std::string> trail;

    void set_exit(int code) {
        exit_code = code;
        status = status_for(code);
    }
    friend bool operator==(const Report&, const Report&) = default;
};

/// Single JSON document; rationals are strings such as "-3/4".
std::string render_structured(const Report& r);
/// Inverse of render_structured. Throws ParseError.
Report parse_structured(std::string_view text);
std::string render_human(const Report& r);

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Element& e);
Json to_json(const CohomologyClass& c);
Json to_json(const Subspace& s);
Json to_json(const AffineCoset& c);
Json to_json(const MasseyResult& r);
Json to_json(const ContainmentReport& r);
Json to_json(const HCoefficientDecomposition& d);
Json to_json(const EulerClass& e);
Json to_json(const ZeroDivisorReport& r);
Json to_json(const HCoefficientArgument& a);
Json to_json(const Lemma32Report& r);
Json to_json(const DatumCheck& c);
Json to_json(const TransferValidation& v);
Json to_json(const Lemma31Report& r);
Json to_json(const TheoremReport& r);
Json to_json(const ScanReport& r);

}  // namespace massey
