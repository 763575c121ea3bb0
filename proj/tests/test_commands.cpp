#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "massey/commands.hpp"
#include "massey/errors.hpp"

#include <filesystem>

using namespace massey;

namespace {

const std::filesystem::path kRoot = MASSEY_SOURCE_DIR;

std::filesystem::path model(const char* name) { return kRoot / "models" / name; }

Report guarded(const std::string& name, const std::function<Report()>& f) { return run_guarded(name, f); }

}  // namespace

TEST_CASE("cohomology report") {
    Report r = guarded("cohomology", [] { return cmd_cohomology(model("heisenberg.cdga"), {}); });
    CHECK(r.exit_code == kExitOk);
    CHECK(r.payload["betti"] == Json::array({1, 2, 2, 1}));
    CHECK(r.payload["degrees"][2]["classes"] == Json::array({"x*z", "y*z"}));

    CommandOptions o;
    o.max_degree = 1;
    Report r2 = guarded("cohomology", [&] { return cmd_cohomology(model("heisenberg.cdga"), o); });
    CHECK(r2.payload["betti"] == Json::array({1, 2}));
}

TEST_CASE("massey exit codes") {
    auto run = [](const char* file, Triple t) {
        return guarded("massey", [&] { return cmd_massey(model(file), t, {}); });
    };
    Report ok = run("heisenberg.cdga", {"x", "x", "y"});
    CHECK(ok.exit_code == kExitOk);
    CHECK(ok.payload["product"]["representative"]["cocycle"] == "x*z");
    CHECK(ok.payload["product"]["witness_y"]["cochain"] == "-z");

    CHECK(run("heisenberg.cdga", {"x", "x*z", "y"}).exit_code == kExitUndefined);
    CHECK(run("heisenberg.cdga", {"x", "z", "y"}).exit_code == kExitValidation);
    CHECK(run("heisenberg.cdga", {"x", "w", "y"}).exit_code == kExitValidation);
    CHECK(run("heisenberg.cdga", {"x", "x +", "y"}).exit_code == kExitParse);
    CHECK(run("torus.cdga", {"x", "x", "x"}).exit_code == kExitVanishes);
    CHECK(run("missing.cdga", {"x", "x", "y"}).exit_code == kExitParse);

    CommandOptions small;
    small.cap = 2;
    Report cap = guarded("massey", [&] { return cmd_massey(model("heisenberg.cdga"), {"x", "x", "y"}, small); });
    CHECK(cap.exit_code == kExitCapTooSmall);
    CHECK(cap.payload["required_cap"] == 3);
}

TEST_CASE("euler and lemma32") {
    Report e = guarded("euler", [] { return cmd_euler(model("heisenberg.cdga"), {}); });
    CHECK(e.exit_code == kExitOk);
    CHECK(e.payload["euler"]["chi"]["cocycle"] == "h");

    CommandOptions twisted;
    twisted.bundles = {"x*z:2"};
    Report e2 = guarded("euler", [&] { return cmd_euler(model("heisenberg.cdga"), twisted); });
    CHECK(e2.payload["euler"]["chi"]["cocycle"] == "x*z + 2*h");
    CHECK(e2.payload["euler"]["leading"]["cocycle"] == "2");

    Report l = guarded("lemma32", [] { return cmd_lemma32(model("heisenberg.cdga"), {"x", "x", "y"}, {}); });
    CHECK(l.exit_code == kExitOk);
    CHECK(l.payload["report"]["required_cap"] == 9);
    CHECK(l.payload["report"]["witness"]["cocycle"] == "x*z*h^3");
    CHECK(l.payload["report"]["non_vanishing"] == true);

    CommandOptions eight;
    eight.cap = 8;
    CHECK(guarded("lemma32", [&] { return cmd_lemma32(model("heisenberg.cdga"), {"x", "x", "y"}, eight); }).exit_code ==
          kExitCapTooSmall);
    CHECK(guarded("lemma32", [] { return cmd_lemma32(model("torus.cdga"), {"x", "x", "y"}, {}); }).exit_code ==
          kExitPremiseFailed);
}

TEST_CASE("transfer and theorem11") {
    Report v = guarded("transfer", [] { return cmd_transfer(model("s2_rotation.cdga"), std::nullopt, {}); });
    CHECK(v.exit_code == kExitOk);
    CHECK(v.payload["validation"]["valid"] == true);

    Report t = guarded("transfer",
                       [] { return cmd_transfer(model("s2_rotation.cdga"), Triple{"e*h", "h - e*h", "e*h"}, {}); });
    CHECK(t.exit_code == kExitInconclusive);

    CHECK(guarded("transfer", [] { return cmd_transfer(model("heisenberg.cdga"), std::nullopt, {}); }).exit_code ==
          kExitValidation);

    Report th = guarded("theorem11", [] { return cmd_theorem11(model("heisenberg.cdga"), {"x", "x", "y"}, {}); });
    CHECK(th.exit_code == kExitOk);
    CHECK(th.payload["report"]["status"] == "confirmed");
    CHECK(th.payload["datum"] == "tautological");
}

TEST_CASE("scan exit codes") {
    auto scan = [](const char* file, std::uint64_t budget) {
        CommandOptions o;
        o.budget = budget;
        return guarded("scan", [&] { return cmd_scan(kRoot / "families" / file, o); });
    };
    Report ok = scan("bundled.family", 0);
    CHECK(ok.exit_code == kExitOk);
    CHECK(ok.payload["scan"]["findings"] == 0);
    CHECK(scan("corrupted.family", 0).exit_code == kExitInvalidDatum);
    Report b = scan("bundled.family", 3);
    CHECK(b.exit_code == kExitBudgetExhausted);
    CHECK(b.payload["scan"]["budget_exhausted"] == true);
}

TEST_CASE("structured output round trip") {
    for (auto body : std::vector<std::function<Report()>>{
             [] { return cmd_massey(model("heisenberg.cdga"), {"x", "x", "y"}, {}); },
             [] { return cmd_theorem11(model("heisenberg.cdga"), {"x", "x", "y"}, {}); },
             [] { return cmd_transfer(model("s2_rotation.cdga"), std::nullopt, {}); },
             [] { return cmd_lemma32(model("torus.cdga"), {"x", "x", "y"}, {}); },
         }) {
        Report r = guarded("x", body);
        std::string text = render_structured(r);
        Report back = parse_structured(text);
        CHECK(back == r);
        CHECK(render_structured(back) == text);
    }
    CHECK_THROWS_AS(parse_structured("{"), ParseError);
    CHECK_THROWS_AS(parse_structured("{\"command\": 1}"), ParseError);
}

TEST_CASE("human output carries the witness chain") {
    Report r = guarded("massey", [] { return cmd_massey(model("heisenberg.cdga"), {"x", "x", "y"}, {}); });
    std::string text = render_human(r);
    CHECK(text.rfind("massey: ok (exit 0)", 0) == 0);
    CHECK(text.find("dy = bar(b)*c with y = -z") != std::string::npos);
    CHECK(text.find("witness_x:") != std::string::npos);
    CHECK(text.find("class [x*z]") != std::string::npos);
    CHECK(render_human(r) == text);
}
