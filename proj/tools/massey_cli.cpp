#include "massey/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Args {
    std::string input;
    std::vector<std::string> triple;
    massey::CommandOptions opts;
};

void add_common(CLI::App* sub, Args& a, bool bundles) {
    sub->add_option("--cap", a.opts.cap, "Truncation degree (trusted degrees are below it)")->check(CLI::PositiveNumber);
    if (bundles) sub->add_option("--bundle", a.opts.bundles, "Extra line bundle EXPR:WEIGHT (repeatable)");
}

massey::Triple as_triple(const std::vector<std::string>& v) { return {v.at(0), v.at(1), v.at(2)}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Massey products and their transfer along circle actions, in exact arithmetic."};
    app.require_subcommand(1);
    std::string format = "human";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "structured"}))
        ->capture_default_str();

    Args a;

    auto* cohomology = app.add_subcommand("cohomology", "Betti numbers and class bases");
    cohomology->add_option("input", a.input, "Model file")->required();
    cohomology->add_option("--max-degree", a.opts.max_degree, "Last degree to report")->check(CLI::NonNegativeNumber);
    add_common(cohomology, a, false);

    auto* massey_cmd = app.add_subcommand("massey", "Triple Massey product of three cocycle expressions");
    massey_cmd->add_option("input", a.input, "Model file")->required();
    massey_cmd->add_option("classes", a.triple, "Three cocycle expressions")->required()->expected(3);
    add_common(massey_cmd, a, false);

    auto* euler = app.add_subcommand("euler", "Equivariant Euler class and its regularity");
    euler->add_option("input", a.input, "Model file")->required();
    add_common(euler, a, true);

    auto* lemma32 = app.add_subcommand("lemma32", "Scaled Massey product in the extended model");
    lemma32->add_option("input", a.input, "Model file")->required();
    lemma32->add_option("classes", a.triple, "Three cocycle expressions")->required()->expected(3);
    add_common(lemma32, a, true);

    auto* transfer = app.add_subcommand("transfer", "Validate a transfer datum, optionally transfer a product");
    transfer->add_option("input", a.input, "Model file with a datum")->required();
    transfer->add_option("classes", a.triple, "Three classes of the extended fixed-point model")->expected(3);
    add_common(transfer, a, true);

    auto* theorem11 = app.add_subcommand("theorem11", "Full pipeline: scaled product, datum, transfer");
    theorem11->add_option("input", a.input, "Model file")->required();
    theorem11->add_option("classes", a.triple, "Three cocycle expressions")->required()->expected(3);
    add_common(theorem11, a, true);

    auto* scan = app.add_subcommand("scan", "Run the pipeline over a family file");
    scan->add_option("family", a.input, "Family file")->required();
    scan->add_option("--budget", a.opts.budget, "Massey product budget, 0 for none");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return massey::kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    massey::Report rep = massey::run_guarded(name, [&]() -> massey::Report {
        if (name == "cohomology") return massey::cmd_cohomology(a.input, a.opts);
        if (name == "massey") return massey::cmd_massey(a.input, as_triple(a.triple), a.opts);
        if (name == "euler") return massey::cmd_euler(a.input, a.opts);
        if (name == "lemma32") return massey::cmd_lemma32(a.input, as_triple(a.triple), a.opts);
        if (name == "transfer") {
            std::optional<massey::Triple> t;
            if (!a.triple.empty()) t = as_triple(a.triple);
            return massey::cmd_transfer(a.input, t, a.opts);
        }
        if (name == "theorem11") return massey::cmd_theorem11(a.input, as_triple(a.triple), a.opts);
        return massey::cmd_scan(a.input, a.opts);
    });

    std::cout << (format == "structured" ? massey::render_structured(rep) : massey::render_human(rep));
    return rep.exit_code;
}
