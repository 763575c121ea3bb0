#pragma once

#include "massey/equivariant.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace massey {

/// Parses "2*x*y - 1/2*z^2 + 3". Throws ParseError; `line` is used in the
/// error position.
Polynomial parse_polynomial(std::string_view text, int line = 1, int column_offset = 0);

/// Parses and evaluates an expression in `algebra`.
Element parse_element(const AlgebraPtr& algebra, std::string_view text);

/// Class of a cocycle expression. "0" yields the zero class in `zero_degree`
/// when given.
CohomologyClass parse_class(const RingPtr& ring, std::string_view text, std::optional<int> zero_degree = std::nullopt);

struct BundleDecl {
    Polynomial c1;
    long weight = 0;
    int line = 0;
};

/// `bundle c1 = <expr> weight = <int>` without the leading keyword, or the
/// short command-line form `<expr>:<int>`.
BundleDecl parse_bundle(std::string_view text, int line = 1, int column_offset = 0);

struct MatrixDecl {
    /// Empty when the right-hand side was blank (a zero map of whatever
    /// shape the rings require).
    std::vector<std::vector<Scalar>> rows;
    int line = 0;
};

enum class DatumKind { None, Tautological, Explicit };

struct DatumDecl {
    DatumKind kind = DatumKind::None;
    std::map<int, MatrixDecl> restrict;
    std::map<int, MatrixDecl> push;
};

/// One input file: an algebra presentation plus optional bundles, Euler
/// class, ambient algebra and transfer datum.
struct InputDocument {
    std::string source;
    AlgebraPtr algebra;
    AlgebraPtr ambient;
    std::vector<BundleDecl> bundles;
    std::optional<Polynomial> euler;
    DatumDecl datum;
};

InputDocument parse_document(std::string_view text, std::string source = "<input>");
InputDocument load_document(const std::filesystem::path& path);

std::vector<WeightedLineBundleDatum> bundles_of(const std::vector<BundleDecl>& decls, const RingPtr& ring);

/// χ from an `euler = ...` line (evaluated in the extension, no leading-term
/// check) or else from the bundles.
EulerClass euler_of(const InputDocument& doc, const ExtendedModel& model,
                    const std::vector<BundleDecl>& extra_bundles = {});

/// Transfer datum with `model.ring()` as the fixed side.
HamiltonianTransferDatum datum_of(const InputDocument& doc, const ExtendedModel& model, const EulerClass& chi);

/// Family file: a list of `config <name> ... end` blocks.
std::vector<FamilyConfig> parse_family(std::string_view text, const std::filesystem::path& base_dir);
std::vector<FamilyConfig> load_family(const std::filesystem::path& path);

}  // namespace massey
