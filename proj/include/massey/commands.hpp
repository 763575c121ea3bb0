#pragma once

#include "massey/report.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace massey {

struct CommandOptions {
    std::optional<int> cap;
    std::optional<int> max_degree;
    std::uint64_t budget = 0;
    /// Extra line bundles in the short form "EXPR:WEIGHT".
    std::vector<std::string> bundles;
};

using Triple = std::array<std::string, 3>;

Report cmd_cohomology(const std::filesystem::path& input, const CommandOptions& opts);
Report cmd_massey(const std::filesystem::path& input, const Triple& triple, const CommandOptions& opts);
Report cmd_euler(const std::filesystem::path& input, const CommandOptions& opts);
Report cmd_lemma32(const std::filesystem::path& input, const Triple& triple, const CommandOptions& opts);
/// Validates the document's datum; with a triple (expressions in the
/// extended fixed-point model) also runs the transfer step.
Report cmd_transfer(const std::filesystem::path& input, const std::optional<Triple>& triple,
                    const CommandOptions& opts);
/// Uses the document's datum, or the tautological one when it has none.
Report cmd_theorem11(const std::filesystem::path& input, const Triple& triple, const CommandOptions& opts);
Report cmd_scan(const std::filesystem::path& family, const CommandOptions& opts);

/// Runs `body`, turning library exceptions into their exit codes. A rise in
/// the verdict-disagreement tally overrides the result with exit 20.
Report run_guarded(const std::string& command, const std::function<Report()>& body);

}  // namespace massey
