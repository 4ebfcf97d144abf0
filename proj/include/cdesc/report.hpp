#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdesc/fixture.hpp"

namespace cdesc {

struct RunOptions {
    std::optional<std::string> pair;
    std::optional<std::string> square;
    std::optional<std::string> atom;
    std::uint64_t seed = 7;
    std::optional<std::size_t> cases;
};

/// One command's outcome. `results` holds exact values only: classes and
/// rationals as strings, counts as integers, verdicts as booleans.
struct Report {
    std::string command;
    nlohmann::ordered_json inputs;
    nlohmann::ordered_json results;
    bool pass = false;

    std::string structured() const;
    std::string text() const;
};

inline const std::vector<std::string> commands = {"class", "gysin", "euler", "serre", "verify"};
inline const std::vector<std::string> verify_targets = {"axioms",  "manin",        "functoriality", "descent",
                                                        "duality", "independence", "splitting"};

/// `target` is required for verify and rejected otherwise. Throws
/// UsageError for unknown commands/targets and UnknownNameError for names
/// missing from the fixture.
Report run_command(const std::string& command, const std::optional<std::string>& target, const Fixture& fixture,
                   const RunOptions& options);

Report report_class(const Fixture& fixture, const RunOptions& options);
Report report_gysin(const Fixture& fixture, const RunOptions& options);
Report report_euler(const Fixture& fixture, const RunOptions& options);
Report report_serre(const Fixture& fixture, const RunOptions& options);

Report verify_axioms(const Fixture& fixture, const RunOptions& options);
Report verify_splitting(const Fixture& fixture, const RunOptions& options);
Report verify_manin(const Fixture& fixture, const RunOptions& options);
Report verify_functoriality(const Fixture& fixture, const RunOptions& options);
Report verify_descent(const Fixture& fixture, const RunOptions& options);
Report verify_duality(const Fixture& fixture, const RunOptions& options);
Report verify_independence(const Fixture& fixture, const RunOptions& options);

}  // namespace cdesc
