#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace rc {

enum class Suite { core, bracket, genfun, siegel, all };

// "core", "bracket", "genfun", "siegel" or "all".
Suite parse_suite(const std::string &name);
std::vector<int> criteria_of(Suite suite);

struct VerifyOptions {
    int jacobi_trunc = 8;
    int siegel_trunc = 3;
    // Checked-in coefficient fixtures; skipped when empty or missing.
    std::filesystem::path fixture_dir;
    // Progress notes (measured constants, timings); may be null.
    std::ostream *log = nullptr;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    // First failure, as key + expected + actual where applicable.
    std::string witness;
    // Measured quantities worth reporting even on success.
    std::vector<std::string> notes;
    double seconds = 0;
};

// Runs one acceptance criterion (1..9). Never throws for a failed check;
// unexpected exceptions are reported as failures with the message as witness.
CriterionResult run_criterion(int id, const VerifyOptions &options);
std::vector<CriterionResult> run_suite(Suite suite, const VerifyOptions &options);

// "PASS [3] title (1.2 s)" plus indented witness / notes.
std::string format_result(const CriterionResult &result, bool with_notes);

// Named fixtures that verify regenerates and compares byte for byte
// (Jacobi forms at trunc 8, Siegel forms at trunc 3).
struct FixtureRecipe {
    std::string file_name;
    std::string description;
    std::string (*generate)();
};
const std::vector<FixtureRecipe> &fixture_recipes();

} // namespace rc
