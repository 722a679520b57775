#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace enriques {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail; // one-line summary or first failure
    double seconds = 0.0;
};

struct AcceptanceOptions {
    // quick trims the corpora so the whole suite stays under a minute;
    // the full run enforces every stated budget.
    bool quick = false;
};

// Runs the ten acceptance criteria in order. Never throws: an escaped
// exception fails the criterion and lands in its detail string. If progress
// is non-null a line is emitted after each criterion.
std::vector<CriterionResult> run_acceptance_criteria(
    const AcceptanceOptions& options = {}, std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

std::string format_criterion_line(const CriterionResult& r);

} // namespace enriques
