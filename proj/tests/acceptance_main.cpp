// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include "enriques/selftest.hpp"

#include <iostream>

int main()
{
    enriques::AcceptanceOptions options;
    options.quick = false;
    const auto results =
        enriques::run_acceptance_criteria(options, &std::cout);
    if (!enriques::all_passed(results)) {
        std::cout << "acceptance: FAILED" << std::endl;
        return 1;
    }
    std::cout << "acceptance: all criteria passed" << std::endl;
    return 0;
}
