#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace enriques {

// Runs the command-line front end on already-split arguments (no program
// name). Results go to out, errors as JSON objects to err. Returns 0 on
// success, 1 on domain errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace enriques
