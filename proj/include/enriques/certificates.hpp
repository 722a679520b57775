#pragma once

#include <string>
#include <vector>

namespace enriques {

// One step of a replayed argument: the mathematical claim, the standard name
// of the fact it rests on, and the arithmetic actually checked here.
struct CertStep {
    std::string claim;
    std::string citation;
    std::string check;
    bool ok = false;
};

} // namespace enriques
