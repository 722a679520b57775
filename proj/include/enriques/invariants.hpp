#pragma once

#include "enriques/isotropy.hpp"
#include "enriques/lattice.hpp"
#include "enriques/surface_model.hpp"

#include <string>
#include <vector>

namespace enriques {

// phi(H) = min { E.H : E effective isotropic, E != 0 }, for H in the
// positive cone. Satisfies phi(H)^2 <= H.H.
Int phi(const NumClass& h);

// phi together with the minimizing classes.
MinPairing phi_with_witnesses(const NumClass& h);

struct LengthOptions {
    Int cap = 100; // largest L.L accepted by the exact DP
};

// Maximal number of summands in a decomposition of L into effective
// isotropic classes. Exact memoized recursion; throws LengthCapExceededError
// above the cap, NotEffectiveError / NegativeSquareError on bad input.
Int length(const NumClass& l, const LengthOptions& options = {});

// Greedy peeling (repeatedly removes a minimizing isotropic summand). Fast
// and always a valid lower bound, but not proven optimal; never reported as
// the length.
Int length_greedy_lower_bound(const NumClass& l,
                              const LengthOptions& options = {});

// Arithmetic genus of an effective class: C.C / 2 + 1.
Int arithmetic_genus(const NumClass& c);

// Genus left after imposing a point of multiplicity m:
// C.C/2 + 1 - m(m-1)/2. Negative values certify non-existence of an
// irreducible member with such a point.
Int genus_multiplicity_bound(const NumClass& c, const Int& m);

struct Caveat {
    std::string code;
    std::string note;
};

/**
 * Seshadri data for H at a very general point. On the very_general model the
 * value is exact and equals phi(H). On weaker models only the sandwich
 * phi/2 <= eps <= phi is certified and the report carries caveats.
 */
struct SeshadriReport {
    NumClass h;
    SurfaceModel model = SurfaceModel::very_general;
    Int phi_value;
    bool exact = false;
    Rat epsilon_lower;
    Rat epsilon_upper;
    bool kleiman_consistent = false; // epsilon_upper^2 <= H.H
    std::vector<Caveat> caveats;

    // The certified value; meaningful as an equality only when exact.
    const Rat& epsilon() const { return epsilon_upper; }
};

SeshadriReport seshadri(const NumClass& h, SurfaceModel model);

} // namespace enriques
