#pragma once

#include "enriques/certificates.hpp"
#include "enriques/lattice.hpp"
#include "enriques/limit_surface.hpp"
#include "enriques/surface_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace enriques {

// Numerical types of Seshadri-exceptional pairs (C, m): a (-2)-curve (m=1),
// a doubled half-pencil (m=2), or one of the positive-square families.
// The templates in the fixed basis are
//   (i)      E9 + E9_10                      C^2 = 4,  phi = 2,  m = 3
//   (ii)     2(E9 + E10 + E9_10)             C^2 = 40, phi = 6,  m = 7
//   (iii,h)  h(E9 + E9_10) + E10             C^2 = 4h^2 + 6h,      phi = 2h+1
//   (iv,h)   (h+1) E9_10 + h E9 + E10        C^2 = 4h^2 + 10h + 4, phi = 2h+2
// with h >= 1 and m = phi + 1 throughout the positive-square families.
enum class ExceptionalTag {
    minus_two,
    half_pencil,
    type_i,
    type_ii,
    type_iii,
    type_iv,
    none
};

std::string to_string(ExceptionalTag tag);

struct ExceptionalType {
    ExceptionalTag tag = ExceptionalTag::none;
    Int h = 0; // meaningful for type_iii / type_iv only
    Int m = 0; // multiplicity of the exceptional point; 0 for none

    friend bool operator==(const ExceptionalType& a, const ExceptionalType& b)
    {
        return a.tag == b.tag && a.h == b.h && a.m == b.m;
    }
};

// Template class of a positive-square type; BadParameterError for other tags
// or h < 1 where h is required.
NumClass construct_exceptional(ExceptionalTag tag, const Int& h = 0);

// Decides the type from the numerical invariants (square, phi, length and
// 2-divisibility; the length equals phi automatically once the square is
// extremal, so no capped computation is involved). Input must be effective
// in the general model or have square -2.
ExceptionalType classify_exceptional(const NumClass& c);

// Necessary numerical conditions for C to carry an irreducible rational
// curve on a very general surface: effective, not a (-2)-class, not a
// primitive (or odd multiple) isotropic class, and 2-divisible. Only the
// very_general model is supported.
struct AdmissibleReport {
    bool admissible = false;
    std::string reason;
};
AdmissibleReport rational_class_admissible_report(const NumClass& c,
                                                  SurfaceModel model);
bool rational_class_admissible(const NumClass& c, SurfaceModel model);

// Point-level lower bound: eps(H, x) >= min(d, phi(H)/2) where d bounds the
// normalized degree of curves singular at x; without curve data the bound is
// phi(H)/2, improving to phi(H) off a countable set.
struct PointLowerBound {
    Rat bound;
    std::optional<Rat> generic_bound;
    std::string note;
};
PointLowerBound seshadri_point_lower_bound(const Int& phi_h,
                                           const std::optional<Rat>& d);

enum class GapVerdict { no_gap, constrained, impossible };

std::string to_string(GapVerdict v);

/**
 * Outcome of interrogating a Seshadri gap candidate (C, m) against H, or of
 * replaying the full no-gap argument. verdict == no_gap holds exactly when
 * m * phi(H) <= C.H; impossible carries a complete cited chain, ending in
 * the limit-surface refutation when the candidate survives to the
 * 2-divisible positive-square case.
 */
struct GapCertificate {
    NumClass h;
    std::optional<NumClass> c;
    std::optional<Int> m;
    GapVerdict verdict = GapVerdict::no_gap;
    std::optional<ExceptionalType> constrained_type;
    std::vector<CertStep> steps;
    std::optional<ObstructionCertificate> limit_chain;
    std::optional<Rat> epsilon;
};

GapCertificate gap_candidate_certificate(const NumClass& h, const NumClass& c,
                                         const Int& m, SurfaceModel model);

// Replays the equality eps(H) = phi(H) on the very_general model: every
// potential gap witness is classified and each numerical type is refuted,
// the last one through the degenerate-surface multiplicity obstruction.
GapCertificate verify_eps_equals_phi(const NumClass& h);

} // namespace enriques
