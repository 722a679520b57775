#pragma once

#include "enriques/lattice.hpp"

#include <cstdint>
#include <vector>

namespace enriques {

/**
 * Query for the slice { x : x.x = 0, x.H = c } with optional filters.
 * H must lie in the positive cone (H.H > 0 and H.h0 > 0).
 */
struct SliceQuery {
    NumClass h;
    Int c;
    bool primitive_only = false;
    bool effective_only = false;
};

// Exactness data attached to every enumeration: the positive definite pivots
// of the quadratic form on the orthogonal complement, the squared radius of
// the search ellipsoid (always c^2 / H^2), the determinant of the unimodular
// kernel transform (+-1 certifies the kernel basis is complete) and the size
// of the visited search tree.
struct SliceCertificate {
    std::vector<Rat> pivots;
    Rat radius;
    Int kernel_det;
    std::uint64_t nodes = 0;
};

struct SliceResult {
    std::vector<NumClass> solutions; // sorted lexicographically
    SliceCertificate certificate;
    bool empty_by_divisibility = false;
};

// Complete, exact enumeration of the slice. Throws NotPositiveError if H is
// not in the positive cone and BadParameterError if c < 0; c = 0 yields an
// empty slice (negative definiteness of H-orthogonal classes).
SliceResult isotropic_slice(const SliceQuery& query);

struct MinPairing {
    Int value;
    std::vector<NumClass> witnesses;
};

// Minimum of E.H over nontrivial effective isotropic E, scanning the slices
// c = 1, 2, ..., floor(sqrt(H.H)). The upper bound of the scan is a theorem;
// if no slice in that range is populated the engine throws
// InternalBoundViolationError rather than answering.
MinPairing min_isotropic_pairing(const NumClass& h);

} // namespace enriques
