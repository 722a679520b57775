#pragma once

#include "enriques/fundrep.hpp"
#include "enriques/lattice.hpp"

#include <optional>
#include <vector>

namespace enriques::oracle {

/**
 * Independent slice enumeration used only for cross-checking the engine.
 *
 * Where the engine works on the 9-dimensional coset x_c + ker(H . ), this
 * route enumerates the full rank-10 shell of the positive definite form
 *   M = -G + (2 / H.H) (G H)(G H)^T
 * whose value on slice solutions is exactly 2 c^2 / H.H, then filters by the
 * linear condition x.H = c. det(M) = 1 by the rank-one update formula, so
 * the shell is genuinely 10-dimensional and small. The factorization and
 * traversal below are written against M directly and share no code with the
 * engine.
 */
struct ShellSlice {
    std::vector<NumClass> solutions; // sorted lexicographically
    Int box_bound;                   // |x_i| <= box_bound certificate
};

ShellSlice shell_slice(const NumClass& h, const Int& c, bool effective_only,
                       bool primitive_only);

// phi via the shell route.
Int shell_phi(const NumClass& h);

// Independent census: dumb bounded loops over the constraint chain with the
// expanded quadratic form, no pruning beyond the sound cap sq/2 (any two
// interacting slots pair at least 1).
std::vector<std::array<Int, kRank>> census_tuples_exhaustive(const Int& square);

// All isotropic effective classes with coordinates in [0, max_coord],
// by direct scan; used by the proportionality property test.
std::vector<NumClass> isotropic_grid_classes(int max_coord);

} // namespace enriques::oracle
