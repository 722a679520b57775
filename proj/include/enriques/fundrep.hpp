#pragma once

#include "enriques/lattice.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace enriques {

/**
 * Coefficient data of the fundamental presentation
 *   L = a1 F1 + ... + a7 F7 + a9 F9 + a10 F10 + a0 F0   (+ torsion),
 * stored in slot order (a1..a7, a9, a10, a0), which matches the lattice
 * basis layout; in particular the quadratic form of a tuple is a^T G a for
 * the same Gram matrix G.
 *
 * Constraint chain: a1 >= ... >= a7 >= 0 and a9 + a10 >= a0 >= a9 >= a10 >= 0.
 * epsilon is 1 only for 2-divisible tuples with the torsion bit set.
 */
struct FundamentalCoefficients {
    std::array<Int, kRank> a{};
    int epsilon = 0;

    bool constraints_ok() const;
    Int q_value() const;
    NumClass representative() const;

    friend bool operator==(const FundamentalCoefficients& x,
                           const FundamentalCoefficients& y)
    {
        return x.a == y.a && x.epsilon == y.epsilon;
    }
    friend bool operator<(const FundamentalCoefficients& x,
                          const FundamentalCoefficients& y)
    {
        if (x.a != y.a)
            return x.a < y.a;
        return x.epsilon < y.epsilon;
    }
};

/**
 * A witness of the presentation: the ten isotropic effective classes in slot
 * order, with the Gram and reconstruction identities re-verified after the
 * search (the flags are stored, not assumed).
 */
struct FundRepWitness {
    FundamentalCoefficients coefficients;
    std::array<NumClass, kRank> sequence;
    bool gram_ok = false;
    bool reconstruction_ok = false;

    // The companion class pairing 1 with every sequence member,
    // -(F1+...+F7) + 2 F9 + 2 F10 + 3 F0.
    NumClass derived_e8() const;
};

struct FundRepOptions {
    bool randomized = false;  // shuffle tuple and candidate orders
    std::uint64_t seed = 0;
};

// Computes the coefficients of L together with a witness sequence.
// Requires L.num effective (general model) with positive square; throws
// NotEffectiveError / NonPositiveSquareError, and SearchExhaustedError if no
// candidate tuple admits a witness (which would contradict the presentation
// theorem; kept as an honest failure mode).
FundRepWitness fundamental_coefficients(const PicClass& l,
                                        const FundRepOptions& options = {});

Int quadratic_form_of_coeffs(const std::array<Int, kRank>& a);

// All constraint-satisfying tuples of the given square (without the epsilon
// duplication), sorted lexicographically.
std::vector<std::array<Int, kRank>> census_tuples(const Int& square);

// Moduli census: one row per (tuple, epsilon); epsilon = 1 rows appear
// exactly for the all-even tuples. Sorted lexicographically.
std::vector<FundamentalCoefficients> enumerate_components(const Int& square);

// Same fundamental coefficients (including epsilon), hence the same moduli
// component label.
bool same_component(const PicClass& l1, const PicClass& l2);

} // namespace enriques
