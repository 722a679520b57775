#pragma once

#include "enriques/certificates.hpp"
#include "enriques/exact_linalg.hpp"
#include "enriques/int_types.hpp"

#include <array>
#include <string>
#include <vector>

namespace enriques {

/**
 * Numerical model of the degenerate surface X = R u_T P: a ruled component R
 * over an elliptic curve glued along T to a plane P blown up in nine points.
 *
 * R-classes live in Z C0 + Z fiber with C0.C0 = k, C0.fiber = 1, fiber^2 = 0;
 * P-classes in Z l + Z e1 + ... + Z e9 with the standard diagonal form
 * (1, -1, ..., -1). T is anticanonical on both sides: T_R = 2 C0 - k fiber,
 * T_P = 3 l - (e1 + ... + e9), both of square zero.
 */
struct RClass {
    Int c0;
    Int f;

    friend RClass operator+(const RClass& a, const RClass& b)
    {
        return {a.c0 + b.c0, a.f + b.f};
    }
    friend RClass operator-(const RClass& a, const RClass& b)
    {
        return {a.c0 - b.c0, a.f - b.f};
    }
    friend RClass operator*(const Int& s, const RClass& a)
    {
        return {s * a.c0, s * a.f};
    }
    friend bool operator==(const RClass& a, const RClass& b)
    {
        return a.c0 == b.c0 && a.f == b.f;
    }
};

struct PClass {
    std::array<Int, 10> v{}; // v[0] l + v[1] e1 + ... + v[9] e9

    friend PClass operator+(const PClass& a, const PClass& b)
    {
        PClass r;
        for (int i = 0; i < 10; ++i)
            r.v[i] = a.v[i] + b.v[i];
        return r;
    }
    friend PClass operator-(const PClass& a, const PClass& b)
    {
        PClass r;
        for (int i = 0; i < 10; ++i)
            r.v[i] = a.v[i] - b.v[i];
        return r;
    }
    friend PClass operator*(const Int& s, const PClass& a)
    {
        PClass r;
        for (int i = 0; i < 10; ++i)
            r.v[i] = s * a.v[i];
        return r;
    }
    friend bool operator==(const PClass& a, const PClass& b)
    {
        return a.v == b.v;
    }
};

// A class on X: a pair of component classes agreeing on T (Cartier datum).
struct LimitClass {
    RClass r;
    PClass p;

    friend bool operator==(const LimitClass& a, const LimitClass& b)
    {
        return a.r == b.r && a.p == b.p;
    }
};

enum class ObstructionVerdict { impossible, not_obstructed };

struct ObstructionCertificate {
    LimitClass input;
    Int m;
    Int normalizing_twist; // the a with twist(input, a) fiber-supported on R
    ObstructionVerdict verdict = ObstructionVerdict::not_obstructed;
    std::vector<CertStep> steps;
};

struct QuotientInvariants {
    int rank = 0;
    Int determinant;
    bool even = false;
    Signature signature;
    bool xi_orthogonal = false; // xi pairs to zero with every Cartier generator
};

class LimitModel {
public:
    // k = C0.C0 on the ruled component. All shipped pipelines depend only on
    // the span of fiber and T_R, which is k-independent; the default matches
    // the blown-up-plane normalization used throughout.
    explicit LimitModel(Int k = 1);

    const Int& k() const { return k_; }

    Int pair_r(const RClass& a, const RClass& b) const;
    static Int pair_p(const PClass& a, const PClass& b);

    RClass t_r() const { return {2, -k_}; }
    static PClass t_p();
    RClass canonical_r() const { return {-2, k_}; }
    static PClass canonical_p();
    static RClass fiber() { return {0, 1}; }

    // Degrees of the restrictions to T.
    Int degree_on_t_r(const RClass& r) const;   // k c0 + 2 f
    static Int degree_on_t_p(const PClass& p);  // 3 d + sum of e-degrees

    // Validates the Cartier condition; throws NotCartierError with both
    // degrees on mismatch.
    LimitClass make_limit_class(const RClass& r, const PClass& p) const;
    bool is_cartier(const RClass& r, const PClass& p) const;

    Int pair_limit(const LimitClass& a, const LimitClass& b) const;

    // The gluing class xi = (T_R, -T_P): isotropic, orthogonal to every
    // Cartier class; twisting is addition of a xi.
    LimitClass xi() const;
    LimitClass twist(const LimitClass& l, const Int& a) const;

    // True when the R-degree along the fiber direction is odd, which rules
    // out limits of irreducible rational curves; invariant under twists.
    bool parity_obstruction(const LimitClass& l) const;

    // The distinguished limit of the 2-divisible exceptional class:
    // (6 fiber, 8 l - 2(e1 + ... + e6)), of self-intersection 40.
    LimitClass l0_class() const;

    // Replays the multiplicity refutation for a point of multiplicity m on
    // a limit rational curve in |L|. Shipped for L a twist of l0_class()
    // with m = 7; other inputs run the same numeric steps only with
    // allow_general = true. Throws PipelineInapplicableError outside the
    // supported range; a residual step the point-count criterion cannot
    // certify fails that step (no obstruction) instead of throwing.
    ObstructionCertificate multiplicity_obstruction(const LimitClass& l,
                                                    const Int& m,
                                                    bool allow_general = false) const;

    // Lattice invariants of (Cartier classes)/(Z xi): rank 10, determinant
    // -1, even, signature (1,9), matching the Enriques numerical lattice.
    QuotientInvariants quotient_invariants() const;

private:
    Int k_;
};

// Dimension count for plane curves of degree d through general simple points
// (multiplicities 0 or 1): effective iff d >= 0 and d(d+3)/2 >= sum. Throws
// UnsupportedMultiplicityError for entries >= 2, BadParameterError for
// negative entries.
bool effective_on_p_general_points(const Int& d,
                                   const std::array<Int, 9>& mult);

} // namespace enriques
