#pragma once

#include "enriques/exact_linalg.hpp"
#include "enriques/int_types.hpp"
#include "enriques/surface_model.hpp"

#include <array>
#include <compare>
#include <cstddef>

namespace enriques {

inline constexpr int kRank = 10;

// Basis slots of the fixed isotropic basis B = (E1,...,E7, E9, E10, E9_10).
inline constexpr int slot_e1 = 0;
inline constexpr int slot_e7 = 6;
inline constexpr int slot_e9 = 7;
inline constexpr int slot_e10 = 8;
inline constexpr int slot_e9_10 = 9;

/**
 * A numerical equivalence class, stored as integer coordinates in the fixed
 * basis B. The intersection form is the Gram matrix returned by
 * gram_matrix(); it is even, unimodular and of signature (1,9).
 */
class NumClass {
public:
    NumClass() { coords_.fill(0); }
    explicit NumClass(std::array<Int, kRank> coords)
        : coords_(std::move(coords))
    {
    }

    const Int& operator[](std::size_t i) const { return coords_[i]; }
    Int& operator[](std::size_t i) { return coords_[i]; }
    const std::array<Int, kRank>& coords() const { return coords_; }

    bool is_zero() const
    {
        for (const auto& c : coords_)
            if (c != 0)
                return false;
        return true;
    }

    NumClass operator-() const
    {
        NumClass r;
        for (int i = 0; i < kRank; ++i)
            r.coords_[i] = -coords_[i];
        return r;
    }
    NumClass& operator+=(const NumClass& o)
    {
        for (int i = 0; i < kRank; ++i)
            coords_[i] += o.coords_[i];
        return *this;
    }
    NumClass& operator-=(const NumClass& o)
    {
        for (int i = 0; i < kRank; ++i)
            coords_[i] -= o.coords_[i];
        return *this;
    }
    NumClass& operator*=(const Int& s)
    {
        for (int i = 0; i < kRank; ++i)
            coords_[i] *= s;
        return *this;
    }

    friend NumClass operator+(NumClass a, const NumClass& b) { return a += b; }
    friend NumClass operator-(NumClass a, const NumClass& b) { return a -= b; }
    friend NumClass operator*(const Int& s, NumClass a) { return a *= s; }

    friend bool operator==(const NumClass& a, const NumClass& b)
    {
        return a.coords_ == b.coords_;
    }
    // Lexicographic coordinate order; used for canonical sorting and memo keys.
    friend bool operator<(const NumClass& a, const NumClass& b)
    {
        return a.coords_ < b.coords_;
    }

private:
    std::array<Int, kRank> coords_;
};

/**
 * A Picard group element modulo torsion choice: the numerical class plus the
 * torsion bit distinguishing L from L + K. Addition adds classes and XORs
 * the bits.
 */
struct PicClass {
    NumClass num;
    int torsion = 0; // 0 or 1

    friend PicClass operator+(const PicClass& a, const PicClass& b)
    {
        return PicClass{a.num + b.num, a.torsion ^ b.torsion};
    }
    friend bool operator==(const PicClass& a, const PicClass& b)
    {
        return a.num == b.num && a.torsion == b.torsion;
    }
};

// Gram matrix of the basis B (entries are 0, 1 or 2).
const std::array<std::array<int, kRank>, kRank>& gram_matrix();

Int pair(const NumClass& a, const NumClass& b);

inline Int self_intersection(const NumClass& a) { return pair(a, a); }

// The i-th basis class (slot index 0..9).
NumClass basis_class(int slot);

// E8 = -(E1+...+E7) + 2 E9 + 2 E10 + 3 E9_10; pairs 1 with every basis class.
const NumClass& e8_class();

// Reference ample class h0 = E1 + E2 + E3, h0^2 = 6.
const NumClass& ample_reference();

// gcd of the coordinates; 0 for the zero class.
Int divisibility(const NumClass& v);

bool is_two_divisible_num(const NumClass& v);

// 1 iff the numerical part is 2-divisible and the torsion bit is set.
int epsilon_invariant(const PicClass& l);

// Numerical effectivity test. Supported for the very_general and general
// models (Riemann-Roch: v != 0, v^2 >= 0 and v.h0 > 0); throws
// UnsupportedModelError for arbitrary, where effectivity is not determined
// by the numerical class alone.
bool is_effective(const NumClass& v, SurfaceModel model);

struct LatticeCertificate {
    IMat gram;
    Int determinant;
    bool even = false;
    Signature signature;
    std::vector<Int> smith;
    bool unimodular = false;
    bool e8_pairings_ok = false;
};

// Certifies the standing claims about B: det -1, even, signature (1,9),
// Smith form trivial, E8 pairing identities.
LatticeCertificate change_of_basis_certificate();

} // namespace enriques
