#include "doctest.h"

#include "enriques/errors.hpp"
#include "enriques/lattice.hpp"
#include "enriques/oracles.hpp"

#include <random>

using namespace enriques;

namespace {

NumClass random_class(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coord(-50, 50);
    NumClass v;
    for (int i = 0; i < kRank; ++i)
        v[static_cast<std::size_t>(i)] = coord(rng);
    return v;
}

bool proportional(const NumClass& a, const NumClass& b)
{
    for (int i = 0; i < kRank; ++i)
        for (int j = i + 1; j < kRank; ++j)
            if (a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] !=
                a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)])
                return false;
    return true;
}

} // namespace

TEST_CASE("frozen pairings of the fixed basis")
{
    CHECK(pair(basis_class(slot_e1), basis_class(slot_e1)) == 0);
    CHECK(pair(basis_class(slot_e1), basis_class(slot_e1 + 1)) == 1);
    CHECK(pair(basis_class(slot_e9), basis_class(slot_e10)) == 1);
    CHECK(pair(basis_class(slot_e9), basis_class(slot_e9_10)) == 2);
    CHECK(pair(basis_class(slot_e10), basis_class(slot_e9_10)) == 2);
    CHECK(pair(basis_class(slot_e1), basis_class(slot_e9_10)) == 1);
    CHECK(pair(basis_class(slot_e7), basis_class(slot_e9_10)) == 1);
    CHECK(self_intersection(ample_reference()) == 6);
}

TEST_CASE("lattice certificate: unimodular, even, signature (1,9)")
{
    const LatticeCertificate cert = change_of_basis_certificate();
    CHECK(cert.determinant == -1);
    CHECK(cert.even);
    CHECK(cert.signature.positive == 1);
    CHECK(cert.signature.negative == 9);
    CHECK(cert.signature.zero == 0);
    CHECK(cert.unimodular);
    for (const Int& d : cert.smith)
        CHECK(d == 1);
    CHECK(cert.e8_pairings_ok);
}

TEST_CASE("the E8-like class pairs 1 with everything and squares to 0")
{
    const NumClass& e8 = e8_class();
    for (int i = 0; i < kRank; ++i)
        CHECK(pair(e8, basis_class(i)) == 1);
    CHECK(self_intersection(e8) == 0);
}

TEST_CASE("pairing is symmetric, bilinear and even, randomized")
{
    std::mt19937_64 rng(0x1a77);
    for (int trial = 0; trial < 1000; ++trial) {
        const NumClass a = random_class(rng);
        const NumClass b = random_class(rng);
        const NumClass c = random_class(rng);
        CHECK(pair(a, b) == pair(b, a));
        CHECK(pair(a + b, c) == pair(a, c) + pair(b, c));
        CHECK(self_intersection(a) % 2 == 0);
    }
}

TEST_CASE("orthogonal isotropic classes are proportional")
{
    // On a hyperbolic lattice two isotropic classes in the closure of the
    // same cone pair to zero only when proportional; this is what makes the
    // isotropic length of an isotropic class its divisibility.
    const auto grid = oracle::isotropic_grid_classes(2);
    CHECK(grid.size() > 10);
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i + 1; j < grid.size(); ++j)
            if (pair(grid[i], grid[j]) == 0)
                CHECK(proportional(grid[i], grid[j]));
}

TEST_CASE("divisibility and 2-divisibility")
{
    CHECK(divisibility(NumClass{}) == 0);
    NumClass v;
    v[slot_e9] = 2;
    v[slot_e10] = 2;
    v[slot_e9_10] = 2;
    CHECK(divisibility(v) == 2);
    CHECK(is_two_divisible_num(v));
    v[slot_e1] = 1;
    CHECK(divisibility(v) == 1);
    CHECK(!is_two_divisible_num(v));
}

TEST_CASE("epsilon invariant needs 2-divisibility and torsion")
{
    NumClass even;
    even[slot_e9] = 2;
    NumClass odd;
    odd[slot_e9] = 1;
    CHECK(epsilon_invariant(PicClass{even, 1}) == 1);
    CHECK(epsilon_invariant(PicClass{even, 0}) == 0);
    CHECK(epsilon_invariant(PicClass{odd, 1}) == 0);
}

TEST_CASE("numerical effectivity by Riemann-Roch")
{
    const NumClass e1 = basis_class(slot_e1);
    CHECK(is_effective(e1, SurfaceModel::very_general));
    CHECK(is_effective(e1, SurfaceModel::general));
    CHECK(!is_effective(-e1, SurfaceModel::general));
    CHECK(!is_effective(NumClass{}, SurfaceModel::general));
    NumClass minus_two = basis_class(slot_e1) - basis_class(slot_e9);
    REQUIRE(self_intersection(minus_two) == -2);
    CHECK(!is_effective(minus_two, SurfaceModel::general));
    CHECK_THROWS_AS(is_effective(e1, SurfaceModel::arbitrary),
                    UnsupportedModelError);
}

TEST_CASE("Picard classes add with torsion XOR")
{
    const PicClass a{basis_class(slot_e1), 1};
    const PicClass b{basis_class(slot_e9), 1};
    const PicClass sum = a + b;
    CHECK(sum.num == basis_class(slot_e1) + basis_class(slot_e9));
    CHECK(sum.torsion == 0);
}
