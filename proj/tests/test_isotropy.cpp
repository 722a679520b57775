#include "doctest.h"

#include "enriques/errors.hpp"
#include "enriques/isotropy.hpp"
#include "enriques/lattice.hpp"
#include "enriques/oracles.hpp"

#include <algorithm>

using namespace enriques;

namespace {

NumClass cls(std::array<Int, kRank> coords) { return NumClass(coords); }

NumClass h0() { return ample_reference(); }

SliceResult slice(const NumClass& h, const Int& c, bool primitive = false)
{
    return isotropic_slice({h, c, primitive, /*effective_only=*/true});
}

} // namespace

TEST_CASE("slice solutions solve the defining equations exactly")
{
    const SliceResult r = slice(h0(), 2);
    REQUIRE(!r.solutions.empty());
    for (const NumClass& x : r.solutions) {
        CHECK(self_intersection(x) == 0);
        CHECK(pair(x, h0()) == 2);
        CHECK(is_effective(x, SurfaceModel::general));
        CHECK(!x.is_zero());
    }
    CHECK(std::is_sorted(r.solutions.begin(), r.solutions.end()));
    CHECK(std::adjacent_find(r.solutions.begin(), r.solutions.end()) ==
          r.solutions.end());

    // The basis half-pencils E1, E2, E3 all pair 2 with h0 = E1 + E2 + E3.
    for (int s : {slot_e1, slot_e1 + 1, slot_e1 + 2})
        CHECK(std::binary_search(r.solutions.begin(), r.solutions.end(),
                                 basis_class(s)));
}

TEST_CASE("slice below phi is empty without being divisibility-empty")
{
    // Two of the three pairings with E1, E2, E3 would vanish, forcing a class
    // proportional to two distinct basis elements at once.
    const SliceResult r = slice(h0(), 1);
    CHECK(r.solutions.empty());
    CHECK(!r.empty_by_divisibility);
    CHECK(r.certificate.nodes > 0);
}

TEST_CASE("engine slices match the rank-10 shell oracle")
{
    struct Probe {
        NumClass h;
        Int c;
    };
    const Probe probes[] = {
        {h0(), 1},
        {h0(), 2},
        {h0(), 3},
        {cls({2, 1, 0, 0, 0, 0, 0, 0, 0, 0}), 1},
        {cls({2, 1, 0, 0, 0, 0, 0, 0, 0, 0}), 2},
        {cls({0, 0, 0, 0, 0, 0, 0, 2, 2, 2}), 6},
    };
    for (const Probe& p : probes) {
        for (bool primitive : {false, true}) {
            const SliceResult engine = slice(p.h, p.c, primitive);
            const oracle::ShellSlice shell =
                oracle::shell_slice(p.h, p.c, /*effective_only=*/true,
                                    primitive);
            CHECK(engine.solutions == shell.solutions);
        }
    }
}

TEST_CASE("radius certificate and unimodular kernel transform")
{
    const SliceResult r = slice(h0(), 3);
    CHECK(r.certificate.radius == Rat(9, 6));
    CHECK((r.certificate.kernel_det == 1 || r.certificate.kernel_det == -1));
    REQUIRE(r.certificate.pivots.size() == 9);
    for (const Rat& d : r.certificate.pivots)
        CHECK(d > 0);
}

TEST_CASE("even classes empty odd slices by divisibility")
{
    const NumClass even = cls({2, 2, 0, 0, 0, 0, 0, 0, 0, 0});
    const SliceResult odd_slice = slice(even, 1);
    CHECK(odd_slice.empty_by_divisibility);
    CHECK(odd_slice.solutions.empty());

    const SliceResult even_slice = slice(even, 2);
    CHECK(!even_slice.empty_by_divisibility);
    CHECK(!even_slice.solutions.empty());
}

TEST_CASE("c = 0 yields the empty slice, not an error")
{
    const SliceResult r = slice(h0(), 0);
    CHECK(r.solutions.empty());
    CHECK(!r.empty_by_divisibility);
    CHECK(r.certificate.radius == 0);
}

TEST_CASE("domain validation of slice queries")
{
    CHECK_THROWS_AS((void)slice(h0(), -1), BadParameterError);
    // Square zero is outside the positive cone.
    CHECK_THROWS_AS((void)slice(basis_class(slot_e1), 1), NotPositiveError);
    // Positive square but anti-effective.
    CHECK_THROWS_AS((void)slice(-h0(), 2), NotPositiveError);
    CHECK_THROWS_AS((void)slice(NumClass(), 1), NotPositiveError);
}

TEST_CASE("primitive filter removes exactly the imprimitive solutions")
{
    const SliceResult all = slice(h0(), 4);
    const SliceResult prim = slice(h0(), 4, /*primitive=*/true);

    // 2 E1 is isotropic with (2 E1).h0 = 4 but divisibility 2.
    const NumClass doubled = 2 * basis_class(slot_e1);
    CHECK(std::binary_search(all.solutions.begin(), all.solutions.end(),
                             doubled));
    CHECK(!std::binary_search(prim.solutions.begin(), prim.solutions.end(),
                              doubled));

    for (const NumClass& x : all.solutions) {
        const bool kept = std::binary_search(prim.solutions.begin(),
                                             prim.solutions.end(), x);
        CHECK(kept == (divisibility(x) == 1));
    }
}

TEST_CASE("min_isotropic_pairing returns the populated bottom slice")
{
    const MinPairing mp = min_isotropic_pairing(h0());
    CHECK(mp.value == 2);
    REQUIRE(!mp.witnesses.empty());
    for (const NumClass& e : mp.witnesses) {
        CHECK(self_intersection(e) == 0);
        CHECK(pair(e, h0()) == 2);
        CHECK(is_effective(e, SurfaceModel::general));
    }
    CHECK(mp.witnesses == slice(h0(), 2).solutions);

    const MinPairing low = min_isotropic_pairing(cls({2, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(low.value == 1);
}
