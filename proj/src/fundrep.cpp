#include "enriques/fundrep.hpp"

#include "enriques/errors.hpp"
#include "enriques/isotropy.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace enriques {

bool FundamentalCoefficients::constraints_ok() const
{
    for (int i = slot_e1; i < slot_e7; ++i)
        if (a[i] < a[i + 1])
            return false;
    if (a[slot_e7] < 0)
        return false;
    const Int& a9 = a[slot_e9];
    const Int& a10 = a[slot_e10];
    const Int& a0 = a[slot_e9_10];
    if (!(a9 >= a10 && a10 >= 0))
        return false;
    if (!(a0 >= a9))
        return false;
    if (!(a9 + a10 >= a0))
        return false;
    if (epsilon != 0 && epsilon != 1)
        return false;
    if (epsilon == 1)
        for (const auto& v : a)
            if (v % 2 != 0)
                return false;
    return true;
}

Int quadratic_form_of_coeffs(const std::array<Int, kRank>& a)
{
    const auto& g = gram_matrix();
    Int q = 0;
    for (int i = 0; i < kRank; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < kRank; ++j)
            if (g[i][j] != 0 && a[j] != 0)
                q += g[i][j] * a[i] * a[j];
    }
    return q;
}

Int FundamentalCoefficients::q_value() const
{
    return quadratic_form_of_coeffs(a);
}

NumClass FundamentalCoefficients::representative() const
{
    NumClass v;
    for (int i = 0; i < kRank; ++i)
        v[i] = a[i];
    return v;
}

NumClass FundRepWitness::derived_e8() const
{
    NumClass v;
    for (int i = slot_e1; i <= slot_e7; ++i)
        v -= sequence[i];
    v += Int(2) * sequence[slot_e9];
    v += Int(2) * sequence[slot_e10];
    v += Int(3) * sequence[slot_e9_10];
    return v;
}

namespace {

// Exhaustive enumeration of constraint tuples with a^T G a = square.
// Budget pruning is exact: partial contributions to the quadratic form only
// grow when nonnegative slots are appended, so every ascending scan stops
// at the first overflow. Hard caps close the loops whose partial form is
// still flat (a lone a1, or the a9 block before a0 enters).
void census_block(const Int& square, std::array<Int, kRank>& a, const Int& s7,
                  const Int& q7, std::vector<std::array<Int, kRank>>& out)
{
    const Int cap9 = isqrt_floor(square / 4);
    for (Int a9 = 0;; ++a9) {
        if (s7 > 0 && q7 + 2 * a9 * s7 > square)
            break;
        if (s7 == 0 && a9 > cap9)
            break;
        a[slot_e9] = a9;
        for (Int a10 = 0; a10 <= a9; ++a10) {
            const Int q9 = q7 + 2 * a9 * s7 + 2 * a10 * s7 + 2 * a9 * a10;
            if (a10 > 0 && q9 > square)
                break;
            a[slot_e10] = a10;
            for (Int a0 = a9; a0 <= a9 + a10; ++a0) {
                const Int q = q9 + 2 * a0 * (s7 + 2 * a9 + 2 * a10);
                if (q > square)
                    break;
                if (q == square) {
                    a[slot_e9_10] = a0;
                    out.push_back(a);
                    a[slot_e9_10] = 0;
                }
            }
        }
        a[slot_e10] = 0;
    }
    a[slot_e9] = 0;
}

void census_seven_block(const Int& square, int slot, std::array<Int, kRank>& a,
                        const Int& s7, const Int& q7,
                        std::vector<std::array<Int, kRank>>& out)
{
    census_block(square, a, s7, q7, out);
    if (slot > slot_e7)
        return;
    const Int cap = slot == slot_e1 ? square / 2 : a[slot - 1];
    for (Int v = 1; v <= cap; ++v) {
        const Int q = q7 + 2 * v * s7;
        if (q > square)
            break;
        a[slot] = v;
        census_seven_block(square, slot + 1, a, s7 + v, q, out);
        a[slot] = 0;
    }
}

} // namespace

std::vector<std::array<Int, kRank>> census_tuples(const Int& square)
{
    if (square <= 0)
        throw BadParameterError("census requires a positive square");
    std::vector<std::array<Int, kRank>> out;
    if (square % 2 != 0)
        return out; // the form is even
    std::array<Int, kRank> a{};
    a.fill(0);
    census_seven_block(square, slot_e1, a, 0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FundamentalCoefficients> enumerate_components(const Int& square)
{
    std::vector<FundamentalCoefficients> rows;
    for (const auto& a : census_tuples(square)) {
        rows.push_back(FundamentalCoefficients{a, 0});
        if (std::all_of(a.begin(), a.end(),
                        [](const Int& v) { return v % 2 == 0; }))
            rows.push_back(FundamentalCoefficients{a, 1});
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

namespace {

struct WitnessSearch {
    const NumClass* target;
    std::array<Int, kRank> a;
    std::vector<int> fill_order;
    std::array<std::vector<NumClass>, kRank> candidates;
    std::array<NumClass, kRank> chosen;
    std::array<bool, kRank> filled{};
    NumClass partial;      // sum of a_s * F_s over filled slots
    Int remaining_weight;  // sum of a_s over unfilled slots

    bool assign(std::size_t pos);
};

// Slots with equal coefficients and identical Gram rows are interchangeable;
// to cut the factorial blowup the search demands lexicographic increase along
// each such run. Runs are contiguous in the fill order by construction.
bool interchangeable(int s, int t)
{
    return (s >= slot_e1 && s <= slot_e7 && t >= slot_e1 && t <= slot_e7) ||
           (s == slot_e9 && t == slot_e10) || (s == slot_e10 && t == slot_e9);
}

bool WitnessSearch::assign(std::size_t pos)
{
    if (pos == fill_order.size()) {
        return partial == *target;
    }
    const int slot = fill_order[pos];
    const auto& g = gram_matrix();

    const NumClass* floor_class = nullptr;
    if (pos > 0) {
        const int prev = fill_order[pos - 1];
        if (interchangeable(prev, slot) && a[prev] == a[slot])
            floor_class = &chosen[prev];
    }

    for (const NumClass& f : candidates[slot]) {
        if (floor_class && !(*floor_class < f))
            continue;
        bool ok = true;
        for (int s = 0; s < kRank && ok; ++s)
            if (filled[s] && pair(f, chosen[s]) != g[slot][s])
                ok = false;
        if (!ok)
            continue;

        chosen[slot] = f;
        filled[slot] = true;
        const Int& weight = a[slot];
        if (weight != 0)
            partial += weight * f;
        remaining_weight -= weight;

        // The unfilled part of the presentation is a nonnegative combination
        // of effective isotropic classes, so the residue must stay in the
        // closed positive cone and carry enough ample degree for the
        // remaining coefficients; once every weighted slot is placed the
        // residue must vanish outright.
        bool feasible = true;
        if (weight != 0) {
            const NumClass rest = *target - partial;
            if (remaining_weight == 0) {
                feasible = rest.is_zero();
            } else {
                feasible = pair(rest, ample_reference()) >= remaining_weight &&
                           self_intersection(rest) >= 0;
            }
        }

        if (feasible && assign(pos + 1))
            return true;

        if (weight != 0)
            partial -= weight * f;
        remaining_weight += weight;
        filled[slot] = false;
    }
    return false;
}

} // namespace

FundRepWitness fundamental_coefficients(const PicClass& l,
                                        const FundRepOptions& options)
{
    const Int square = self_intersection(l.num);
    if (square <= 0)
        throw NonPositiveSquareError(
            "fundamental_coefficients requires L.L > 0");
    if (!is_effective(l.num, SurfaceModel::general))
        throw NotEffectiveError(
            "fundamental_coefficients requires an effective class");

    std::vector<std::array<Int, kRank>> tuples = census_tuples(square);
    std::mt19937_64 rng(options.seed);
    if (options.randomized)
        std::shuffle(tuples.begin(), tuples.end(), rng);

    const auto& g = gram_matrix();
    for (const auto& tuple : tuples) {
        WitnessSearch search;
        search.target = &l.num;
        search.a = tuple;

        // Prescribed pairings with L follow from the Gram rows; they also
        // bound the candidate slices.
        std::array<Int, kRank> p{};
        for (int s = 0; s < kRank; ++s) {
            Int acc = 0;
            for (int j = 0; j < kRank; ++j)
                if (g[s][j] != 0)
                    acc += g[s][j] * tuple[j];
            p[s] = acc;
        }

        bool slices_ok = true;
        for (int s = 0; s < kRank && slices_ok; ++s) {
            SliceResult slice = isotropic_slice(
                {l.num, p[s], /*primitive_only=*/false,
                 /*effective_only=*/true});
            if (slice.solutions.empty())
                slices_ok = false;
            search.candidates[s] = std::move(slice.solutions);
            if (options.randomized)
                std::shuffle(search.candidates[s].begin(),
                             search.candidates[s].end(), rng);
        }
        if (!slices_ok)
            continue;

        // Weighted slots first (they drive the reconstruction residue), then
        // the zero slots, each group in slot order so that interchangeable
        // runs stay contiguous.
        for (int s = 0; s < kRank; ++s)
            if (tuple[s] != 0)
                search.fill_order.push_back(s);
        for (int s = 0; s < kRank; ++s)
            if (tuple[s] == 0)
                search.fill_order.push_back(s);

        search.remaining_weight =
            std::accumulate(tuple.begin(), tuple.end(), Int(0));

        if (!search.assign(0))
            continue;

        FundRepWitness witness;
        witness.coefficients.a = tuple;
        witness.coefficients.epsilon = epsilon_invariant(l);
        witness.sequence = search.chosen;

        witness.gram_ok = true;
        for (int i = 0; i < kRank; ++i)
            for (int j = 0; j < kRank; ++j)
                if (pair(witness.sequence[i], witness.sequence[j]) != g[i][j])
                    witness.gram_ok = false;
        NumClass rebuilt;
        for (int i = 0; i < kRank; ++i)
            rebuilt += tuple[i] * witness.sequence[i];
        witness.reconstruction_ok =
            rebuilt == l.num && witness.coefficients.constraints_ok() &&
            witness.coefficients.q_value() == square;
        if (!witness.gram_ok || !witness.reconstruction_ok)
            throw InternalBoundViolationError(
                "fundamental witness failed re-verification");
        return witness;
    }

    throw SearchExhaustedError(
        "no coefficient tuple of square " + square.str() +
        " admits a witness sequence for the given class");
}

bool same_component(const PicClass& l1, const PicClass& l2)
{
    if (self_intersection(l1.num) != self_intersection(l2.num))
        return false;
    const FundRepWitness w1 = fundamental_coefficients(l1);
    const FundRepWitness w2 = fundamental_coefficients(l2);
    return w1.coefficients == w2.coefficients;
}

} // namespace enriques
