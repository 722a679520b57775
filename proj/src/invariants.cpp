#include "enriques/invariants.hpp"

#include "enriques/errors.hpp"

#include <map>
#include <mutex>

namespace enriques {

Int phi(const NumClass& h)
{
    return min_isotropic_pairing(h).value;
}

MinPairing phi_with_witnesses(const NumClass& h)
{
    return min_isotropic_pairing(h);
}

namespace {

std::map<std::array<Int, kRank>, Int>& length_memo()
{
    static std::map<std::array<Int, kRank>, Int> memo;
    return memo;
}

std::mutex& length_mutex()
{
    static std::mutex m;
    return m;
}

// Recursive worker. Preconditions (maintained by callers): l effective in
// the general model, l.l >= 0.
Int length_rec(const NumClass& l)
{
    const Int l2 = self_intersection(l);
    if (l2 == 0) {
        // A sum of effective isotropic classes with vanishing total square
        // has pairwise orthogonal, hence proportional, summands; the part
        // count is maximized by the primitive subdivision.
        return divisibility(l);
    }

    {
        std::lock_guard<std::mutex> lock(length_mutex());
        auto it = length_memo().find(l.coords());
        if (it != length_memo().end())
            return it->second;
    }

    // The pairings E_i.l of the parts of an n-part decomposition are positive
    // and sum to l.l, so the smallest one is at most l.l / n. A decomposition
    // beating the best found so far needs n >= best + 1 parts, hence a
    // summand in a slice with c * (best + 1) <= l.l; scanning slices in
    // increasing c until that bound fails is therefore complete.
    Int best = 0;
    const Int c_max = l2 / 2;
    for (Int c = 1; c <= c_max; ++c) {
        if (c * (best + 1) > l2)
            break;
        SliceResult slice = isotropic_slice(
            {l, c, /*primitive_only=*/false, /*effective_only=*/true});
        for (const NumClass& e : slice.solutions) {
            NumClass rest = l - e;
            if (rest.is_zero())
                continue;
            if (self_intersection(rest) < 0)
                continue;
            if (pair(rest, ample_reference()) <= 0)
                continue;
            const Int sub = length_rec(rest);
            if (1 + sub > best)
                best = 1 + sub;
        }
    }

    if (best == 0)
        throw InternalBoundViolationError(
            "no isotropic decomposition found for an effective class of "
            "positive square");

    {
        std::lock_guard<std::mutex> lock(length_mutex());
        length_memo().emplace(l.coords(), best);
    }
    return best;
}

void validate_length_input(const NumClass& l, const LengthOptions& options)
{
    const Int l2 = self_intersection(l);
    if (l2 < 0)
        throw NegativeSquareError("length requires L.L >= 0");
    if (!is_effective(l, SurfaceModel::general))
        throw NotEffectiveError("length requires an effective class");
    if (l2 > options.cap)
        throw LengthCapExceededError(
            "L.L = " + l2.str() + " exceeds the exact-DP cap " +
            options.cap.str());
}

} // namespace

Int length(const NumClass& l, const LengthOptions& options)
{
    validate_length_input(l, options);
    return length_rec(l);
}

Int length_greedy_lower_bound(const NumClass& l, const LengthOptions& options)
{
    validate_length_input(l, options);

    NumClass rest = l;
    Int parts = 0;
    while (true) {
        const Int r2 = self_intersection(rest);
        if (r2 == 0)
            return parts + divisibility(rest);
        // Peel a summand of minimal pairing whose complement stays effective.
        bool peeled = false;
        const Int c_max = r2 / 2;
        for (Int c = 1; c <= c_max && !peeled; ++c) {
            SliceResult slice = isotropic_slice(
                {rest, c, /*primitive_only=*/false, /*effective_only=*/true});
            for (const NumClass& e : slice.solutions) {
                NumClass next = rest - e;
                if (next.is_zero())
                    continue;
                if (self_intersection(next) < 0)
                    continue;
                if (pair(next, ample_reference()) <= 0)
                    continue;
                rest = next;
                ++parts;
                peeled = true;
                break;
            }
        }
        if (!peeled)
            throw InternalBoundViolationError(
                "greedy peeling found no isotropic summand");
    }
}

Int arithmetic_genus(const NumClass& c)
{
    const Int c2 = self_intersection(c);
    if (c2 % 2 != 0)
        throw InternalBoundViolationError("odd self-intersection in an even lattice");
    return c2 / 2 + 1;
}

Int genus_multiplicity_bound(const NumClass& c, const Int& m)
{
    if (m < 0)
        throw BadParameterError("multiplicity must be nonnegative");
    return arithmetic_genus(c) - m * (m - 1) / 2;
}

SeshadriReport seshadri(const NumClass& h, SurfaceModel model)
{
    SeshadriReport report;
    report.h = h;
    report.model = model;
    report.phi_value = phi(h);

    const Rat phi_rat(report.phi_value);
    switch (model) {
    case SurfaceModel::very_general:
        report.exact = true;
        report.epsilon_lower = phi_rat;
        report.epsilon_upper = phi_rat;
        break;
    case SurfaceModel::general:
        report.exact = false;
        report.epsilon_lower = phi_rat / 2;
        report.epsilon_upper = phi_rat;
        report.caveats.push_back(
            {"interval_only",
             "without the very_general hypothesis only the sandwich "
             "phi/2 <= epsilon <= phi is certified"});
        break;
    case SurfaceModel::arbitrary:
        report.exact = false;
        report.epsilon_lower = phi_rat / 2;
        report.epsilon_upper = phi_rat;
        report.caveats.push_back(
            {"interval_only",
             "without the very_general hypothesis only the sandwich "
             "phi/2 <= epsilon <= phi is certified"});
        report.caveats.push_back(
            {"nodal_surface_possible",
             "on special surfaces (-2)-curves may lower the Seshadri "
             "constant at special points below any numerical prediction "
             "made here"});
        break;
    }

    report.kleiman_consistent =
        report.epsilon_upper * report.epsilon_upper <=
        Rat(self_intersection(h));
    return report;
}

} // namespace enriques
