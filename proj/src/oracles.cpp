#include "enriques/oracles.hpp"

#include "enriques/errors.hpp"
#include "enriques/int_types.hpp"

#include <algorithm>
#include <array>

namespace enriques::oracle {

namespace {

using RatRow = std::array<Rat, kRank>;
using RatGrid = std::array<RatRow, kRank>;

// Successive Schur complements of M: after step k the trailing block holds
// the complement, row k holds the elimination multipliers. Distinct in shape
// and traversal from the engine's unit-lower LDL^T.
struct ShellFactor {
    RatGrid work{};
    std::array<Rat, kRank> pivots{};
};

ShellFactor factor_shell_form(const RatGrid& m)
{
    ShellFactor f;
    f.work = m;
    for (int k = 0; k < kRank; ++k) {
        const Rat piv = f.work[k][k];
        if (piv <= 0)
            throw InternalBoundViolationError(
                "shell form is not positive definite");
        f.pivots[k] = piv;
        for (int i = k + 1; i < kRank; ++i) {
            const Rat ratio = f.work[k][i] / piv;
            for (int j = i; j < kRank; ++j)
                f.work[i][j] -= ratio * f.work[k][j];
            f.work[k][i] = ratio; // store the multiplier in the upper row
        }
    }
    return f;
}

struct ShellScan {
    const ShellFactor* factor;
    const NumClass* h;
    Int c;
    bool effective_only;
    bool primitive_only;
    std::array<Int, kRank> x{};
    std::vector<NumClass>* out;
};

// At level k the form contributes pivots[k] * (x_k + sum_{j>k} mult_kj x_j)^2.
void scan_level(ShellScan& s, int k, const Rat& budget)
{
    Rat shift(0);
    for (int j = k + 1; j < kRank; ++j)
        if (s.x[j] != 0)
            shift += s.factor->work[k][j] * Rat(s.x[j]);

    const Int start = rat_floor(-shift);
    auto visit = [&](const Int& xk) -> bool {
        const Rat v = Rat(xk) + shift;
        const Rat term = s.factor->pivots[k] * v * v;
        if (term > budget)
            return false;
        s.x[k] = xk;
        if (k == 0) {
            if (term == budget) {
                NumClass cand{s.x};
                if (pair(cand, *s.h) == s.c && !cand.is_zero()) {
                    if (s.effective_only &&
                        pair(cand, ample_reference()) <= 0)
                        return true;
                    if (s.primitive_only && divisibility(cand) != 1)
                        return true;
                    if (self_intersection(cand) != 0)
                        throw InternalBoundViolationError(
                            "shell point is not isotropic");
                    s.out->push_back(cand);
                }
            }
        } else {
            scan_level(s, k - 1, budget - term);
        }
        return true;
    };

    for (Int xk = start;; --xk)
        if (!visit(xk))
            break;
    for (Int xk = start + 1;; ++xk)
        if (!visit(xk))
            break;
    s.x[k] = 0;
}

RatGrid shell_form(const NumClass& h, const Int& h2)
{
    const auto& g = gram_matrix();
    std::array<Int, kRank> w{};
    for (int i = 0; i < kRank; ++i) {
        Int acc = 0;
        for (int j = 0; j < kRank; ++j)
            if (g[i][j] != 0)
                acc += g[i][j] * h[j];
        w[i] = acc;
    }
    RatGrid m{};
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j)
            m[i][j] = Rat(-g[i][j]) + Rat(2 * w[i] * w[j], h2);
    return m;
}

// Max-norm of M^{-1} bounds 1 / lambda_min; the box certificate follows.
Int shell_box_bound(const RatGrid& m, const Rat& budget)
{
    // Invert by Gauss-Jordan on a plain array copy.
    RatGrid a = m;
    RatGrid inv{};
    for (int i = 0; i < kRank; ++i)
        inv[i][i] = 1;
    for (int k = 0; k < kRank; ++k) {
        int piv = k;
        while (piv < kRank && a[piv][k] == 0)
            ++piv;
        if (piv == kRank)
            throw InternalBoundViolationError("shell form is singular");
        std::swap(a[k], a[piv]);
        std::swap(inv[k], inv[piv]);
        const Rat p = a[k][k];
        for (int j = 0; j < kRank; ++j) {
            a[k][j] /= p;
            inv[k][j] /= p;
        }
        for (int i = 0; i < kRank; ++i) {
            if (i == k || a[i][k] == 0)
                continue;
            const Rat f = a[i][k];
            for (int j = 0; j < kRank; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    Rat norm(0);
    for (int i = 0; i < kRank; ++i) {
        Rat row(0);
        for (int j = 0; j < kRank; ++j)
            row += inv[i][j] < 0 ? -inv[i][j] : inv[i][j];
        if (row > norm)
            norm = row;
    }
    // x^T M x <= budget and lambda_min >= 1 / norm give x_i^2 <= budget*norm.
    const Rat bound_sq = budget * norm;
    const Int num = rat_numerator(bound_sq);
    const Int den = rat_denominator(bound_sq);
    return isqrt_floor(num / den) + 1;
}

} // namespace

ShellSlice shell_slice(const NumClass& h, const Int& c, bool effective_only,
                       bool primitive_only)
{
    const Int h2 = self_intersection(h);
    if (h2 <= 0 || pair(h, ample_reference()) <= 0)
        throw NotPositiveError("shell oracle requires H in the positive cone");
    if (c < 0)
        throw BadParameterError("shell oracle requires c >= 0");

    ShellSlice result;
    result.box_bound = 0;
    if (c == 0)
        return result;

    const RatGrid m = shell_form(h, h2);
    const Rat budget = Rat(2 * c * c, h2);
    result.box_bound = shell_box_bound(m, budget);

    const ShellFactor factor = factor_shell_form(m);
    ShellScan scan;
    scan.factor = &factor;
    scan.h = &h;
    scan.c = c;
    scan.effective_only = effective_only;
    scan.primitive_only = primitive_only;
    scan.out = &result.solutions;
    scan_level(scan, kRank - 1, budget);

    std::sort(result.solutions.begin(), result.solutions.end());
    return result;
}

Int shell_phi(const NumClass& h)
{
    const Int h2 = self_intersection(h);
    if (h2 <= 0 || pair(h, ample_reference()) <= 0)
        throw NotPositiveError("shell oracle requires H in the positive cone");
    const Int bound = isqrt_floor(h2);
    for (Int c = 1; c <= bound; ++c) {
        if (!shell_slice(h, c, /*effective_only=*/true,
                         /*primitive_only=*/false)
                 .solutions.empty())
            return c;
    }
    throw InternalBoundViolationError(
        "shell oracle found no isotropic class below the square-root bound");
}

std::vector<std::array<Int, kRank>> census_tuples_exhaustive(const Int& square)
{
    if (square <= 0)
        throw BadParameterError("census oracle requires a positive square");
    if (square > 1000)
        throw BadParameterError("census oracle is a desk-scale cross-check; "
                                "use the engine above square 1000");
    std::vector<std::array<Int, kRank>> out;
    if (square % 2 != 0)
        return out;

    // Every pair of distinct slots pairs at least 1, so any coefficient in a
    // tuple with at least two nonzero slots is at most square/2; tuples with
    // fewer than two nonzero slots have vanishing form. Plain int64 suffices
    // at this scale.
    const long long sq = static_cast<long long>(square);
    const long long cap = sq / 2;

    std::array<long long, kRank> t{};
    auto q_of = [&]() {
        long long s7 = 0, pair7 = 0;
        for (int i = 0; i <= 6; ++i) {
            pair7 += t[i] * s7;
            s7 += t[i];
        }
        const long long a9 = t[7], a10 = t[8], a0 = t[9];
        return 2 * (pair7 + (a9 + a10 + a0) * s7 + a9 * a10 + 2 * a9 * a0 +
                    2 * a10 * a0);
    };

    auto block_scan = [&]() {
        for (long long a9 = 0; a9 <= cap; ++a9)
            for (long long a10 = 0; a10 <= a9; ++a10)
                for (long long a0 = a9; a0 <= a9 + a10; ++a0) {
                    t[7] = a9;
                    t[8] = a10;
                    t[9] = a0;
                    if (q_of() == sq) {
                        std::array<Int, kRank> row;
                        for (int i = 0; i < kRank; ++i)
                            row[i] = t[i];
                        out.push_back(row);
                    }
                }
        t[7] = t[8] = t[9] = 0;
    };

    // Plain weakly decreasing scan without pruning.
    auto rec = [&](auto&& self, int slot, long long prev) -> void {
        if (slot == 7) {
            block_scan();
            return;
        }
        for (long long v = 0; v <= prev; ++v) {
            t[slot] = v;
            self(self, slot + 1, v);
        }
        t[slot] = 0;
    };
    rec(rec, 0, cap);

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NumClass> isotropic_grid_classes(int max_coord)
{
    if (max_coord < 0 || max_coord > 5)
        throw BadParameterError("grid scan supports max_coord in [0, 5]");
    std::vector<NumClass> out;

    // int64 prefilter over the grid, exact re-verification on survivors.
    std::array<std::array<long long, kRank>, kRank> g{};
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j)
            g[i][j] = gram_matrix()[i][j];

    std::array<long long, kRank> v{};
    const long long top = max_coord;
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == kRank) {
            long long q = 0;
            for (int i = 0; i < kRank; ++i) {
                if (v[i] == 0)
                    continue;
                for (int j = 0; j < kRank; ++j)
                    if (g[i][j] != 0 && v[j] != 0)
                        q += g[i][j] * v[i] * v[j];
            }
            if (q != 0)
                return;
            std::array<Int, kRank> coords;
            for (int i = 0; i < kRank; ++i)
                coords[i] = v[i];
            NumClass cand(coords);
            if (cand.is_zero())
                return;
            if (self_intersection(cand) != 0)
                throw InternalBoundViolationError("grid prefilter mismatch");
            if (pair(cand, ample_reference()) > 0)
                out.push_back(cand);
            return;
        }
        for (long long c = 0; c <= top; ++c) {
            v[idx] = c;
            self(self, idx + 1);
        }
        v[idx] = 0;
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end());
    return out;
}

} // namespace enriques::oracle
