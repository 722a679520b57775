#include "enriques/isotropy.hpp"

#include "enriques/errors.hpp"
#include "enriques/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace enriques {

namespace {

constexpr std::size_t kKernelRank = kRank - 1;

struct SliceContext {
    const SliceQuery* query;
    std::vector<NumClass> kernel_basis;
    NumClass particular;
    PdLdlt factor;        // of A[i][j] = -pair(b_i, b_j)
    RVec center;          // t* = A^{-1} u
    Rat radius;           // (t - t*)^T A (t - t*) = radius on solutions
    std::vector<Int> t;   // current partial assignment, slots 0..8
    SliceResult* out;
};

// Value of the k-th diagonalized coordinate given t_k and the tail t_{k+1..}.
// With A = L D L^T the form splits as sum_k d_k v_k^2 where
// v_k = (t_k - t*_k) + sum_{j>k} L[j][k] (t_j - t*_j).
Rat tail_offset(const SliceContext& ctx, std::size_t k)
{
    Rat s = -ctx.center[k];
    for (std::size_t j = k + 1; j < kKernelRank; ++j)
        s += ctx.factor.l[j][k] * (Rat(ctx.t[j]) - ctx.center[j]);
    return s;
}

void emit_if_solution(SliceContext& ctx)
{
    NumClass x = ctx.particular;
    for (std::size_t i = 0; i < kKernelRank; ++i)
        if (ctx.t[i] != 0)
            x += ctx.t[i] * ctx.kernel_basis[i];

    if (x.is_zero())
        return;
    if (self_intersection(x) != 0 || pair(x, ctx.query->h) != ctx.query->c)
        throw InternalBoundViolationError(
            "slice enumeration produced a non-solution leaf");
    if (ctx.query->effective_only && pair(x, ample_reference()) <= 0)
        return;
    if (ctx.query->primitive_only && divisibility(x) != 1)
        return;
    ctx.out->solutions.push_back(std::move(x));
}

void enumerate_level(SliceContext& ctx, std::size_t level, const Rat& budget)
{
    ++ctx.out->certificate.nodes;
    const std::size_t k = level - 1;
    const Rat off = tail_offset(ctx, k);
    const Rat& d = ctx.factor.d[k];

    // Integer scan outward from the real center -off; the per-level term
    // d (t + off)^2 grows monotonically in both directions, so each scan
    // stops at the first failure. Exactness needs no floating point.
    const Int start = rat_floor(-off);
    for (Int tk = start;; --tk) {
        const Rat v = Rat(tk) + off;
        const Rat term = d * v * v;
        if (term > budget)
            break;
        ctx.t[k] = tk;
        if (k == 0) {
            if (term == budget)
                emit_if_solution(ctx);
        } else {
            enumerate_level(ctx, k, budget - term);
        }
    }
    for (Int tk = start + 1;; ++tk) {
        const Rat v = Rat(tk) + off;
        const Rat term = d * v * v;
        if (term > budget)
            break;
        ctx.t[k] = tk;
        if (k == 0) {
            if (term == budget)
                emit_if_solution(ctx);
        } else {
            enumerate_level(ctx, k, budget - term);
        }
    }
    ctx.t[k] = 0;
}

SliceResult isotropic_slice_uncached(const SliceQuery& query)
{
    const Int h2 = self_intersection(query.h);
    if (h2 <= 0 || pair(query.h, ample_reference()) <= 0)
        throw NotPositiveError(
            "isotropic_slice requires H in the positive cone");
    if (query.c < 0)
        throw BadParameterError("isotropic_slice requires c >= 0");

    SliceResult result;
    result.certificate.radius = Rat(query.c * query.c, h2);
    if (query.c == 0)
        return result;

    IVec w(kRank);
    {
        const auto& g = gram_matrix();
        for (int i = 0; i < kRank; ++i) {
            Int s = 0;
            for (int j = 0; j < kRank; ++j)
                if (g[i][j] != 0)
                    s += g[i][j] * query.h[j];
            w[i] = s;
        }
    }

    FunctionalReduction red = reduce_functional(w);
    result.certificate.kernel_det = det_integer(red.u);
    if (result.certificate.kernel_det != 1 &&
        result.certificate.kernel_det != -1)
        throw InternalBoundViolationError("kernel transform not unimodular");

    if (query.c % red.gcd != 0) {
        result.empty_by_divisibility = true;
        return result;
    }

    SliceContext ctx;
    ctx.query = &query;
    ctx.out = &result;

    const Int scale = query.c / red.gcd;
    {
        std::array<Int, kRank> coords;
        for (int i = 0; i < kRank; ++i)
            coords[i] = scale * red.generator_column[i];
        ctx.particular = NumClass(coords);
    }
    ctx.kernel_basis.reserve(kKernelRank);
    for (const auto& col : red.kernel) {
        std::array<Int, kRank> coords;
        for (int i = 0; i < kRank; ++i)
            coords[i] = col[i];
        ctx.kernel_basis.emplace_back(coords);
    }

    IMat a(kKernelRank, IVec(kKernelRank));
    for (std::size_t i = 0; i < kKernelRank; ++i)
        for (std::size_t j = i; j < kKernelRank; ++j) {
            a[i][j] = -pair(ctx.kernel_basis[i], ctx.kernel_basis[j]);
            a[j][i] = a[i][j];
        }
    ctx.factor = ldlt_positive_definite(a);
    result.certificate.pivots = ctx.factor.d;

    RVec u(kKernelRank);
    for (std::size_t i = 0; i < kKernelRank; ++i)
        u[i] = Rat(pair(ctx.kernel_basis[i], ctx.particular));

    RMat a_rat(kKernelRank, RVec(kKernelRank));
    for (std::size_t i = 0; i < kKernelRank; ++i)
        for (std::size_t j = 0; j < kKernelRank; ++j)
            a_rat[i][j] = Rat(a[i][j]);
    const RMat a_inv = rational_inverse(a_rat);

    ctx.center.assign(kKernelRank, Rat(0));
    for (std::size_t i = 0; i < kKernelRank; ++i)
        for (std::size_t j = 0; j < kKernelRank; ++j)
            ctx.center[i] += a_inv[i][j] * u[j];

    Rat radius = Rat(self_intersection(ctx.particular));
    for (std::size_t i = 0; i < kKernelRank; ++i)
        radius += u[i] * ctx.center[i];
    if (radius != result.certificate.radius)
        throw InternalBoundViolationError(
            "slice radius disagrees with c^2 / H^2");
    ctx.radius = radius;

    ctx.t.assign(kKernelRank, Int(0));
    enumerate_level(ctx, kKernelRank, ctx.radius);

    std::sort(result.solutions.begin(), result.solutions.end());
    return result;
}

using SliceKey = std::tuple<std::array<Int, kRank>, Int, bool, bool>;

std::map<SliceKey, SliceResult>& slice_cache()
{
    static std::map<SliceKey, SliceResult> cache;
    return cache;
}

std::mutex& slice_mutex()
{
    static std::mutex m;
    return m;
}

} // namespace

SliceResult isotropic_slice(const SliceQuery& query)
{
    SliceKey key{query.h.coords(), query.c, query.primitive_only,
                 query.effective_only};
    {
        std::lock_guard<std::mutex> lock(slice_mutex());
        auto it = slice_cache().find(key);
        if (it != slice_cache().end())
            return it->second;
    }
    SliceResult result = isotropic_slice_uncached(query);
    {
        std::lock_guard<std::mutex> lock(slice_mutex());
        slice_cache().emplace(std::move(key), result);
    }
    return result;
}

MinPairing min_isotropic_pairing(const NumClass& h)
{
    const Int h2 = self_intersection(h);
    if (h2 <= 0 || pair(h, ample_reference()) <= 0)
        throw NotPositiveError(
            "min_isotropic_pairing requires H in the positive cone");

    const Int bound = isqrt_floor(h2);
    for (Int c = 1; c <= bound; ++c) {
        SliceResult slice =
            isotropic_slice({h, c, /*primitive_only=*/false,
                             /*effective_only=*/true});
        if (!slice.solutions.empty())
            return MinPairing{c, std::move(slice.solutions)};
    }
    throw InternalBoundViolationError(
        "no effective isotropic class found with pairing up to sqrt(H.H)");
}

} // namespace enriques
