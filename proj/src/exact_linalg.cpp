#include "enriques/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace enriques {

IMat identity_matrix(std::size_t n)
{
    IMat id(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        id[i][i] = 1;
    return id;
}

Int det_integer(IMat a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    for (const auto& row : a)
        if (row.size() != n)
            throw std::logic_error("det_integer: matrix not square");

    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

int rat_sign(const Rat& r)
{
    if (r > 0)
        return 1;
    if (r < 0)
        return -1;
    return 0;
}

} // namespace

Signature symmetric_signature(const IMat& a)
{
    const std::size_t n = a.size();
    RMat m(n, RVec(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw std::logic_error("symmetric_signature: matrix not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] != a[j][i])
                throw std::logic_error("symmetric_signature: matrix not symmetric");
            m[i][j] = Rat(a[i][j]);
        }
    }

    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            // Prefer a symmetric swap with a later nonzero diagonal entry.
            std::size_t swap_j = n;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (m[j][j] != 0) {
                    swap_j = j;
                    break;
                }
            }
            if (swap_j < n) {
                std::swap(m[k], m[swap_j]);
                for (std::size_t i = 0; i < n; ++i)
                    std::swap(m[i][k], m[i][swap_j]);
            } else {
                // All later diagonal entries vanish; create a pivot from an
                // off-diagonal entry via a symmetric row/column addition.
                std::size_t add_j = n;
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (m[k][j] != 0) {
                        add_j = j;
                        break;
                    }
                }
                if (add_j == n) {
                    ++sig.zero;
                    continue;
                }
                for (std::size_t t = 0; t < n; ++t)
                    m[k][t] += m[add_j][t];
                for (std::size_t t = 0; t < n; ++t)
                    m[t][k] += m[t][add_j];
            }
        }
        const Rat pivot = m[k][k];
        if (pivot == 0) {
            ++sig.zero;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0)
                continue;
            const Rat f = m[i][k] / pivot;
            for (std::size_t t = 0; t < n; ++t)
                m[i][t] -= f * m[k][t];
            for (std::size_t t = 0; t < n; ++t)
                m[t][i] -= f * m[t][k];
        }
        if (rat_sign(pivot) > 0)
            ++sig.positive;
        else
            ++sig.negative;
    }
    return sig;
}

std::vector<Int> smith_diagonal(IMat a)
{
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<Int> diag;

    std::size_t offset = 0;
    while (offset < rows && offset < cols) {
        // Find a nonzero pivot in the remaining block.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = offset; i < rows && pi == rows; ++i)
            for (std::size_t j = offset; j < cols; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows)
            break;
        std::swap(a[offset], a[pi]);
        for (std::size_t i = 0; i < rows; ++i)
            std::swap(a[i][offset], a[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = offset + 1; i < rows; ++i) {
                while (a[i][offset] != 0) {
                    const Int q = a[i][offset] / a[offset][offset];
                    for (std::size_t t = 0; t < cols; ++t)
                        a[i][t] -= q * a[offset][t];
                    if (a[i][offset] != 0) {
                        std::swap(a[offset], a[i]);
                        clean = false;
                    }
                }
            }
            for (std::size_t j = offset + 1; j < cols; ++j) {
                while (a[offset][j] != 0) {
                    const Int q = a[offset][j] / a[offset][offset];
                    for (std::size_t t = 0; t < rows; ++t)
                        a[t][j] -= q * a[t][offset];
                    if (a[offset][j] != 0) {
                        for (std::size_t t = 0; t < rows; ++t)
                            std::swap(a[t][offset], a[t][j]);
                        clean = false;
                    }
                }
            }
        }

        // Enforce the divisibility chain: pivot must divide everything below.
        bool divides_all = true;
        for (std::size_t i = offset + 1; i < rows && divides_all; ++i)
            for (std::size_t j = offset + 1; j < cols; ++j)
                if (a[i][j] % a[offset][offset] != 0) {
                    for (std::size_t t = 0; t < cols; ++t)
                        a[offset][t] += a[i][t];
                    divides_all = false;
                    break;
                }
        if (!divides_all)
            continue;

        diag.push_back(boost::multiprecision::abs(a[offset][offset]));
        ++offset;
    }
    // Rank-deficient input: the remaining diagonal entries are zero and are
    // part of the Smith form, so report them instead of truncating.
    while (diag.size() < std::min(rows, cols))
        diag.push_back(0);
    return diag;
}

FunctionalReduction reduce_functional(const IVec& w)
{
    const std::size_t n = w.size();
    if (n == 0)
        throw std::logic_error("reduce_functional: empty functional");

    IVec v = w;
    IMat u = identity_matrix(n);

    auto col_sub = [&](std::size_t target, std::size_t source, const Int& q) {
        v[target] -= q * v[source];
        for (std::size_t i = 0; i < n; ++i)
            u[i][target] -= q * u[i][source];
    };
    auto col_swap = [&](std::size_t a_idx, std::size_t b_idx) {
        std::swap(v[a_idx], v[b_idx]);
        for (std::size_t i = 0; i < n; ++i)
            std::swap(u[i][a_idx], u[i][b_idx]);
    };
    auto col_negate = [&](std::size_t idx) {
        v[idx] = -v[idx];
        for (std::size_t i = 0; i < n; ++i)
            u[i][idx] = -u[i][idx];
    };

    bool all_zero = std::all_of(v.begin(), v.end(),
                                [](const Int& x) { return x == 0; });
    if (all_zero)
        throw std::logic_error("reduce_functional: zero functional");

    // Euclidean sweep: keep folding columns into column 0 until it carries
    // the gcd and all others vanish.
    for (;;) {
        std::size_t min_idx = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0)
                continue;
            if (min_idx == n ||
                boost::multiprecision::abs(v[j]) <
                    boost::multiprecision::abs(v[min_idx]))
                min_idx = j;
        }
        if (min_idx != 0)
            col_swap(0, min_idx);
        if (v[0] < 0)
            col_negate(0);
        bool done = true;
        for (std::size_t j = 1; j < n; ++j) {
            if (v[j] == 0)
                continue;
            const Int q = v[j] / v[0];
            col_sub(j, 0, q);
            if (v[j] != 0)
                done = false;
        }
        if (done)
            break;
    }

    FunctionalReduction out;
    out.gcd = v[0];
    out.u = u;
    out.generator_column.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.generator_column[i] = u[i][0];
    out.kernel.assign(n - 1, IVec(n));
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            out.kernel[j - 1][i] = u[i][j];
    return out;
}

PdLdlt ldlt_positive_definite(const IMat& a)
{
    const std::size_t n = a.size();
    RMat m(n, RVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = Rat(a[i][j]);

    PdLdlt out;
    out.l.assign(n, RVec(n, Rat(0)));
    out.d.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        out.l[i][i] = 1;

    for (std::size_t k = 0; k < n; ++k) {
        Rat pivot = m[k][k];
        for (std::size_t t = 0; t < k; ++t)
            pivot -= out.l[k][t] * out.l[k][t] * out.d[t];
        if (pivot <= 0)
            throw std::logic_error("ldlt_positive_definite: pivot not positive");
        out.d[k] = pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat s = m[i][k];
            for (std::size_t t = 0; t < k; ++t)
                s -= out.l[i][t] * out.l[k][t] * out.d[t];
            out.l[i][k] = s / pivot;
        }
    }
    return out;
}

RMat rational_inverse(RMat a)
{
    const std::size_t n = a.size();
    RMat inv(n, RVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0)
            ++piv;
        if (piv == n)
            throw std::logic_error("rational_inverse: singular matrix");
        std::swap(a[k], a[piv]);
        std::swap(inv[k], inv[piv]);
        const Rat p = a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] /= p;
            inv[k][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0)
                continue;
            const Rat f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

IMat unimodular_with_first_column(const IVec& v)
{
    const std::size_t n = v.size();
    IVec r = v;
    // Row-reduce r to e_0 by elementary integer row operations, mirroring each
    // op with its inverse applied to the columns of vinv; then vinv e_0 = v.
    IMat vinv = identity_matrix(n);

    auto row_sub = [&](std::size_t target, std::size_t source, const Int& q) {
        // r <- E r with E = I - q e_target e_source^T; vinv <- vinv E^{-1}.
        r[target] -= q * r[source];
        for (std::size_t i = 0; i < n; ++i)
            vinv[i][source] += q * vinv[i][target];
    };
    auto row_swap = [&](std::size_t a_idx, std::size_t b_idx) {
        std::swap(r[a_idx], r[b_idx]);
        for (std::size_t i = 0; i < n; ++i)
            std::swap(vinv[i][a_idx], vinv[i][b_idx]);
    };
    auto row_negate = [&](std::size_t idx) {
        r[idx] = -r[idx];
        for (std::size_t i = 0; i < n; ++i)
            vinv[i][idx] = -vinv[i][idx];
    };

    for (;;) {
        std::size_t min_idx = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (r[i] == 0)
                continue;
            if (min_idx == n ||
                boost::multiprecision::abs(r[i]) <
                    boost::multiprecision::abs(r[min_idx]))
                min_idx = i;
        }
        if (min_idx == n)
            throw std::logic_error("unimodular_with_first_column: zero vector");
        if (min_idx != 0)
            row_swap(0, min_idx);
        if (r[0] < 0)
            row_negate(0);
        bool done = true;
        for (std::size_t i = 1; i < n; ++i) {
            if (r[i] == 0)
                continue;
            row_sub(i, 0, r[i] / r[0]);
            if (r[i] != 0)
                done = false;
        }
        if (done)
            break;
    }
    if (r[0] != 1)
        throw std::logic_error(
            "unimodular_with_first_column: vector not primitive");
    return vinv;
}

} // namespace enriques
