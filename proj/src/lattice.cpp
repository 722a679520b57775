#include "enriques/lattice.hpp"

#include "enriques/errors.hpp"

namespace enriques {

const std::array<std::array<int, kRank>, kRank>& gram_matrix()
{
    static const auto g = [] {
        std::array<std::array<int, kRank>, kRank> m{};
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j)
                m[i][j] = (i == j) ? 0 : 1;
        for (int i = slot_e1; i <= slot_e7; ++i) {
            m[i][slot_e9_10] = 1;
            m[slot_e9_10][i] = 1;
        }
        m[slot_e9][slot_e9_10] = 2;
        m[slot_e9_10][slot_e9] = 2;
        m[slot_e10][slot_e9_10] = 2;
        m[slot_e9_10][slot_e10] = 2;
        m[slot_e9_10][slot_e9_10] = 0;
        return m;
    }();
    return g;
}

Int pair(const NumClass& a, const NumClass& b)
{
    const auto& g = gram_matrix();
    Int total = 0;
    for (int i = 0; i < kRank; ++i) {
        if (a[i] == 0)
            continue;
        Int row = 0;
        for (int j = 0; j < kRank; ++j) {
            const int gij = g[i][j];
            if (gij == 0 || b[j] == 0)
                continue;
            row += gij == 1 ? b[j] : gij * b[j];
        }
        total += a[i] * row;
    }
    return total;
}

NumClass basis_class(int slot)
{
    if (slot < 0 || slot >= kRank)
        throw BadParameterError("basis slot out of range");
    NumClass v;
    v[slot] = 1;
    return v;
}

const NumClass& e8_class()
{
    static const NumClass e8 = [] {
        NumClass v;
        for (int i = slot_e1; i <= slot_e7; ++i)
            v[i] = -1;
        v[slot_e9] = 2;
        v[slot_e10] = 2;
        v[slot_e9_10] = 3;
        return v;
    }();
    return e8;
}

const NumClass& ample_reference()
{
    static const NumClass h0 = [] {
        NumClass v;
        v[0] = 1;
        v[1] = 1;
        v[2] = 1;
        return v;
    }();
    return h0;
}

Int divisibility(const NumClass& v)
{
    Int g = 0;
    for (int i = 0; i < kRank; ++i)
        g = int_gcd(g, v[i]);
    return g;
}

bool is_two_divisible_num(const NumClass& v)
{
    for (int i = 0; i < kRank; ++i)
        if (v[i] % 2 != 0)
            return false;
    return true;
}

int epsilon_invariant(const PicClass& l)
{
    return (is_two_divisible_num(l.num) && l.torsion == 1) ? 1 : 0;
}

bool is_effective(const NumClass& v, SurfaceModel model)
{
    if (model == SurfaceModel::arbitrary)
        throw UnsupportedModelError(
            "effectivity is not determined by the numerical class on an "
            "arbitrary Enriques surface");
    if (v.is_zero())
        return false;
    if (self_intersection(v) < 0)
        return false;
    return pair(v, ample_reference()) > 0;
}

LatticeCertificate change_of_basis_certificate()
{
    LatticeCertificate cert;
    const auto& g = gram_matrix();
    cert.gram.assign(kRank, IVec(kRank));
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j)
            cert.gram[i][j] = g[i][j];

    cert.determinant = det_integer(cert.gram);
    cert.signature = symmetric_signature(cert.gram);
    cert.smith = smith_diagonal(cert.gram);

    cert.even = true;
    for (int i = 0; i < kRank; ++i)
        if (cert.gram[i][i] % 2 != 0)
            cert.even = false;

    cert.unimodular = cert.smith.size() == kRank;
    for (const auto& d : cert.smith)
        if (d != 1)
            cert.unimodular = false;

    cert.e8_pairings_ok = self_intersection(e8_class()) == 0;
    for (int i = 0; i < kRank; ++i)
        if (pair(e8_class(), basis_class(i)) != 1)
            cert.e8_pairings_ok = false;

    return cert;
}

} // namespace enriques
