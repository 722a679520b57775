#include "doctest.h"

#include "enriques/exact_linalg.hpp"
#include "enriques/lattice.hpp"

#include <stdexcept>

using namespace enriques;

namespace {

IMat gram_as_imat()
{
    const auto& g = gram_matrix();
    IMat m(kRank, IVec(kRank));
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

} // namespace

TEST_CASE("integer determinants")
{
    CHECK(det_integer(identity_matrix(4)) == 1);
    CHECK(det_integer({{Int(2), Int(1)}, {Int(1), Int(1)}}) == 1);
    CHECK(det_integer({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
    CHECK(det_integer({{Int(2), Int(4)}, {Int(1), Int(2)}}) == 0);
    CHECK(det_integer(gram_as_imat()) == -1);
}

TEST_CASE("signature via congruence diagonalization")
{
    const Signature hyper = symmetric_signature({{Int(0), Int(1)},
                                                 {Int(1), Int(0)}});
    CHECK(hyper.positive == 1);
    CHECK(hyper.negative == 1);
    CHECK(hyper.zero == 0);

    const Signature mixed = symmetric_signature(
        {{Int(1), Int(0), Int(0)},
         {Int(0), Int(-1), Int(0)},
         {Int(0), Int(0), Int(0)}});
    CHECK(mixed.positive == 1);
    CHECK(mixed.negative == 1);
    CHECK(mixed.zero == 1);

    const Signature gram = symmetric_signature(gram_as_imat());
    CHECK(gram.positive == 1);
    CHECK(gram.negative == 9);
    CHECK(gram.zero == 0);
}

TEST_CASE("Smith normal form diagonal")
{
    const auto chain = smith_diagonal({{Int(2), Int(0)}, {Int(0), Int(3)}});
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == 1);
    CHECK(chain[1] == 6);

    const auto gram = smith_diagonal(gram_as_imat());
    for (const Int& d : gram)
        CHECK(d == 1);

    const auto doubled = smith_diagonal({{Int(2), Int(2)}, {Int(2), Int(2)}});
    REQUIRE(doubled.size() == 2);
    CHECK(doubled[0] == 2);
    CHECK(doubled[1] == 0);
}

TEST_CASE("functional reduction certifies gcd and kernel")
{
    const IVec w = {Int(4), Int(6), Int(10)};
    const FunctionalReduction red = reduce_functional(w);
    CHECK(red.gcd == 2);
    const Int det = det_integer(red.u);
    CHECK((det == 1 || det == -1));
    // w^T U = (g, 0, 0)
    for (std::size_t col = 0; col < w.size(); ++col) {
        Int s = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            s += w[i] * red.u[i][col];
        if (col == 0)
            CHECK(s == red.gcd);
        else
            CHECK(s == 0);
    }
    CHECK(red.kernel.size() == w.size() - 1);
    for (const IVec& k : red.kernel) {
        Int s = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            s += w[i] * k[i];
        CHECK(s == 0);
    }
}

TEST_CASE("positive definite LDL^T")
{
    const PdLdlt f = ldlt_positive_definite({{Int(2), Int(1)},
                                             {Int(1), Int(2)}});
    REQUIRE(f.d.size() == 2);
    CHECK(f.d[0] == Rat(2));
    CHECK(f.d[1] == Rat(3, 2));
    CHECK_THROWS_AS(ldlt_positive_definite({{Int(0), Int(1)},
                                            {Int(1), Int(0)}}),
                    std::logic_error);
}

TEST_CASE("rational inverse")
{
    const RMat inv = rational_inverse({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
    CHECK(inv[0][0] == Rat(1));
    CHECK(inv[0][1] == Rat(-1));
    CHECK(inv[1][0] == Rat(-1));
    CHECK(inv[1][1] == Rat(2));
    CHECK_THROWS(rational_inverse({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}));
}

TEST_CASE("unimodular completion of a primitive column")
{
    const IVec v = {Int(3), Int(5), Int(7)};
    const IMat w = unimodular_with_first_column(v);
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK(w[i][0] == v[i]);
    const Int det = det_integer(w);
    CHECK((det == 1 || det == -1));
}
