#pragma once

#include "enriques/int_types.hpp"

#include <vector>

namespace enriques {

using IVec = std::vector<Int>;
using IMat = std::vector<std::vector<Int>>;
using RVec = std::vector<Rat>;
using RMat = std::vector<std::vector<Rat>>;

// Determinant of a square integer matrix, fraction-free Bareiss elimination.
Int det_integer(IMat a);

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// Sylvester signature of a symmetric integer matrix via rational congruence
// diagonalization (simultaneous row/column operations). Works with zero
// diagonal entries, unlike a plain LDL^T sweep.
Signature symmetric_signature(const IMat& a);

// Diagonal of the Smith normal form (nonnegative, divisibility chain).
std::vector<Int> smith_diagonal(IMat a);

// Unimodular column reduction of a functional w: produces U with |det U| = 1
// and w^T U = (g, 0, ..., 0) where g = gcd of the entries of w.
// Column 0 of U maps to the generator of the image; columns 1..n-1 form a
// basis of the integer kernel of w. Completeness of the kernel basis is
// certified by unimodularity of U.
struct FunctionalReduction {
    Int gcd;
    IMat u;                    // n x n, |det| = 1
    IVec generator_column;     // U column 0
    std::vector<IVec> kernel;  // U columns 1..n-1
};
FunctionalReduction reduce_functional(const IVec& w);

// LDL^T factorization of a positive definite symmetric matrix over Q.
// a = L diag(d) L^T with L unit lower triangular. Throws std::logic_error if
// a pivot fails to be positive (the callers only pass certified PD inputs).
struct PdLdlt {
    RMat l;
    RVec d;
};
PdLdlt ldlt_positive_definite(const IMat& a);

// Inverse of a rational square matrix (Gauss-Jordan). Throws on singular.
RMat rational_inverse(RMat a);

// A unimodular matrix whose first column is v; requires gcd(v) = 1.
IMat unimodular_with_first_column(const IVec& v);

IMat identity_matrix(std::size_t n);

} // namespace enriques
