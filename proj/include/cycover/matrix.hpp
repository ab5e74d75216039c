#ifndef CYCOVER_MATRIX_HPP
#define CYCOVER_MATRIX_HPP

#include <cstddef>
#include <optional>

#include "cycover/numeric.hpp"

namespace cycover {

// Exact dense linear algebra, sized for lattice ranks in the low dozens.
// Nothing here ever rounds: definiteness and solvability verdicts must be
// decided in Q, not in floating point.

bool is_symmetric(const QMat& m);

// x^T M y for a symmetric bilinear form M.
Rat bilinear(const QMat& m, const QVec& x, const QVec& y);

// Solve A x = b by fraction-free-ish Gaussian elimination over Q.
// Returns nullopt when A is singular (no solution attempt is made then).
std::optional<QVec> solve_linear(QMat a, QVec b);

// Counts of (positive, zero, negative) squares of a diagonalization of a
// symmetric matrix by congruence; Sylvester's law makes them invariants.
struct InertiaCounts {
    std::size_t plus = 0;
    std::size_t zero = 0;
    std::size_t minus = 0;
};
InertiaCounts inertia(QMat m);

// Z-basis of { v : A v^T = 0 } for an integer matrix A with rows of length
// n, computed from the unimodular row transform of a Hermite reduction, so
// the basis spans a saturated subgroup and each row is primitive. Rows are
// sign-normalised (first nonzero entry positive) but otherwise returned in
// reduction order.
IMat integer_kernel_basis(const IMat& a, std::size_t n);

IMat imat_mul(const IMat& a, const IMat& b);
bool imat_is_identity(const IMat& m);
IMat imat_identity(std::size_t n);
// Binary powering; multiplication skips zero entries, which keeps powers of
// sparse companion blocks cheap.
IMat imat_pow(IMat base, std::uint64_t e);

}  // namespace cycover

#endif
