#ifndef CYCOVER_ORDERS_HPP
#define CYCOVER_ORDERS_HPP

#include <cstdint>
#include <vector>

#include "cycover/matrix.hpp"
#include "cycover/numeric.hpp"

namespace cycover {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    std::uint64_t value;  // prime^exponent
};

struct CoprimeFactorization {
    std::uint64_t d;
    std::vector<PrimePower> parts;  // ascending by prime; empty for d = 1
};

struct OrderBoundReport {
    std::uint64_t d;
    std::uint64_t alpha;
    std::uint64_t phi;
    std::uint64_t bound;      // m for GL, 2g for the abelian case
    bool feasible;            // alpha <= bound
    bool witness_constructed; // true when feasibility is certified by a matrix
};

// All of these throw NonPositive for arguments < 1.
CoprimeFactorization coprime_prime_power_parts(long long d);
std::uint64_t euler_phi(long long n);
// alpha(d) = sum of euler_phi over the coprime prime-power parts; alpha(1) = 0.
// This is the size of the block-companion witness below and the feasibility
// threshold used throughout.  It is the least size of a rational matrix of
// multiplicative order d except when d == 2 (mod 4): there, negating an
// order-(d/2) witness saves the 1x1 block carried by the part 2.
std::uint64_t alpha(long long d);

// feasible = (alpha(d) <= m).  When feasible, the block witness pads by the
// identity to size m, so the threshold is attained; see the alpha note above
// for the caveat on necessity when d == 2 (mod 4).
OrderBoundReport gl_order_feasible(long long m, long long d);
// Necessary condition for an order-d automorphism of a g-dimensional
// abelian variety fixing the origin: alpha(d) <= 2g (faithful action on
// rank-2g first cohomology). Only necessity is certified.
OrderBoundReport abelian_order_feasible(long long g, long long d);

// Coefficients of the n-th cyclotomic polynomial, ascending degree.
std::vector<Int> cyclotomic_polynomial(std::uint64_t n);

// Block-diagonal companion matrices of the cyclotomic polynomials of the
// coprime prime-power parts of d: an integer matrix of size alpha(d) with
// multiplicative order exactly d (checked internally by exact powering).
// d = 1 returns the empty 0x0 matrix.
IMat order_witness(long long d);

}  // namespace cycover

#endif
