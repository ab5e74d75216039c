#ifndef CYCOVER_NUMERIC_HPP
#define CYCOVER_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cycover {

// All arithmetic that feeds a definiteness or feasibility verdict is exact.
using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// Canonical form "p/q" with q > 0 and gcd(p,q) = 1; integers print as "p".
std::string rational_to_string(const Rat& q);

// Accepts "p", "p/q", optional leading '-'. Throws ParseError on anything
// else (including q = 0, embedded spaces, or trailing junk).
Rat parse_rational(const std::string& s);

int sign(const Rat& q);

}  // namespace cycover

#endif
