#ifndef CYCOVER_ZARISKI_HPP
#define CYCOVER_ZARISKI_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cycover/lattice.hpp"

namespace cycover {

// A finite system of prime divisor classes over an ambient form. Geometric
// axioms (distinctness, nonnegative cross pairings) are validated on
// request, not enforced on construction, so invalid systems can be
// diagnosed rather than rejected opaquely.
struct PrimeSystem {
    Lattice ambient;
    std::vector<DivisorClass> primes;
    std::vector<std::string> names;  // optional; defaulted to D0, D1, ...
};

struct ZariskiDecomposition {
    DivisorClass positive;
    std::map<std::size_t, Rat> negative_coeffs;  // index -> a_i > 0
    std::set<std::size_t> support;
};

// Postcondition checks, each recomputed from the returned data.
struct ZariskiCertificates {
    bool orthogonal = false;        // q(P, D_i) = 0 on the support
    bool nef_on_primes = false;     // q(P, D_j) >= 0 for every prime
    bool gram_negdef = false;       // Gram(support) negative definite
    bool sum_exact = false;         // P + sum a_i D_i = d
    bool support_positive = false;  // a_i > 0 exactly on the support
    bool all() const {
        return orthogonal && nef_on_primes && gram_negdef && sum_exact && support_positive;
    }
};

// Empty list means the system satisfies the prime-divisor axioms.
std::vector<std::string> validate_prime_system(const PrimeSystem& s);

// Support-growing decomposition d = P + N. Throws NotContractible when the
// candidate support is not negative definite, NegativeCoefficient (with the
// offending prime index) when the solved multiplicity goes negative; both
// indicate the input violates the geometric assumptions.
ZariskiDecomposition zariski_decompose(const PrimeSystem& s, const DivisorClass& d);

ZariskiCertificates verify_decomposition(const PrimeSystem& s, const DivisorClass& d,
                                         const ZariskiDecomposition& z);

}  // namespace cycover

#endif
