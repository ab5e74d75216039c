#ifndef CYCOVER_BETTI_HPP
#define CYCOVER_BETTI_HPP

#include <string>
#include <vector>

#include "cycover/numeric.hpp"

namespace cycover {

// b_0..b_{2m} of a closed 2m-manifold (real dimension). Entries exact.
struct BettiVector {
    std::vector<Int> b;
    bool operator==(const BettiVector&) const = default;
};

// Validates shape: nonempty, odd length, b_0 = 1, entries >= 0.
BettiVector betti_vector(std::vector<Int> b);

// Convolution of the factor vectors; empty product is a point: (1).
BettiVector kunneth_betti(const std::vector<BettiVector>& factors);

// Complex torus of complex dimension g: b_i = C(2g, i).
BettiVector abelian_betti(int g);

// (1, 0, 22, 0, 1).
BettiVector k3_betti();

Int binomial(long long n, long long k);

// C(b2 - rho + k - 1, k): dimension of the k-th symmetric power of the
// rank-(b2 - rho) transcendental space; a lower bound for b_{2k} of any
// compact Kaehler cover. Throws InvalidRho (rho < 0 or rho > b2),
// NonPositive (k < 1).
Int betti_lower_bound(long long b2, long long rho, long long k);

// A shape of the Beauville-Bogomolov decomposition of the Calabi-Yau cover
// in complex dimension 4: an abelian factor of dimension e and hyper-Kaehler
// factors of half-dimensions ks (complex dimension 2k each).
struct CoverCandidate {
    int e = 0;
    std::vector<int> ks;
    int r() const { return static_cast<int>(ks.size()); }
    std::string label() const;  // "(e,r)"
    bool operator==(const CoverCandidate&) const = default;
};

struct TraceRow {
    std::string candidate;  // "(e,r)" or "*" for global notes
    std::string rule;       // "rule0" | "ruleA" | "ruleB" | "scope"
    std::string detail;     // exact numbers spelled out
    bool excludes = false;
};

struct ClassificationReport {
    long long b2 = 0;
    long long rho = 0;
    std::vector<CoverCandidate> feasible;
    std::vector<TraceRow> trace;
};

// Runs the candidate rules for a hyper-Kaehler fourfold with the given b2
// and Picard rank. Throws B2TooSmall (b2 < 4), InvalidRho.
ClassificationReport classify_cover_types(long long b2, long long rho);

}  // namespace cycover

#endif
