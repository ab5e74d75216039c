#ifndef CYCOVER_MONODROMY_HPP
#define CYCOVER_MONODROMY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cycover {

// Permutation of {0..n-1} in one-line notation.
struct Permutation {
    std::vector<int> images;
    int degree() const { return static_cast<int>(images.size()); }
};

Permutation permutation_from_images(std::vector<int> images);  // InvalidParam if not a bijection
Permutation identity_permutation(int n);
Permutation compose(const Permutation& a, const Permutation& b);  // x -> a(b(x))
bool commute(const Permutation& a, const Permutation& b);

// Partition of n by cycle lengths, parts descending.
struct CycleType {
    std::vector<int> parts;
    bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const Permutation& p);
std::uint64_t cycle_type_order(const CycleType& t);  // lcm of parts
std::uint64_t order_of(const Permutation& p);

// Smallest n with an element of order d in S_n: the sum of the coprime
// prime-power parts of d (0 for d = 1).
long long min_symmetric_degree(long long d);

// All cycle types of order exactly p in S_n: k p-cycles plus fixed points,
// k = 1..n/p, in that order. When 2p > n only k = 1 fits, so the shape of
// an order-p element is forced to a single p-cycle.
// Throws NotPrime / PExceedsN.
std::vector<CycleType> prime_order_shape(int n, long long p);

// Whether S_n contains commuting elements of orders d1 and d2. Decides
// exactly in these regimes: either order 1; d1 = d2; n <= 8 (exhaustive
// search); d1, d2 distinct primes forced to single cycles (2 d1 > n and
// 2 d2 > n), where commuting cycles must have equal or disjoint support, so
// the answer is d1 + d2 <= n. Throws DegreeTooSmall when an order is not
// realizable in S_n, Indeterminate outside the decided regimes.
bool commuting_orders_possible(int n, long long d1, long long d2);

struct ObstructionReport {
    int group_degree;
    int abelian_dim;
    std::optional<std::pair<long long, long long>> witness_primes;
    std::vector<std::string> reasons;
    bool obstructed;
};

// Searches for distinct primes p, q <= n with p-1 > 2g, q-1 > 2g and
// commuting_orders_possible(n, p, q) = false. Such a pair rules out any
// abelian Galois-like structure over a degree-n cover with full symmetric
// monodromy: the order bound forces both deck elements to act as pure
// translations, translations commute, and the two orders cannot commute in
// S_n. Indeterminate commuting checks are recorded as "inconclusive" and
// never count as obstructions.
ObstructionReport galois_like_obstruction(int n, int g);

}  // namespace cycover

#endif
