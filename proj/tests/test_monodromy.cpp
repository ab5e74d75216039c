#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cycover/error.hpp"
#include "cycover/monodromy.hpp"
#include "cycover/orders.hpp"

using namespace cycover;

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{img});
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Dumb quadratic oracle: does S_n contain a commuting pair of the given
// orders? No conjugacy shortcuts.
bool commuting_pair_oracle(const std::vector<Permutation>& sn, std::uint64_t d1,
                           std::uint64_t d2) {
    for (const auto& a : sn) {
        if (order_of(a) != d1) continue;
        for (const auto& b : sn)
            if (order_of(b) == d2 && commute(a, b)) return true;
    }
    return false;
}

// Minimal total over multisets of divisors > 1 of d whose lcm is exactly d.
void min_sum_search(long long d, const std::vector<long long>& divisors, std::size_t from,
                    long long lcm_so_far, long long sum_so_far, long long& best) {
    if (sum_so_far >= best) return;
    if (lcm_so_far == d) {
        best = sum_so_far;
        return;
    }
    for (std::size_t i = from; i < divisors.size(); ++i)
        min_sum_search(d, divisors, i + 1, std::lcm(lcm_so_far, divisors[i]),
                       sum_so_far + divisors[i], best);
}

long long min_degree_oracle(long long d) {
    if (d == 1) return 0;
    std::vector<long long> divisors;
    for (long long k = 2; k <= d; ++k)
        if (d % k == 0) divisors.push_back(k);
    long long best = d;  // a single d-cycle always works
    min_sum_search(d, divisors, 0, 1, 0, best);
    return best;
}

std::set<int> support(const Permutation& p) {
    std::set<int> s;
    for (int x = 0; x < p.degree(); ++x)
        if (p.images[x] != x) s.insert(x);
    return s;
}

bool is_single_cycle(const Permutation& p) {
    const CycleType t = cycle_type(p);
    int big = 0;
    for (int part : t.parts)
        if (part > 1) ++big;
    return big == 1;
}

}  // namespace

TEST_CASE("permutation basics") {
    try {
        permutation_from_images({0, 0, 2});
        FAIL("non-bijection accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidParam);
    }

    const Permutation a = permutation_from_images({1, 2, 0, 4, 3});
    CHECK(cycle_type(a) == CycleType{{3, 2}});
    CHECK(order_of(a) == 6);

    const Permutation id = identity_permutation(5);
    CHECK(compose(a, id).images == a.images);
    CHECK(compose(id, a).images == a.images);
    CHECK(commute(a, a));

    const Permutation b = permutation_from_images({1, 0, 2, 3, 4});
    const Permutation c = permutation_from_images({0, 1, 3, 2, 4});
    CHECK(commute(b, c));  // disjoint transpositions
    const Permutation overlap = permutation_from_images({2, 1, 0, 3, 4});
    CHECK_FALSE(commute(b, overlap));

    // compose(a, b) applies b first
    const Permutation ab = compose(b, overlap);
    CHECK(ab.images[2] == b.images[overlap.images[2]]);
}

TEST_CASE("order_of matches iterated composition for all of S_6") {
    for (const auto& p : all_permutations(6)) {
        Permutation power = p;
        std::uint64_t k = 1;
        const Permutation id = identity_permutation(6);
        while (power.images != id.images) {
            power = compose(power, p);
            ++k;
        }
        CHECK(order_of(p) == k);
    }
}

TEST_CASE("min_symmetric_degree equals the exhaustive multiset search") {
    CHECK(min_symmetric_degree(1) == 0);
    CHECK(min_symmetric_degree(6) == 5);
    CHECK(min_symmetric_degree(12) == 7);
    CHECK(min_symmetric_degree(15) == 8);
    CHECK(min_symmetric_degree(11) == 11);
    for (long long d = 1; d <= 80; ++d) {
        CAPTURE(d);
        CHECK(min_symmetric_degree(d) == min_degree_oracle(d));
    }
}

TEST_CASE("prime_order_shape enumerates k p-cycles plus fixed points") {
    const auto shapes = prime_order_shape(7, 3);
    REQUIRE(shapes.size() == 2);
    CHECK(shapes[0] == CycleType{{3, 1, 1, 1, 1}});
    CHECK(shapes[1] == CycleType{{3, 3, 1}});

    const auto forced = prime_order_shape(7, 5);  // 2p > n: single shape
    REQUIRE(forced.size() == 1);
    CHECK(forced[0] == CycleType{{5, 1, 1}});

    CHECK(prime_order_shape(7, 7) == std::vector<CycleType>{CycleType{{7}}});

    try {
        prime_order_shape(7, 4);
        FAIL("composite p accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
    try {
        prime_order_shape(7, 11);
        FAIL("p > n accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PExceedsN);
    }

    // Cross-check against a full scan of S_7.
    std::map<std::vector<int>, bool> seen;
    for (const auto& p : all_permutations(7))
        if (order_of(p) == 3) seen[cycle_type(p).parts] = true;
    CHECK(seen.size() == shapes.size());
    for (const auto& t : shapes) CHECK(seen.count(t.parts) == 1);
}

TEST_CASE("commuting_orders_possible concords with the quadratic oracle, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto sn = all_permutations(n);
        std::set<std::uint64_t> orders;
        for (const auto& p : sn) orders.insert(order_of(p));
        for (std::uint64_t d1 : orders)
            for (std::uint64_t d2 : orders) {
                CAPTURE(n);
                CAPTURE(d1);
                CAPTURE(d2);
                CHECK(commuting_orders_possible(n, static_cast<long long>(d1),
                                                static_cast<long long>(d2)) ==
                      commuting_pair_oracle(sn, d1, d2));
            }
    }
}

TEST_CASE("commuting_orders_possible decided regimes beyond brute range") {
    CHECK_FALSE(commuting_orders_possible(16, 11, 13));
    CHECK_FALSE(commuting_orders_possible(21, 11, 13));  // still both forced single
    CHECK(commuting_orders_possible(100, 1, 97));
    CHECK(commuting_orders_possible(30, 17, 17));  // equal orders commute trivially

    try {
        commuting_orders_possible(4, 5, 2);
        FAIL("unrealizable order accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeTooSmall);
    }
    try {
        commuting_orders_possible(0, 1, 1);
        FAIL("degree 0 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeTooSmall);
    }
    try {
        commuting_orders_possible(16, 3, 5);  // answer exists but is out of regime
        FAIL("undecided regime produced a verdict");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Indeterminate);
    }
}

TEST_CASE("commuting cycles have equal or disjoint supports (exhaustive, S_5)") {
    // The structural lemma behind the forced-cycle regime, verified directly.
    std::vector<Permutation> cycles;
    for (const auto& p : all_permutations(5))
        if (p.degree() == 5 && is_single_cycle(p)) cycles.push_back(p);
    for (const auto& a : cycles)
        for (const auto& b : cycles) {
            if (!commute(a, b)) continue;
            const std::set<int> sa = support(a), sb = support(b);
            std::vector<int> inter;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(inter));
            CHECK((inter.empty() || sa == sb));
        }
}

TEST_CASE("galois_like_obstruction: the flagship degree-16 case") {
    const ObstructionReport r = galois_like_obstruction(16, 4);
    CHECK(r.obstructed);
    REQUIRE(r.witness_primes.has_value());
    CHECK(r.witness_primes->first == 11);
    CHECK(r.witness_primes->second == 13);
    REQUIRE_FALSE(r.reasons.empty());
    CHECK(r.reasons.front().find("premise") != std::string::npos);

    // The reason chain must spell out the translation argument and the final
    // impossibility with exact numbers.
    bool mentions_translations = false, mentions_counts = false;
    for (const auto& reason : r.reasons) {
        if (reason.find("translations commute") != std::string::npos)
            mentions_translations = true;
        if (reason.find("11 + 13 > 16") != std::string::npos) mentions_counts = true;
    }
    CHECK(mentions_translations);
    CHECK(mentions_counts);
}

TEST_CASE("galois_like_obstruction: inconclusive and empty regimes stay honest") {
    // degree 10, g = 1: the only candidate pair (5, 7) is out of regime.
    const ObstructionReport r10 = galois_like_obstruction(10, 1);
    CHECK_FALSE(r10.obstructed);
    CHECK_FALSE(r10.witness_primes.has_value());
    bool inconclusive = false;
    for (const auto& reason : r10.reasons)
        if (reason.find("inconclusive") != std::string::npos) inconclusive = true;
    CHECK(inconclusive);

    // degree 12, g = 1: (5,7) and (5,11) are inconclusive, (7,11) decides.
    const ObstructionReport r12 = galois_like_obstruction(12, 1);
    CHECK(r12.obstructed);
    REQUIRE(r12.witness_primes.has_value());
    CHECK(r12.witness_primes->first == 7);
    CHECK(r12.witness_primes->second == 11);

    // degree 16, g = 6: no prime p <= 16 has p - 1 > 12.
    const ObstructionReport r16 = galois_like_obstruction(16, 6);
    CHECK_FALSE(r16.obstructed);
    bool no_primes = false;
    for (const auto& reason : r16.reasons)
        if (reason.find("no two distinct primes") != std::string::npos) no_primes = true;
    CHECK(no_primes);

    CHECK_FALSE(galois_like_obstruction(4, 1).obstructed);

    try {
        galois_like_obstruction(1, 1);
        FAIL("degree 1 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeTooSmall);
    }
    try {
        galois_like_obstruction(16, 0);
        FAIL("g = 0 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPositive);
    }
}
