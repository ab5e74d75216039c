#include "cycover/monodromy.hpp"

#include <algorithm>
#include <numeric>

#include "cycover/error.hpp"
#include "cycover/orders.hpp"

namespace cycover {

Permutation permutation_from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> hit(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= n || hit[v])
            throw Error(ErrorCode::InvalidParam, "images are not a bijection on {0..n-1}");
        hit[v] = true;
    }
    return Permutation{std::move(images)};
}

Permutation identity_permutation(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidParam, "negative degree");
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw Error(ErrorCode::InvalidParam, "composing permutations of different degrees");
    Permutation c;
    c.images.resize(a.images.size());
    for (std::size_t x = 0; x < b.images.size(); ++x)
        c.images[x] = a.images[b.images[x]];
    return c;
}

bool commute(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw Error(ErrorCode::InvalidParam, "comparing permutations of different degrees");
    for (std::size_t x = 0; x < a.images.size(); ++x)
        if (a.images[b.images[x]] != b.images[a.images[x]]) return false;
    return true;
}

CycleType cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.images.size(), false);
    CycleType t;
    for (std::size_t start = 0; start < p.images.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (std::size_t x = start; !seen[x]; x = p.images[x]) {
            seen[x] = true;
            ++len;
        }
        t.parts.push_back(len);
    }
    std::sort(t.parts.rbegin(), t.parts.rend());
    return t;
}

std::uint64_t cycle_type_order(const CycleType& t) {
    std::uint64_t o = 1;
    for (int part : t.parts) o = std::lcm(o, static_cast<std::uint64_t>(part));
    return o;
}

std::uint64_t order_of(const Permutation& p) { return cycle_type_order(cycle_type(p)); }

long long min_symmetric_degree(long long d) {
    auto parts = coprime_prime_power_parts(d).parts;
    long long total = 0;
    for (const auto& pp : parts) total += static_cast<long long>(pp.value);
    return total;
}

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void partitions_into(int n, int max_part, std::vector<int>& cur,
                     std::vector<CycleType>& out) {
    if (n == 0) {
        out.push_back(CycleType{cur});
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_into(n - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<CycleType> all_cycle_types(int n) {
    std::vector<CycleType> out;
    std::vector<int> cur;
    partitions_into(n, n, cur, out);
    return out;
}

// One permutation with the given cycle type: consecutive blocks.
Permutation representative(const CycleType& t) {
    Permutation p;
    int offset = 0;
    for (int part : t.parts) {
        for (int i = 0; i < part; ++i)
            p.images.push_back(offset + (i + 1) % part);
        offset += part;
    }
    return p;
}

// Exhaustive decision for small n: fix one representative per cycle type of
// order d1 (commuting existence only depends on the conjugacy class) and
// scan all of S_n for a commuting element of order d2.
bool commuting_orders_brute(int n, std::uint64_t d1, std::uint64_t d2) {
    for (const auto& t : all_cycle_types(n)) {
        if (cycle_type_order(t) != d1) continue;
        const Permutation x = representative(t);
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        do {
            const Permutation y{img};
            if (order_of(y) == d2 && commute(x, y)) return true;
        } while (std::next_permutation(img.begin(), img.end()));
    }
    return false;
}

}  // namespace

std::vector<CycleType> prime_order_shape(int n, long long p) {
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (p > n)
        throw Error(ErrorCode::PExceedsN,
                    "p = " + std::to_string(p) + " exceeds degree n = " + std::to_string(n));
    std::vector<CycleType> shapes;
    for (int k = 1; static_cast<long long>(k) * p <= n; ++k) {
        CycleType t;
        t.parts.assign(k, static_cast<int>(p));
        t.parts.resize(k + (n - k * static_cast<int>(p)), 1);
        shapes.push_back(std::move(t));
    }
    return shapes;
}

bool commuting_orders_possible(int n, long long d1, long long d2) {
    if (n < 1)
        throw Error(ErrorCode::DegreeTooSmall, "degree must be at least 1");
    for (long long d : {d1, d2})
        if (min_symmetric_degree(d) > n)
            throw Error(ErrorCode::DegreeTooSmall, "order " + std::to_string(d) +
                                                       " is not realizable in S_" +
                                                       std::to_string(n));
    if (d1 == 1 || d2 == 1) return true;  // the identity commutes with everything
    if (d1 == d2) return true;            // an element commutes with itself
    if (n <= 8)
        return commuting_orders_brute(n, static_cast<std::uint64_t>(d1),
                                      static_cast<std::uint64_t>(d2));
    if (is_prime(d1) && is_prime(d2) && 2 * d1 > n && 2 * d2 > n) {
        // Both shapes are forced to a single cycle plus fixed points.
        // Commuting cycles have equal or disjoint supports; equal lengths
        // are impossible for d1 != d2, so the cycles need disjoint support.
        return d1 + d2 <= n;
    }
    throw Error(ErrorCode::Indeterminate,
                "commuting orders (" + std::to_string(d1) + "," + std::to_string(d2) +
                    ") in S_" + std::to_string(n) + ": outside the decided regimes");
}

ObstructionReport galois_like_obstruction(int n, int g) {
    if (n < 2)
        throw Error(ErrorCode::DegreeTooSmall, "degree must be at least 2");
    if (g < 1)
        throw Error(ErrorCode::NonPositive, "abelian dimension must be positive");

    ObstructionReport report{n, g, std::nullopt, {}, false};
    const long long two_g = 2LL * g;

    std::vector<long long> primes;
    for (long long p = 2; p <= n; ++p)
        if (is_prime(p) && p - 1 > two_g) primes.push_back(p);

    report.reasons.push_back("premise: degree-" + std::to_string(n) +
                             " cover with full symmetric monodromy S_" + std::to_string(n) +
                             "; candidate deck factor: abelian variety of dimension " +
                             std::to_string(g));
    if (primes.size() < 2) {
        report.reasons.push_back("no two distinct primes p <= " + std::to_string(n) +
                                 " satisfy alpha(p) = p-1 > " + std::to_string(two_g) +
                                 " = 2g; the translation argument never applies");
        return report;
    }

    for (std::size_t i = 0; i < primes.size() && !report.obstructed; ++i) {
        for (std::size_t j = i + 1; j < primes.size() && !report.obstructed; ++j) {
            const long long p = primes[i];
            const long long q = primes[j];
            const std::string pq = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            bool possible;
            try {
                possible = commuting_orders_possible(n, p, q);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Indeterminate) throw;
                report.reasons.push_back("inconclusive: primes " + pq + ": " + e.what());
                continue;
            }
            if (possible) {
                report.reasons.push_back("primes " + pq + ": commuting elements of these orders "
                                         "exist in S_" + std::to_string(n) +
                                         "; no contradiction from this pair");
                continue;
            }
            report.obstructed = true;
            report.witness_primes = {p, q};
            report.reasons.push_back(
                "reconstructed: were the composed cover Galois, its deck group would surject "
                "onto S_" + std::to_string(n) + "; Cauchy's theorem in the preimages of "
                "order-" + std::to_string(p) + " and order-" + std::to_string(q) +
                " cyclic subgroups supplies deck elements of orders " + std::to_string(p) +
                " and " + std::to_string(q));
            report.reasons.push_back(
                "every birational self-map of an abelian variety acting on itself is an "
                "automorphism fixing the origin composed with a translation; the linear part's "
                "order divides the element's order");
            report.reasons.push_back(
                "order bound: alpha(" + std::to_string(p) + ") = " + std::to_string(p - 1) +
                " > " + std::to_string(two_g) + " = 2g and alpha(" + std::to_string(q) +
                ") = " + std::to_string(q - 1) + " > " + std::to_string(two_g) +
                " rule out linear parts of these orders on rank-2g first cohomology, so both "
                "elements are pure translations");
            report.reasons.push_back(
                "translations commute, so their images in S_" + std::to_string(n) +
                " would be commuting elements of orders " + std::to_string(p) + " and " +
                std::to_string(q));
            if (2 * p > n && 2 * q > n)
                report.reasons.push_back(
                    "impossible: in S_" + std::to_string(n) + " the shapes are forced to a "
                    "single " + std::to_string(p) + "-cycle and a single " + std::to_string(q) +
                    "-cycle; commuting cycles have equal or disjoint supports, lengths " +
                    std::to_string(p) + " != " + std::to_string(q) +
                    " forbid equality, and " + std::to_string(p) + " + " + std::to_string(q) +
                    " > " + std::to_string(n) + " forbids disjointness");
            else
                report.reasons.push_back(
                    "impossible: exhaustive search shows S_" + std::to_string(n) +
                    " has no commuting pair of orders " + std::to_string(p) + " and " +
                    std::to_string(q));
        }
    }
    if (!report.obstructed)
        report.reasons.push_back("no obstructing prime pair found; nothing is concluded about "
                                 "existence of such a cover");
    return report;
}

}  // namespace cycover
