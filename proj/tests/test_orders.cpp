#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "cycover/error.hpp"
#include "cycover/matrix.hpp"
#include "cycover/orders.hpp"

using namespace cycover;

namespace {

// Test-side totient by definition: count of residues coprime to n.
std::uint64_t phi_by_counting(long long n) {
    std::uint64_t count = 0;
    for (long long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

std::map<long long, unsigned> factor(long long n) {
    std::map<long long, unsigned> f;
    for (long long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

// alpha is the SUM of the part totients while phi is their PRODUCT, so the
// comparison is an elementary sum-vs-product question over the part values:
//   alpha > phi  iff d = 2 p^k, p an odd prime (the part 2 adds 1 to the sum
//                but multiplies the product by 1; exceeds by exactly 1),
//   alpha = phi  iff d is a prime power (one part) or d = 12 (2 + 2 = 2 * 2),
//   alpha < phi  otherwise, including d = 1 where 0 < 1.
int alpha_vs_phi_expected(long long d) {  // -1 below, 0 equal, +1 above
    const auto f = factor(d);
    if (f.size() == 1) return 0;
    if (d == 12) return 0;
    if (f.size() == 2 && f.count(2) && f.at(2) == 1) return 1;
    return -1;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("coprime prime-power parts") {
    CHECK(coprime_prime_power_parts(1).parts.empty());

    const auto p12 = coprime_prime_power_parts(12).parts;
    REQUIRE(p12.size() == 2);
    CHECK(p12[0].prime == 2);
    CHECK(p12[0].exponent == 2);
    CHECK(p12[0].value == 4);
    CHECK(p12[1].prime == 3);
    CHECK(p12[1].value == 3);

    const auto p360 = coprime_prime_power_parts(360).parts;
    REQUIRE(p360.size() == 3);
    CHECK(p360[0].value == 8);
    CHECK(p360[1].value == 9);
    CHECK(p360[2].value == 5);

    // parts multiply back to d and are pairwise coprime
    for (long long d : {2LL, 15LL, 97LL, 1024LL, 9699690LL}) {
        const auto parts = coprime_prime_power_parts(d).parts;
        long long prod = 1;
        for (const auto& pp : parts) prod *= static_cast<long long>(pp.value);
        CHECK(prod == d);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                CHECK(std::gcd(parts[i].value, parts[j].value) == 1);
    }

    try {
        coprime_prime_power_parts(0);
        FAIL("d = 0 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPositive);
    }
}

TEST_CASE("euler_phi matches counting for n <= 300") {
    for (long long n = 1; n <= 300; ++n) CHECK(euler_phi(n) == phi_by_counting(n));
    try {
        euler_phi(-3);
        FAIL("negative argument accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPositive);
    }
}

TEST_CASE("alpha: values, independent recomputation, comparison with phi") {
    CHECK(alpha(1) == 0);
    CHECK(alpha(2) == 1);
    CHECK(alpha(4) == 2);
    CHECK(alpha(6) == 3);   // phi(2) + phi(3) = 3, exceeding phi(6) = 2
    CHECK(alpha(11) == 10);
    CHECK(alpha(12) == 4);  // phi(4) + phi(3)
    CHECK(alpha(13) == 12);
    CHECK(alpha(15) == 6);  // phi(3) + phi(5), while phi(15) = 8
    CHECK(alpha(60) == 8);  // phi(4) + phi(3) + phi(5) = 2 + 2 + 4

    for (long long d = 1; d <= 3000; ++d) {
        CAPTURE(d);
        // Recompute alpha from scratch: trial-division factorization plus
        // counting totients of the prime-power parts.
        std::uint64_t expect = 0;
        for (const auto& [p, e] : factor(d)) {
            long long pe = 1;
            for (unsigned i = 0; i < e; ++i) pe *= p;
            expect += phi_by_counting(pe);
        }
        const std::uint64_t a = alpha(d);
        const std::uint64_t phi = euler_phi(d);
        CHECK(a == expect);
        // The sum exceeds the product only for d = 2 p^k, and then by one.
        CHECK(a <= phi + (d % 4 == 2 ? 1 : 0));
        const int rel = a < phi ? -1 : (a == phi ? 0 : 1);
        CHECK(rel == alpha_vs_phi_expected(d));
    }
}

TEST_CASE("alpha is additive over coprime arguments greater than 1") {
    const std::vector<long long> pool = {2, 3, 4, 5, 7, 8, 9, 11, 25, 27, 49};
    for (long long a : pool)
        for (long long b : pool) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(alpha(a * b) == alpha(a) + alpha(b));
        }
}

TEST_CASE("cyclotomic polynomials: degrees, known coefficients, product identity") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{Int(-1), Int(1)});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{Int(1), Int(1)});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{Int(1), Int(-1), Int(1)});
    CHECK(cyclotomic_polynomial(12) ==
          std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(1)});

    for (std::uint64_t n = 1; n <= 100; ++n) {
        const auto c = cyclotomic_polynomial(n);
        CAPTURE(n);
        CHECK(c.size() == euler_phi(static_cast<long long>(n)) + 1);
        CHECK(c.back() == 1);  // monic

        // value at 1: p for prime powers p^k, 0 for n = 1, else 1
        Int at_one = 0;
        for (const auto& coeff : c) at_one += coeff;
        if (n == 1) {
            CHECK(at_one == 0);
        } else {
            const auto parts = coprime_prime_power_parts(static_cast<long long>(n)).parts;
            if (parts.size() == 1)
                CHECK(at_one == Int(static_cast<unsigned long>(parts[0].prime)));
            else
                CHECK(at_one == 1);
        }
    }

    // Product over divisors reconstructs x^n - 1.
    for (std::uint64_t n = 1; n <= 30; ++n) {
        std::vector<Int> prod = {Int(1)};
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
        std::vector<Int> expect(n + 1, Int(0));
        expect[0] = -1;
        expect[n] = 1;
        CAPTURE(n);
        CHECK(prod == expect);
    }
}

TEST_CASE("order_witness: exact multiplicative order, checked externally") {
    CHECK(order_witness(1).empty());
    for (long long d : {2LL, 3LL, 4LL, 6LL, 12LL, 15LL, 30LL, 60LL}) {
        const IMat w = order_witness(d);
        CAPTURE(d);
        CHECK(w.size() == alpha(d));
        CHECK(imat_is_identity(imat_pow(w, static_cast<std::uint64_t>(d))));
        for (const auto& pp : coprime_prime_power_parts(d).parts)
            CHECK_FALSE(imat_is_identity(
                imat_pow(w, static_cast<std::uint64_t>(d / static_cast<long long>(pp.prime)))));
    }
    try {
        order_witness(0);
        FAIL("d = 0 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPositive);
    }
}

TEST_CASE("gl_order_feasible: verdicts, witness policy, large inputs") {
    const OrderBoundReport no = gl_order_feasible(8, 11);
    CHECK_FALSE(no.feasible);
    CHECK_FALSE(no.witness_constructed);
    CHECK(no.alpha == 10);
    CHECK(no.bound == 8);

    const OrderBoundReport yes = gl_order_feasible(10, 11);
    CHECK(yes.feasible);
    CHECK(yes.witness_constructed);

    for (long long m = 1; m <= 12; ++m)
        for (long long d = 1; d <= 30; ++d) {
            const auto r = gl_order_feasible(m, d);
            CHECK(r.feasible == (r.alpha <= static_cast<std::uint64_t>(m)));
        }

    // Far beyond the witness size limit the verdict must still be instant,
    // with the witness skipped.
    const OrderBoundReport big = gl_order_feasible(2'000'000'000LL, 1'000'000'007LL);
    CHECK(big.feasible);
    CHECK_FALSE(big.witness_constructed);
    CHECK(big.alpha == 1'000'000'006ULL);

    const OrderBoundReport big_no = gl_order_feasible(1'000'000LL, 1'000'000'007LL);
    CHECK_FALSE(big_no.feasible);
}

TEST_CASE("abelian_order_feasible: necessary condition only, no witness claim") {
    const OrderBoundReport r = abelian_order_feasible(3, 15);
    CHECK(r.feasible);
    CHECK(r.bound == 6);
    CHECK(r.alpha == 6);
    CHECK(r.phi == 8);
    CHECK_FALSE(r.witness_constructed);

    CHECK_FALSE(abelian_order_feasible(4, 11).feasible);  // alpha(11) = 10 > 8
    CHECK_FALSE(abelian_order_feasible(4, 13).feasible);
    CHECK(abelian_order_feasible(5, 11).feasible);

    try {
        abelian_order_feasible(0, 5);
        FAIL("g = 0 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPositive);
    }
}
