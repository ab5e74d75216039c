#ifndef CYCOVER_VERIFICATION_HPP
#define CYCOVER_VERIFICATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycover/zariski.hpp"

namespace cycover {

// The locked benchmark checklist. The `reproduce-paper` CLI command and the
// acceptance suite both run exactly this list, so the two cannot drift
// apart. Bump the version string when a check is added or changed.
inline constexpr const char* kChecklistVersion = "1";

struct CheckOutcome {
    std::string id;      // stable key, e.g. "c3a"
    std::string anchor;  // the claim being reproduced, spelled as arithmetic
    bool passed = false;
    std::string detail;  // exact numbers observed
};

// Runs every check, in manifest order. Never throws: a check that throws is
// reported as failed with the exception text in `detail`.
std::vector<CheckOutcome> run_reference_checks();

// Deterministic xorshift64* generator so the randomized suites are
// reproducible bit-for-bit across platforms (unlike std distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}
    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }
    // Uniform-enough integer in [lo, hi]; modulo bias is irrelevant for test
    // data generation. Returns long because the GMP classes construct from it.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// Exhaustive reference decomposition: tries every support subset and keeps
// the one satisfying all decomposition invariants (strictly positive
// multiplicities). Returns nullopt when no subset works; `valid_count`
// receives the number of subsets that did.
std::optional<ZariskiDecomposition> zariski_support_oracle(const PrimeSystem& s,
                                                           const DivisorClass& d,
                                                           std::size_t* valid_count = nullptr);

// Generators behind the randomized checks, exposed so tests can reuse them.
// Strictly diagonally dominant Gram with nonnegative off-diagonal entries
// (all |entries| <= 10), primes = basis vectors: a valid, negative-definite
// prime system.
PrimeSystem random_collapse_system(Rng& rng);
// Multiplicities in (0, 5] with denominators up to 4.
QVec random_positive_coefficients(Rng& rng, std::size_t count);
// Valid system over a signature-(1,3) diagonal form, 2-3 primes mixing a
// positive direction into negative basis directions, plus a class to
// decompose.
std::pair<PrimeSystem, DivisorClass> random_signature13_instance(Rng& rng);

}  // namespace cycover

#endif
