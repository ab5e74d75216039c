#include "cycover/betti.hpp"

#include "cycover/error.hpp"

namespace cycover {

BettiVector betti_vector(std::vector<Int> b) {
    if (b.empty() || b.size() % 2 == 0)
        throw Error(ErrorCode::InvalidParam,
                    "Betti vector must have odd length b_0..b_{2m}");
    if (b[0] != 1)
        throw Error(ErrorCode::InvalidParam, "Betti vector must have b_0 = 1");
    for (const auto& v : b)
        if (v < 0) throw Error(ErrorCode::InvalidParam, "Betti numbers must be nonnegative");
    return BettiVector{std::move(b)};
}

BettiVector kunneth_betti(const std::vector<BettiVector>& factors) {
    std::vector<Int> acc{Int(1)};
    for (const auto& f : factors) {
        betti_vector(f.b);  // shape check
        std::vector<Int> next(acc.size() + f.b.size() - 1, Int(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0) continue;
            for (std::size_t j = 0; j < f.b.size(); ++j) next[i + j] += acc[i] * f.b[j];
        }
        acc = std::move(next);
    }
    return BettiVector{std::move(acc)};
}

Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

BettiVector abelian_betti(int g) {
    if (g < 0) throw Error(ErrorCode::InvalidParam, "negative complex dimension");
    std::vector<Int> b;
    for (long long i = 0; i <= 2LL * g; ++i) b.push_back(binomial(2LL * g, i));
    return BettiVector{std::move(b)};
}

BettiVector k3_betti() {
    return BettiVector{{Int(1), Int(0), Int(22), Int(0), Int(1)}};
}

Int betti_lower_bound(long long b2, long long rho, long long k) {
    if (rho < 0 || rho > b2)
        throw Error(ErrorCode::InvalidRho,
                    "rho = " + std::to_string(rho) + " outside [0, b2 = " + std::to_string(b2) +
                        "]");
    if (k < 1) throw Error(ErrorCode::NonPositive, "k must be positive");
    return binomial(b2 - rho + k - 1, k);
}

std::string CoverCandidate::label() const {
    return "(" + std::to_string(e) + "," + std::to_string(r()) + ")";
}

namespace {

struct CandidateData {
    CoverCandidate candidate;
    // Betti vector of the cover when determined a priori; empty for the
    // irreducible hyper-Kaehler candidate.
    std::vector<BettiVector> factors;
    bool betti_known = false;
};

std::vector<CandidateData> dimension_four_candidates() {
    std::vector<CandidateData> out;
    out.push_back({CoverCandidate{4, {}}, {abelian_betti(4)}, true});
    out.push_back({CoverCandidate{2, {1}}, {abelian_betti(2), k3_betti()}, true});
    out.push_back({CoverCandidate{0, {2}}, {}, false});
    out.push_back({CoverCandidate{0, {1, 1}}, {k3_betti(), k3_betti()}, true});
    return out;
}

std::string num(const Int& v) { return v.get_str(); }

}  // namespace

ClassificationReport classify_cover_types(long long b2, long long rho) {
    if (b2 < 4)
        throw Error(ErrorCode::B2TooSmall, "classifier needs b2 >= 4, got " + std::to_string(b2));
    const Int bound1 = betti_lower_bound(b2, rho, 1);  // = b2 - rho
    const Int bound2 = betti_lower_bound(b2, rho, 2);

    ClassificationReport report;
    report.b2 = b2;
    report.rho = rho;
    report.trace.push_back(
        {"*", "rule0",
         "candidates restricted to shapes without strict Calabi-Yau factors (the symplectic "
         "form collapses any strict Calabi-Yau factor to a point): (4,0) abelian fourfold, "
         "(2,1) abelian surface x K3, (0,1) hyper-Kaehler fourfold, (0,2) K3 x K3",
         false});
    if (b2 != 23)
        report.trace.push_back({"*", "scope",
                                "b2 = " + std::to_string(b2) +
                                    " differs from 23: outside the benchmarked hyper-Kaehler "
                                    "fourfold regime; rules are applied formally",
                                false});

    for (const auto& data : dimension_four_candidates()) {
        const std::string label = data.candidate.label();
        bool excluded = false;

        if (!data.betti_known) {
            report.trace.push_back({label, "ruleA",
                                    "exempt: cover Betti numbers not determined a priori",
                                    false});
        } else {
            const BettiVector cover = kunneth_betti(data.factors);
            const Int& cb2 = cover.b[2];
            const Int& cb4 = cover.b[4];
            const bool fail2 = cb2 < bound1;
            const bool fail4 = cb4 < bound2;
            std::string detail = "b2 = " + num(cb2) + (fail2 ? " < " : " >= ") + num(bound1) +
                                 " and b4 = " + num(cb4) + (fail4 ? " < " : " >= ") + num(bound2) +
                                 " against symmetric-power bounds C(" + std::to_string(b2 - rho) +
                                 ",1), C(" + std::to_string(b2 - rho + 1) + ",2)";
            excluded = fail2 || fail4;
            report.trace.push_back({label, "ruleA", std::move(detail), excluded});
        }

        if (!excluded && data.candidate.e == 0 && data.candidate.r() == 2) {
            const long long trans = b2 - rho;
            const bool fail = trans > 21;
            std::string detail =
                "transcendental rank " + std::to_string(trans) + (fail ? " > " : " <= ") +
                "21; reconstructed reasoning: the cover is exactly a product of two K3 "
                "surfaces, an irreducible rank-" + std::to_string(trans) +
                " structure injecting into a direct sum injects into one summand, and a "
                "projective K3 factor has transcendental rank at most 22 - 1 = 21";
            report.trace.push_back({data.candidate.label(), "ruleB", std::move(detail), fail});
            excluded = fail;
        }

        if (!excluded) report.feasible.push_back(data.candidate);
    }
    return report;
}

}  // namespace cycover
