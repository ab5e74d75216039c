#include "cycover/zariski.hpp"

#include <algorithm>

#include "cycover/error.hpp"

namespace cycover {

namespace {

void check_system_shape(const PrimeSystem& s) {
    for (const auto& p : s.primes)
        if (p.coeffs.size() != s.ambient.rank)
            throw Error(ErrorCode::AmbientMismatch,
                        "prime coefficient count does not match ambient rank");
    if (!s.names.empty() && s.names.size() != s.primes.size())
        throw Error(ErrorCode::LabelMismatch, "prime name count does not match prime count");
}

}  // namespace

std::vector<std::string> validate_prime_system(const PrimeSystem& s) {
    check_system_shape(s);
    std::vector<std::string> violations;
    const std::size_t m = s.primes.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (s.primes[i].coeffs == s.primes[j].coeffs)
                violations.push_back("duplicate primes (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
            else if (pairing(s.ambient, s.primes[i], s.primes[j]) < 0)
                violations.push_back("negative cross pairing (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
        }
    return violations;
}

ZariskiDecomposition zariski_decompose(const PrimeSystem& s, const DivisorClass& d) {
    check_system_shape(s);
    if (d.coeffs.size() != s.ambient.rank)
        throw Error(ErrorCode::AmbientMismatch,
                    "class coefficient count does not match ambient rank");
    const std::size_t m = s.primes.size();

    QVec d_pairings(m);
    for (std::size_t i = 0; i < m; ++i) d_pairings[i] = pairing(s.ambient, d, s.primes[i]);

    std::vector<std::size_t> support;  // kept sorted: indices only ever get appended
    for (std::size_t i = 0; i < m; ++i)
        if (d_pairings[i] < 0) support.push_back(i);

    QVec coeffs;  // multiplicities a_i, aligned with `support`
    for (;;) {
        if (!support.empty()) {
            QMat gram(support.size(), QVec(support.size()));
            for (std::size_t a = 0; a < support.size(); ++a)
                for (std::size_t b = 0; b < support.size(); ++b)
                    gram[a][b] = pairing(s.ambient, s.primes[support[a]], s.primes[support[b]]);
            InertiaCounts c = inertia(gram);
            if (c.plus != 0 || c.zero != 0)
                throw Error(ErrorCode::NotContractible,
                            "candidate support of size " + std::to_string(support.size()) +
                                " is not negative definite");
            QVec rhs(support.size());
            for (std::size_t a = 0; a < support.size(); ++a) rhs[a] = d_pairings[support[a]];
            auto solved = solve_linear(std::move(gram), std::move(rhs));
            // Negative definite => nonsingular, so the solve cannot fail.
            coeffs = std::move(*solved);
            for (std::size_t a = 0; a < support.size(); ++a)
                if (coeffs[a] < 0)
                    throw Error(ErrorCode::NegativeCoefficient,
                                "solved multiplicity " + rational_to_string(coeffs[a]) +
                                    " for prime " + std::to_string(support[a]),
                                support[a]);
        }

        // P = d - sum a_i D_i; look for a prime the candidate still meets
        // negatively. Lowest index first, one per round.
        QVec p = d.coeffs;
        for (std::size_t a = 0; a < support.size(); ++a)
            for (std::size_t k = 0; k < s.ambient.rank; ++k)
                p[k] -= coeffs[a] * s.primes[support[a]].coeffs[k];
        DivisorClass positive{std::move(p)};

        std::size_t next = m;
        for (std::size_t j = 0; j < m && next == m; ++j) {
            if (std::find(support.begin(), support.end(), j) != support.end()) continue;
            if (pairing(s.ambient, positive, s.primes[j]) < 0) next = j;
        }
        if (next == m) {
            ZariskiDecomposition z;
            z.positive = std::move(positive);
            for (std::size_t a = 0; a < support.size(); ++a)
                if (coeffs[a] != 0) {
                    z.negative_coeffs[support[a]] = coeffs[a];
                    z.support.insert(support[a]);
                }
            return z;
        }
        support.push_back(next);
        std::sort(support.begin(), support.end());
    }
}

ZariskiCertificates verify_decomposition(const PrimeSystem& s, const DivisorClass& d,
                                         const ZariskiDecomposition& z) {
    ZariskiCertificates c;
    const std::size_t m = s.primes.size();

    c.orthogonal = true;
    for (std::size_t i : z.support)
        if (pairing(s.ambient, z.positive, s.primes[i]) != 0) c.orthogonal = false;

    c.nef_on_primes = true;
    for (std::size_t j = 0; j < m; ++j)
        if (pairing(s.ambient, z.positive, s.primes[j]) < 0) c.nef_on_primes = false;

    std::vector<std::size_t> support(z.support.begin(), z.support.end());
    c.gram_negdef = true;
    if (!support.empty()) {
        QMat gram(support.size(), QVec(support.size()));
        for (std::size_t a = 0; a < support.size(); ++a)
            for (std::size_t b = 0; b < support.size(); ++b)
                gram[a][b] = pairing(s.ambient, s.primes[support[a]], s.primes[support[b]]);
        InertiaCounts counts = inertia(std::move(gram));
        c.gram_negdef = counts.plus == 0 && counts.zero == 0;
    }

    c.sum_exact = z.positive.coeffs.size() == d.coeffs.size();
    if (c.sum_exact) {
        QVec total = z.positive.coeffs;
        for (const auto& [i, a] : z.negative_coeffs)
            for (std::size_t k = 0; k < total.size(); ++k)
                total[k] += a * s.primes[i].coeffs[k];
        c.sum_exact = total == d.coeffs;
    }

    c.support_positive = true;
    for (const auto& [i, a] : z.negative_coeffs)
        if (a <= 0 || z.support.count(i) == 0) c.support_positive = false;
    for (std::size_t i : z.support)
        if (z.negative_coeffs.count(i) == 0) c.support_positive = false;

    return c;
}

}  // namespace cycover
