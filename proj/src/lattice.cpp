#include "cycover/lattice.hpp"

#include <set>
#include <unordered_set>

#include "cycover/error.hpp"

namespace cycover {

Lattice lattice_from_gram(QMat gram, std::vector<std::string> labels) {
    const std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n)
            throw Error(ErrorCode::NonSymmetric, "Gram matrix is not square");
    if (!is_symmetric(gram))
        throw Error(ErrorCode::NonSymmetric, "Gram matrix is not symmetric");
    if (labels.size() != n)
        throw Error(ErrorCode::LabelMismatch, "expected " + std::to_string(n) +
                                                  " labels, got " + std::to_string(labels.size()));
    std::unordered_set<std::string> seen;
    for (const auto& lbl : labels)
        if (!seen.insert(lbl).second)
            throw Error(ErrorCode::LabelMismatch, "duplicate label '" + lbl + "'");
    for (auto& row : gram)
        for (auto& q : row) q.canonicalize();
    return Lattice{n, std::move(gram), std::move(labels)};
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    const std::size_t n = a.rank + b.rank;
    QMat gram(n, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < a.rank; ++i)
        for (std::size_t j = 0; j < a.rank; ++j) gram[i][j] = a.gram[i][j];
    for (std::size_t i = 0; i < b.rank; ++i)
        for (std::size_t j = 0; j < b.rank; ++j) gram[a.rank + i][a.rank + j] = b.gram[i][j];

    std::unordered_set<std::string> used(a.labels.begin(), a.labels.end());
    std::vector<std::string> labels = a.labels;
    for (const auto& lbl : b.labels) {
        std::string candidate = lbl;
        for (int k = 2; !used.insert(candidate).second; ++k)
            candidate = lbl + "_" + std::to_string(k);
        labels.push_back(candidate);
    }
    return Lattice{n, std::move(gram), std::move(labels)};
}

namespace {

Lattice hyperbolic_plane() {
    return lattice_from_gram({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, {"e", "f"});
}

// Negated Cartan matrix of the E8 root system (Bourbaki node ordering):
// diagonal -2, entry +1 where nodes are adjacent in the Dynkin diagram.
Lattice e8_negative() {
    const std::size_t n = 8;
    QMat g(n, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = -2;
    const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (auto [i, j] : edges) g[i][j] = g[j][i] = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("r" + std::to_string(i));
    return lattice_from_gram(std::move(g), std::move(labels));
}

Lattice rank_one(long k, const std::string& label) {
    return lattice_from_gram({{Rat(k)}}, {label});
}

Lattice k3_lattice() {
    Lattice l = hyperbolic_plane();
    l = direct_sum(l, hyperbolic_plane());
    l = direct_sum(l, hyperbolic_plane());
    l = direct_sum(l, e8_negative());
    l = direct_sum(l, e8_negative());
    return l;
}

}  // namespace

const std::vector<CatalogEntry>& lattice_catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"U", false, "", "hyperbolic plane, Gram [[0,1],[1,0]]"},
        {"E8neg", false, "", "E8 root lattice with negated form (even, negative definite, rank 8)"},
        {"rank1", true, "k (nonzero)", "rank-1 lattice <k>"},
        {"K3", false, "", "U^3 + E8neg^2, the K3 surface lattice (standard convention)"},
        {"K3n", true, "n (>= 1)",
         "K3 + <-2(n-1)>: Beauville-Bogomolov-Fujiki form of the Hilbert-scheme "
         "deformation type of dimension 2n (literature convention); n = 1 gives K3"},
        {"Kumn", true, "n (>= 1)",
         "U^3 + <-2(n+1)>: Beauville-Bogomolov-Fujiki form of the generalized "
         "Kummer deformation type of dimension 2n (literature convention)"},
    };
    return entries;
}

Lattice standard_lattice(const std::string& name, std::optional<long> param) {
    auto require_param = [&](const char* hint) {
        if (!param)
            throw Error(ErrorCode::MissingParam,
                        "catalog entry '" + name + "' needs a parameter: " + hint);
        return *param;
    };
    if (name == "U") return hyperbolic_plane();
    if (name == "E8neg") return e8_negative();
    if (name == "rank1") {
        long k = require_param("k (nonzero)");
        if (k == 0)
            throw Error(ErrorCode::InvalidParam, "rank1 parameter must be nonzero");
        return rank_one(k, "v");
    }
    if (name == "K3") return k3_lattice();
    if (name == "K3n") {
        long n = require_param("n (>= 1)");
        if (n < 1)
            throw Error(ErrorCode::InvalidParam, "K3n parameter must be >= 1");
        // n = 1 is the K3 surface itself; no degenerate <0> summand.
        if (n == 1) return k3_lattice();
        return direct_sum(k3_lattice(), rank_one(-2 * (n - 1), "d"));
    }
    if (name == "Kumn") {
        long n = require_param("n (>= 1)");
        if (n < 1)
            throw Error(ErrorCode::InvalidParam, "Kumn parameter must be >= 1");
        Lattice l = direct_sum(hyperbolic_plane(), hyperbolic_plane());
        l = direct_sum(l, hyperbolic_plane());
        return direct_sum(l, rank_one(-2 * (n + 1), "d"));
    }
    throw Error(ErrorCode::UnknownName, "unknown catalog entry '" + name + "'");
}

Signature signature(const Lattice& l) {
    InertiaCounts c = inertia(l.gram);
    return Signature{c.plus, c.zero, c.minus};
}

Rat pairing(const Lattice& l, const DivisorClass& x, const DivisorClass& y) {
    if (x.coeffs.size() != l.rank || y.coeffs.size() != l.rank)
        throw Error(ErrorCode::AmbientMismatch,
                    "class coefficient count does not match lattice rank " +
                        std::to_string(l.rank));
    return bilinear(l.gram, x.coeffs, y.coeffs);
}

bool is_negative_definite(const Lattice& l, const std::vector<std::size_t>& subset) {
    std::set<std::size_t> seen;
    for (std::size_t i : subset) {
        if (i >= l.rank)
            throw Error(ErrorCode::IndexOutOfRange,
                        "index " + std::to_string(i) + " out of range for rank " +
                            std::to_string(l.rank),
                        i);
        if (!seen.insert(i).second)
            throw Error(ErrorCode::IndexOutOfRange, "repeated index " + std::to_string(i), i);
    }
    if (subset.empty()) return true;
    QMat sub(subset.size(), QVec(subset.size()));
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = 0; b < subset.size(); ++b) sub[a][b] = l.gram[subset[a]][subset[b]];
    InertiaCounts c = inertia(std::move(sub));
    return c.plus == 0 && c.zero == 0;
}

bool q_exceptional(const Lattice& l, const std::vector<DivisorClass>& classes) {
    if (classes.empty())
        throw Error(ErrorCode::EmptyInput, "q-exceptional test needs at least one class");
    const std::size_t m = classes.size();
    QMat pair_gram(m, QVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            pair_gram[i][j] = pair_gram[j][i] = pairing(l, classes[i], classes[j]);
    InertiaCounts c = inertia(std::move(pair_gram));
    return c.plus == 0 && c.zero == 0;
}

IMat primitive_orthogonal_complement(const Lattice& l, const std::vector<DivisorClass>& classes) {
    auto to_int = [](const Rat& q, const char* what) {
        if (q.get_den() != 1)
            throw Error(ErrorCode::NonIntegral, std::string(what) + " has non-integer entry " +
                                                    rational_to_string(q));
        return Int(q.get_num());
    };
    IMat gram(l.rank, IVec(l.rank));
    for (std::size_t i = 0; i < l.rank; ++i)
        for (std::size_t j = 0; j < l.rank; ++j)
            gram[i][j] = to_int(l.gram[i][j], "Gram matrix");
    // Constraint rows: v satisfies (c^T G) v = 0 for each class c.
    IMat constraints;
    for (const auto& cls : classes) {
        if (cls.coeffs.size() != l.rank)
            throw Error(ErrorCode::AmbientMismatch,
                        "class coefficient count does not match lattice rank " +
                            std::to_string(l.rank));
        IVec c(l.rank);
        for (std::size_t k = 0; k < l.rank; ++k) c[k] = to_int(cls.coeffs[k], "class");
        IVec row(l.rank, Int(0));
        for (std::size_t j = 0; j < l.rank; ++j)
            for (std::size_t k = 0; k < l.rank; ++k) row[j] += c[k] * gram[k][j];
        constraints.push_back(std::move(row));
    }
    return integer_kernel_basis(constraints, l.rank);
}

long branch_component_bound(long b2) {
    if (b2 < 3)
        throw Error(ErrorCode::B2TooSmall,
                    "b2 = " + std::to_string(b2) + " is below the three positive directions");
    return b2 - 3;
}

}  // namespace cycover
