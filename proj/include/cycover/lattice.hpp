#ifndef CYCOVER_LATTICE_HPP
#define CYCOVER_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cycover/matrix.hpp"
#include "cycover/numeric.hpp"

namespace cycover {

// A finitely generated free Z-module with a rational-valued symmetric
// bilinear form, presented by its Gram matrix in a fixed labelled basis.
struct Lattice {
    std::size_t rank = 0;
    QMat gram;                        // rank x rank, symmetric
    std::vector<std::string> labels;  // pairwise distinct, one per basis vector
};

// Coordinates of a class in the basis of some ambient lattice. The ambient
// is supplied alongside the class wherever it matters; a length mismatch is
// diagnosed as AmbientMismatch.
struct DivisorClass {
    QVec coeffs;
};

// Inertia triple of the form: counts of positive / zero / negative squares.
struct Signature {
    std::size_t n_plus = 0;
    std::size_t n_zero = 0;
    std::size_t n_minus = 0;
    bool operator==(const Signature&) const = default;
};

// Throws NonSymmetric / LabelMismatch (count or duplicate).
Lattice lattice_from_gram(QMat gram, std::vector<std::string> labels);

// Block-diagonal sum; colliding labels from b get "_2", "_3", ... suffixes.
Lattice direct_sum(const Lattice& a, const Lattice& b);

struct CatalogEntry {
    std::string name;
    bool needs_param;
    std::string param_hint;
    std::string description;  // provenance of the convention, for --help
};
const std::vector<CatalogEntry>& lattice_catalog();

// Catalog keys: "U", "E8neg", "rank1" (param k != 0), "K3",
// "K3n" (param n >= 1), "Kumn" (param n >= 1).
// Throws UnknownName / MissingParam / InvalidParam.
Lattice standard_lattice(const std::string& name, std::optional<long> param = std::nullopt);

Signature signature(const Lattice& l);

// q(x, y) under l's form. Throws AmbientMismatch on length mismatch.
Rat pairing(const Lattice& l, const DivisorClass& x, const DivisorClass& y);

// Principal submatrix on `subset` has signature (0,0,|subset|). Empty subset
// is vacuously true. Throws IndexOutOfRange on bad or repeated indices.
bool is_negative_definite(const Lattice& l, const std::vector<std::size_t>& subset);

// Negative-definiteness of the pairing Gram matrix of the given classes.
// Linearly dependent inputs yield false (singular Gram), not an error.
// Throws EmptyInput / AmbientMismatch.
bool q_exceptional(const Lattice& l, const std::vector<DivisorClass>& classes);

// Basis of the saturated sublattice { v : q(v, c) = 0 for all c }. Requires
// an integer Gram and integer class coefficients (NonIntegral otherwise).
// Each basis vector is primitive; the span is saturated in l.
IMat primitive_orthogonal_complement(const Lattice& l, const std::vector<DivisorClass>& classes);

// Maximal number of independent classes spanning a negative-definite
// sublattice of a signature-(3, b2-3) form: b2 - 3. Throws B2TooSmall.
long branch_component_bound(long b2);

}  // namespace cycover

#endif
