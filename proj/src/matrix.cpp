#include "cycover/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace cycover {

bool is_symmetric(const QMat& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

Rat bilinear(const QMat& m, const QVec& x, const QVec& y) {
    assert(x.size() == m.size() && y.size() == m.size());
    Rat acc = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (x[i] == 0) continue;
        Rat row = 0;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (y[j] == 0) continue;
            row += m[i][j] * y[j];
        }
        acc += x[i] * row;
    }
    return acc;
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
    const std::size_t n = a.size();
    assert(b.size() == n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Rat p = a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rat f = a[r][col] / p;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    QVec x(n, Rat(0));
    for (std::size_t i = n; i-- > 0;) {
        Rat acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

InertiaCounts inertia(QMat m) {
    assert(is_symmetric(m));
    const std::size_t n = m.size();
    InertiaCounts counts;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            // Bring something onto the diagonal by a congruence, or conclude
            // the active row is null.
            std::size_t j = k + 1;
            while (j < n && m[k][j] == 0) ++j;
            if (j == n) {
                ++counts.zero;
                continue;
            }
            if (m[j][j] != 0) {
                // symmetric swap of rows/columns k and j
                std::swap(m[k], m[j]);
                for (std::size_t r = 0; r < n; ++r) std::swap(m[r][k], m[r][j]);
            } else {
                // e_k += e_j turns the hyperbolic off-diagonal into a pivot:
                // new (k,k) entry is 2*m[k][j].
                for (std::size_t c = 0; c < n; ++c) m[k][c] += m[j][c];
                for (std::size_t r = 0; r < n; ++r) m[r][k] += m[r][j];
            }
        }
        const Rat p = m[k][k];
        if (p > 0)
            ++counts.plus;
        else
            ++counts.minus;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rat f = m[i][k] / p;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
        // Mirror column elimination: rows below k already have a zero in
        // column k, so only row k changes, and symmetry of the trailing
        // block is restored.
        for (std::size_t j = k + 1; j < n; ++j) m[k][j] = 0;
    }
    return counts;
}

IMat integer_kernel_basis(const IMat& a, std::size_t n) {
    const std::size_t r = a.size();
    for (const auto& row : a) {
        assert(row.size() == n);
        (void)row;
    }
    // Rows of w: [ column of a^T | unimodular bookkeeping ].
    IMat w(n, IVec(r + n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) w[i][j] = a[j][i];
        w[i][r + i] = 1;
    }
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < r && pr < n; ++c) {
        // Euclid on the column until at most one nonzero entry survives.
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = pr; i < n; ++i) {
                if (w[i][c] == 0) continue;
                if (best == n ||
                    mpz_cmpabs(w[i][c].get_mpz_t(), w[best][c].get_mpz_t()) < 0)
                    best = i;
            }
            if (best == n) break;
            bool reduced_any = false;
            for (std::size_t i = pr; i < n; ++i) {
                if (i == best || w[i][c] == 0) continue;
                Int q = w[i][c] / w[best][c];  // mpz truncating division
                if (q != 0)
                    for (std::size_t j = c; j < r + n; ++j) w[i][j] -= q * w[best][j];
                if (w[i][c] != 0) reduced_any = true;
            }
            if (!reduced_any) {
                std::swap(w[best], w[pr]);
                ++pr;
                break;
            }
        }
    }
    IMat kernel;
    for (std::size_t i = pr; i < n; ++i) {
        IVec v(w[i].begin() + static_cast<std::ptrdiff_t>(r), w[i].end());
        for (const auto& entry : v) {
            if (entry == 0) continue;
            if (entry < 0)
                for (auto& e : v) e = -e;
            break;
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

IMat imat_identity(std::size_t n) {
    IMat m(n, IVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    const std::size_t n = a.size();
    const std::size_t p = b.empty() ? 0 : b[0].size();
    IMat c(n, IVec(p, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) {
                if (b[k][j] == 0) continue;
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    return c;
}

bool imat_is_identity(const IMat& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    }
    return true;
}

IMat imat_pow(IMat base, std::uint64_t e) {
    IMat result = imat_identity(base.size());
    while (e > 0) {
        if (e & 1) result = imat_mul(result, base);
        e >>= 1;
        if (e > 0) base = imat_mul(base, base);
    }
    return result;
}

}  // namespace cycover
