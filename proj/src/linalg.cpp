#include "galq/linalg.hpp"

#include <algorithm>

#include "galq/errors.hpp"

namespace galq {

ExactMatrix identity_matrix(std::size_t n, int conductor) {
    ExactMatrix m(n, std::vector<CyclotomicElement>(n, CyclotomicElement(0, conductor)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = CyclotomicElement(1, conductor);
    return m;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ExactMatrix c(n, std::vector<CyclotomicElement>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

ExactMatrix scale(const ExactMatrix& a, const CyclotomicElement& c) {
    ExactMatrix out = a;
    for (auto& row : out)
        for (auto& x : row) x *= c;
    return out;
}

CyclotomicElement trace(const ExactMatrix& a) {
    CyclotomicElement t;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(ExactMatrix& a) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const CyclotomicElement inv = a[r][c].inverse();
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const CyclotomicElement f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<CyclotomicElement>> exact_nullspace(const ExactMatrix& a) {
    ExactMatrix m = a;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<CyclotomicElement>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<CyclotomicElement> v(cols);
        v[f] = CyclotomicElement(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t exact_rank(const ExactMatrix& a) {
    ExactMatrix m = a;
    return rref(m).size();
}

ComplexMatrix embed_matrix(const ExactMatrix& a, unsigned precision) {
    ComplexMatrix out;
    for (const auto& row : a) {
        std::vector<Complex> r;
        for (const auto& x : row) r.push_back(x.embed(precision));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ComplexVector> numeric_nullspace(ComplexMatrix a, const Real& tol) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        Real best = abs(a[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            Real v = abs(a[i][c]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best <= tol) {
            for (std::size_t i = r; i < rows; ++i) a[i][c] = Complex();
            continue;
        }
        std::swap(a[p], a[r]);
        const Complex inv = Complex(Real(1)) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Complex f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<ComplexVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        ComplexVector v(cols);
        v[f] = Complex(Real(1));
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

ComplexVector multiply(const ComplexMatrix& a, const ComplexVector& x) {
    ComplexVector y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

Real inf_norm(const ComplexMatrix& a) {
    Real best = 0;
    for (const auto& row : a) {
        Real s = 0;
        for (const auto& x : row) s += abs(x);
        if (s > best) best = s;
    }
    return best;
}

Real inf_norm(const ComplexVector& x) {
    Real best = 0;
    for (const auto& v : x) {
        Real a = abs(v);
        if (a > best) best = a;
    }
    return best;
}

std::vector<ComplexVector> trailing_echelon(std::vector<ComplexVector> basis, const Real& tol) {
    if (basis.empty()) return basis;
    const std::size_t cols = basis[0].size();
    std::size_t r = 0;
    for (std::size_t c = cols; c-- > 0 && r < basis.size();) {
        std::size_t p = r;
        Real best = abs(basis[r][c]);
        for (std::size_t i = r + 1; i < basis.size(); ++i) {
            Real v = abs(basis[i][c]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best <= tol) continue;
        std::swap(basis[p], basis[r]);
        const Complex inv = Complex(Real(1)) / basis[r][c];
        for (auto& x : basis[r]) x *= inv;
        basis[r][c] = Complex(Real(1));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i == r) continue;
            const Complex f = basis[i][c];
            for (std::size_t j = 0; j < cols; ++j) basis[i][j] -= f * basis[r][j];
            basis[i][c] = Complex();
        }
        ++r;
    }
    basis.resize(r);
    // clean round-off so the printed form is stable
    for (auto& v : basis)
        for (auto& x : v) {
            if (boost::multiprecision::abs(x.re) <= tol) x.re = 0;
            if (boost::multiprecision::abs(x.im) <= tol) x.im = 0;
        }
    return basis;
}

std::vector<std::vector<CyclotomicElement>> trailing_echelon(std::vector<std::vector<CyclotomicElement>> basis) {
    if (basis.empty()) return basis;
    const std::size_t cols = basis[0].size();
    std::size_t r = 0;
    for (std::size_t c = cols; c-- > 0 && r < basis.size();) {
        std::size_t p = r;
        while (p < basis.size() && basis[p][c].is_zero()) ++p;
        if (p == basis.size()) continue;
        std::swap(basis[p], basis[r]);
        const CyclotomicElement inv = basis[r][c].inverse();
        for (auto& x : basis[r]) x *= inv;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i == r || basis[i][c].is_zero()) continue;
            const CyclotomicElement f = basis[i][c];
            for (std::size_t j = 0; j < cols; ++j) basis[i][j] -= f * basis[r][j];
        }
        ++r;
    }
    basis.resize(r);
    return basis;
}

bool in_span(const std::vector<ComplexVector>& basis, const ComplexVector& v, const Real& tol) {
    auto rank = [&tol](const std::vector<ComplexVector>& rows) {
        if (rows.empty()) return std::size_t{0};
        ComplexMatrix m(rows.begin(), rows.end());
        // rank = columns - nullity of the transpose-free row system
        const std::size_t cols = m[0].size();
        return cols - numeric_nullspace(m, tol).size();
    };
    std::vector<ComplexVector> extended = basis;
    extended.push_back(v);
    return rank(extended) == rank(basis);
}

}  // namespace galq
