#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "galq/cyclotomic.hpp"

namespace galq {

/// Dense polynomial over Q(zeta_N), ascending coefficients, no trailing zeros
/// (the zero polynomial has no coefficients).
class CycPoly {
public:
    CycPoly() = default;
    explicit CycPoly(std::vector<CyclotomicElement> coeffs);

    static CycPoly monomial(const CyclotomicElement& c, int degree);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<CyclotomicElement>& coeffs() const noexcept { return coeffs_; }
    const CyclotomicElement& operator[](int k) const { return coeffs_[k]; }
    const CyclotomicElement& lead() const { return coeffs_.back(); }

    CycPoly derivative() const;
    CycPoly monic() const;
    CyclotomicElement eval(const CyclotomicElement& x) const;
    CycPoly map(const std::function<CyclotomicElement(const CyclotomicElement&)>& f) const;

    friend CycPoly operator+(const CycPoly& a, const CycPoly& b);
    friend CycPoly operator-(const CycPoly& a, const CycPoly& b);
    friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
    friend bool operator==(const CycPoly& a, const CycPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<CyclotomicElement> coeffs_;
};

// a = q*b + r with deg r < deg b.
std::pair<CycPoly, CycPoly> divmod(const CycPoly& a, const CycPoly& b);
// Monic gcd; gcd(0, 0) = 0.
CycPoly gcd(CycPoly a, CycPoly b);
// Yun's square-free decomposition of a nonzero polynomial: monic factors a_i with
// f = lead(f) * prod a_i^i; only non-constant factors are returned, with their i.
std::vector<std::pair<CycPoly, int>> squarefree_decomposition(const CycPoly& f);

// Simultaneous (Aberth-Ehrlich) iteration for all roots of sum coeffs[k] z^k.
// `digits` is the working precision; throws NonConvergence.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, unsigned digits, int max_iterations = 500);

}  // namespace galq
