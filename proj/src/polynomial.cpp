#include "galq/polynomial.hpp"

#include <algorithm>

#include "galq/errors.hpp"

namespace galq {

CycPoly::CycPoly(std::vector<CyclotomicElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CycPoly CycPoly::monomial(const CyclotomicElement& c, int degree) {
    std::vector<CyclotomicElement> coeffs(degree + 1, CyclotomicElement(0, c.conductor()));
    coeffs[degree] = c;
    return CycPoly(std::move(coeffs));
}

void CycPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CycPoly CycPoly::derivative() const {
    std::vector<CyclotomicElement> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(CyclotomicElement(static_cast<long>(k)) * coeffs_[k]);
    return CycPoly(std::move(d));
}

CycPoly CycPoly::monic() const {
    if (is_zero()) return *this;
    const CyclotomicElement inv = lead().inverse();
    std::vector<CyclotomicElement> c;
    for (const auto& x : coeffs_) c.push_back(x * inv);
    return CycPoly(std::move(c));
}

CyclotomicElement CycPoly::eval(const CyclotomicElement& x) const {
    CyclotomicElement acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

CycPoly CycPoly::map(const std::function<CyclotomicElement(const CyclotomicElement&)>& f) const {
    std::vector<CyclotomicElement> c;
    for (const auto& x : coeffs_) c.push_back(f(x));
    return CycPoly(std::move(c));
}

CycPoly operator+(const CycPoly& a, const CycPoly& b) {
    std::vector<CyclotomicElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) c[k] += b.coeffs_[k];
    }
    return CycPoly(std::move(c));
}

CycPoly operator-(const CycPoly& a, const CycPoly& b) {
    std::vector<CyclotomicElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) c[k] -= b.coeffs_[k];
    }
    return CycPoly(std::move(c));
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CyclotomicElement> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return CycPoly(std::move(c));
}

std::pair<CycPoly, CycPoly> divmod(const CycPoly& a, const CycPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {CycPoly(), a};
    const CyclotomicElement inv = b.lead().inverse();
    std::vector<CyclotomicElement> rem = a.coeffs();
    std::vector<CyclotomicElement> quot(a.degree() - b.degree() + 1);
    for (int k = a.degree(); k >= b.degree(); --k) {
        CyclotomicElement c = rem[k] * inv;
        const int shift = k - b.degree();
        quot[shift] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[shift + j] -= c * b[j];
    }
    rem.resize(b.degree());
    return {CycPoly(std::move(quot)), CycPoly(std::move(rem))};
}

CycPoly gcd(CycPoly a, CycPoly b) {
    while (!b.is_zero()) {
        CycPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<CycPoly, int>> squarefree_decomposition(const CycPoly& f) {
    if (f.is_zero()) throw Error("square-free decomposition of the zero polynomial");
    std::vector<std::pair<CycPoly, int>> out;
    const CycPoly a = f.monic();
    if (a.degree() == 0) return out;
    const CycPoly d = a.derivative();
    const CycPoly c = gcd(a, d);
    CycPoly w = divmod(a, c).first;
    CycPoly y = divmod(d, c).first;
    CycPoly z = y - w.derivative();
    for (int i = 1; w.degree() > 0; ++i) {
        CycPoly g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = divmod(w, g).first;
        y = divmod(z, g).first;
        z = y - w.derivative();
    }
    return out;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_in, unsigned digits, int max_iterations) {
    PrecisionScope scope(digits);
    std::vector<Complex> c = coeffs_in;
    while (!c.empty() && c.back().re == 0 && c.back().im == 0) c.pop_back();
    if (c.size() <= 1) return {};
    const std::size_t deg = c.size() - 1;
    const Complex lead = c.back();
    for (auto& x : c) x /= lead;

    if (deg == 1) return {-c[0]};

    // Initial guesses spread on a circle of the geometric-mean root radius.
    Real radius = 0;
    for (std::size_t k = 0; k < deg; ++k) {
        Real a = abs(c[k]);
        if (a == 0) continue;
        Real r = boost::multiprecision::pow(a, Real(1) / Real(deg - k));
        if (r > radius) radius = r;
    }
    if (radius == 0) return std::vector<Complex>(deg);
    std::vector<Complex> z(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        Real angle = 2 * pi() * Real(k) / Real(deg) + Real(0.4);
        z[k] = Complex(radius * boost::multiprecision::cos(angle), radius * boost::multiprecision::sin(angle));
    }

    const Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(digits) + 3);
    for (int it = 1; it <= max_iterations; ++it) {
        bool converged = true;
        for (std::size_t k = 0; k < deg; ++k) {
            // Horner for p and p'
            Complex p = c[deg], dp;
            for (std::size_t j = deg; j-- > 0;) {
                dp = dp * z[k] + p;
                p = p * z[k] + c[j];
            }
            if (p.re == 0 && p.im == 0) continue;
            Complex ratio = p / dp;
            Complex sum;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) sum += Complex(Real(1)) / (z[k] - z[j]);
            Complex w = ratio / (Complex(Real(1)) - ratio * sum);
            z[k] -= w;
            if (abs(w) > eps * (1 + abs(z[k]))) converged = false;
        }
        if (converged) return z;
    }
    throw NonConvergence("Aberth iteration did not converge; raise the precision", max_iterations);
}

}  // namespace galq
