#include "galq/bigfloat.hpp"

#include <cmath>
#include <sstream>

namespace galq {

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) { return boost::multiprecision::sqrt(norm2(z)); }

Real to_real(const Rational& q) { return Real(q.get_mpq_t()); }

Real pi() { return boost::math::constants::pi<Real>(); }

Complex unit_root(long long n, long long k) {
    k %= n;
    if (k < 0) k += n;
    // exact values on the axes keep small cases free of rounding noise
    if (k == 0) return Complex(Real(1));
    if (2 * k == n) return Complex(Real(-1));
    if (4 * k == n) return Complex(Real(0), Real(1));
    if (4 * k == 3 * n) return Complex(Real(0), Real(-1));
    Real angle = 2 * pi() * k / n;
    return {boost::multiprecision::cos(angle), boost::multiprecision::sin(angle)};
}

std::string format_real(const Real& x, int digits) {
    Real threshold = boost::multiprecision::pow(Real(10), -digits);
    if (boost::multiprecision::abs(x) < threshold) return "0";
    std::ostringstream os;
    os << std::scientific << std::setprecision(digits - 1) << x;
    return os.str();
}

}  // namespace galq
