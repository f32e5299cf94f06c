#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "galq/rational.hpp"

namespace galq {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision (decimal digits) for newly created Real values and
// restores the previous one on exit. The underlying default is process-global,
// so numeric routines must not run concurrently with different precisions.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm2(const Complex& z);  // |z|^2
Real to_real(const Rational& q);
Real pi();
// e^{2 pi i k / n}
Complex unit_root(long long n, long long k);

// Decimal rendering with `digits` significant digits; values below 10^-digits print as "0".
std::string format_real(const Real& x, int digits);

inline double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace galq
