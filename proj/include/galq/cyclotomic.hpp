#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galq/bigfloat.hpp"
#include "galq/rational.hpp"

namespace galq {

class GaloisAutomorphism;

/// Precomputed data for Q(zeta_N): the cyclotomic polynomial Phi_N and the
/// reductions of zeta^k for every 0 <= k < N onto the power basis
/// 1, zeta, ..., zeta^{phi(N)-1}.
struct CyclotomicField {
    int conductor;
    int degree;                               // phi(N)
    std::vector<Integer> phi;                 // Phi_N, ascending, monic, length degree + 1
    std::vector<std::vector<Integer>> power;  // power[k] = zeta^k reduced, k in [0, N)

    static const CyclotomicField& get(int conductor);
};

/// Exact element of Q(zeta_N) in the reduced power basis modulo Phi_N.
/// The representation is unique for a fixed conductor; operands with different
/// conductors are promoted to the lcm of the two.
class CyclotomicElement {
public:
    CyclotomicElement();  // 0 in Q
    CyclotomicElement(const Rational& value, int conductor = 1);
    CyclotomicElement(long value, int conductor = 1) : CyclotomicElement(Rational(value), conductor) {}
    CyclotomicElement(int value, int conductor = 1) : CyclotomicElement(Rational(value), conductor) {}
    // Coefficients on 1, zeta, zeta^2, ...; any length is accepted and reduced mod Phi_N.
    CyclotomicElement(int conductor, std::vector<Rational> coeffs);

    static CyclotomicElement zeta(int conductor, long long power = 1);
    // sum_k counts[k] zeta^k with counts.size() == conductor.
    static CyclotomicElement from_exponent_counts(int conductor, std::span<const Rational> counts);

    int conductor() const noexcept { return conductor_; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    std::optional<Rational> as_rational() const;

    CyclotomicElement promoted(int conductor) const;
    CyclotomicElement inverse() const;
    CyclotomicElement pow(long long exponent) const;
    // Complex conjugation, the automorphism zeta -> zeta^{-1}.
    CyclotomicElement conj() const;
    // Product of all Galois conjugates; always rational.
    Rational field_norm() const;

    Complex embed(unsigned precision) const;

    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const CyclotomicElement& o);
    CyclotomicElement& operator/=(const CyclotomicElement& o);

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
    friend CyclotomicElement operator/(CyclotomicElement a, const CyclotomicElement& b) { return a /= b; }
    CyclotomicElement operator-() const;

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

    // Human-readable, e.g. "1/2 - z + 3/4*z^2" (z = zeta_N).
    std::string str() const;

private:
    friend CyclotomicElement apply_automorphism(const GaloisAutomorphism&, const CyclotomicElement&);
    void unify(CyclotomicElement& other);

    int conductor_;
    std::vector<Rational> coeffs_;
};

/// Free-function forms of the field operations.
enum class FieldOp { add, sub, mul, div };
CyclotomicElement field_arith(const CyclotomicElement& a, const CyclotomicElement& b, FieldOp op);

std::optional<Rational> is_rational(const CyclotomicElement& a);
Complex embed_complex(const CyclotomicElement& a, unsigned precision);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
long long euler_phi(long long n);

}  // namespace galq
