#pragma once

#include <optional>

#include "galq/bigfloat.hpp"
#include "galq/cyclotomic.hpp"
#include "galq/quantize.hpp"

namespace galq {

long long totient(long long n);
// a^phi(n) = 1 mod n; throws NotCoprime.
bool euler_theorem_check(long long a, long long n);
long long pow_mod(long long base, long long exp, long long n);
bool is_prime(long long n);
// Legendre symbol (k/p) by Euler's criterion; throws NotPrime unless p is an odd prime.
int legendre(long long k, long long p);

struct GaussSum {
    CyclotomicElement exact;  // in Q(zeta_n)
    Complex value;
};

// G(k, n) = sum_{xi=1}^{n} e^{2 pi i k xi^2 / n}
GaussSum gauss_sum(long long k, long long n, unsigned precision = 30);
// (k/n) sqrt(n) for n = 1 mod 4, i (k/n) sqrt(n) for n = 3 mod 4, and 0 for n = 2, k odd.
Complex gauss_closed_form(long long k, long long n, unsigned precision = 30);

/// Theta_3(z; tau1, tau2) = sum_{s=1}^{n} exp(2 pi i (tau2 s^4 / 4 + tau1 s^2 / 2 + z s) / n)
struct ThetaParams {
    long long n;
    Rational z;
    Rational tau1;
    Rational tau2;  // 0 for the quadratic sum
};

struct ThetaValue {
    std::optional<CyclotomicElement> exact;  // present when the phases lie in a small cyclotomic field
    Complex value;
};

inline constexpr long kMaxExactThetaConductor = 512;

ThetaValue discrete_theta(const ThetaParams& params, unsigned precision = 30);

// psi~(p) = sum_q e^{2 pi i p q / n} psi(q), p = 1..n, and its inverse with the 1/n factor.
WaveFunction dft_forward(const WaveFunction& psi);
WaveFunction dft_inverse(const WaveFunction& psi_tilde);

}  // namespace galq
