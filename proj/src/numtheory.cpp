#include "galq/numtheory.hpp"

#include <vector>

#include "galq/errors.hpp"

namespace galq {

long long totient(long long n) {
    if (n < 1) throw Error("totient needs n >= 1");
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

long long pow_mod(long long base, long long exp, long long n) {
    if (n == 1) return 0;
    __int128 result = 1, b = mod(base, n);
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) result = result * b % n;
        b = b * b % n;
    }
    return static_cast<long long>(result);
}

bool euler_theorem_check(long long a, long long n) {
    if (n < 1 || gcd_ll(a, n) != 1) throw NotCoprime(a, n);
    return pow_mod(a, totient(n), n) == 1 % n;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int legendre(long long k, long long p) {
    if (p == 2 || !is_prime(p)) throw NotPrime(p);
    const long long r = pow_mod(k, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

GaussSum gauss_sum(long long k, long long n, unsigned precision) {
    if (n < 1) throw Error("Gauss sum needs n >= 1");
    std::vector<Rational> counts(n, 0);
    for (long long xi = 1; xi <= n; ++xi) counts[mod(mod(k, n) * (xi % n) % n * (xi % n), n)] += 1;
    GaussSum g{CyclotomicElement::from_exponent_counts(static_cast<int>(n), counts), {}};
    g.value = g.exact.embed(precision);
    return g;
}

Complex gauss_closed_form(long long k, long long n, unsigned precision) {
    PrecisionScope scope(precision + 10);
    if (n == 2) {
        if (k % 2 == 0) return Complex(Real(2));
        return Complex();
    }
    if (gcd_ll(k, n) != 1) throw NotCoprime(k, n);
    const int symbol = legendre(k, n);
    const Real root = boost::multiprecision::sqrt(Real(n)) * symbol;
    if (n % 4 == 1) return Complex(root);
    return Complex(Real(0), root);
}

ThetaValue discrete_theta(const ThetaParams& params, unsigned precision) {
    const long long n = params.n;
    if (n < 1) throw Error("theta sum needs n >= 1");
    const Rational bn(big(n));
    const Rational c4 = params.tau2 / (4 * bn), c2 = params.tau1 / (2 * bn), c1 = params.z / bn;
    Integer den = 1;
    for (const Rational* c : {&c4, &c2, &c1}) den = lcm(den, Integer(c->get_den()));

    ThetaValue out;
    if (den <= kMaxExactThetaConductor) {
        const long long d = den.get_si();
        std::vector<Rational> counts(d, 0);
        for (long long s = 1; s <= n; ++s) {
            const Integer s1 = big(s), s2 = s1 * s1, s4 = s2 * s2;
            const Rational r = c4 * s4 + c2 * s2 + c1 * s1;  // phase / 2 pi, denominator divides d
            const Integer e = r.get_num() * (den / r.get_den());
            Integer red = e % den;
            if (red < 0) red += den;
            counts[red.get_si()] += 1;
        }
        out.exact = CyclotomicElement::from_exponent_counts(static_cast<int>(d), counts);
        out.value = out.exact->embed(precision);
        return out;
    }
    PrecisionScope scope(precision + 10);
    const Real two_pi = 2 * pi();
    for (long long s = 1; s <= n; ++s) {
        const Integer s1 = big(s), s2 = s1 * s1, s4 = s2 * s2;
        Rational r = c4 * s4 + c2 * s2 + c1 * s1;
        // only the fractional part matters
        Integer whole;
        mpz_fdiv_q(whole.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        r -= whole;
        const Real angle = two_pi * to_real(r);
        out.value += Complex(boost::multiprecision::cos(angle), boost::multiprecision::sin(angle));
    }
    return out;
}

WaveFunction dft_forward(const WaveFunction& psi) {
    const long long n = psi.size();
    const int conductor = static_cast<int>(lcm_ll(n, psi.conductor()));
    std::vector<CyclotomicElement> out;
    for (long long p = 1; p <= n; ++p) {
        CyclotomicElement acc(0, conductor);
        for (long long q = 1; q <= n; ++q) acc += CyclotomicElement::zeta(static_cast<int>(n), p * q % n) * psi.at(q);
        out.push_back(acc.promoted(conductor));
    }
    return WaveFunction(std::move(out));
}

WaveFunction dft_inverse(const WaveFunction& psi_tilde) {
    const long long n = psi_tilde.size();
    const int conductor = static_cast<int>(lcm_ll(n, psi_tilde.conductor()));
    const CyclotomicElement inv_n(Rational(1, static_cast<long>(n)));
    std::vector<CyclotomicElement> out;
    for (long long q = 1; q <= n; ++q) {
        CyclotomicElement acc(0, conductor);
        for (long long p = 1; p <= n; ++p)
            acc += CyclotomicElement::zeta(static_cast<int>(n), mod(-p * q, n)) * psi_tilde.at(p);
        out.push_back((inv_n * acc).promoted(conductor));
    }
    return WaveFunction(std::move(out));
}

}  // namespace galq
