#include <doctest.h>

#include <numeric>

#include "galq/errors.hpp"
#include "galq/numtheory.hpp"
#include "support.hpp"

using namespace galq;
using galq::testing::cld;
using galq::testing::RandomRationals;

namespace {

long long naive_totient(long long n) {
    long long c = 0;
    for (long long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

// sum_s exp(2 pi i r(s)) with r given as an exact rational per s
cld phase_sum(long long n, const std::function<Rational(long long)>& r) {
    cld acc = 0;
    for (long long s = 1; s <= n; ++s) {
        Rational x = r(s);
        Integer whole;
        mpz_fdiv_q(whole.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        x -= whole;
        const long double a = 2 * 3.141592653589793238462643383279502884L * static_cast<long double>(x.get_d());
        acc += cld(std::cos(a), std::sin(a));
    }
    return acc;
}

std::complex<double> to_std(const Complex& z) { return {to_double(z.re), to_double(z.im)}; }

}  // namespace

TEST_CASE("totient and Euler's theorem") {
    for (long long n = 1; n <= 300; ++n) CHECK(totient(n) == naive_totient(n));
    CHECK(totient(1LL << 31) == (1LL << 30));
    CHECK(totient(1000000007) == 1000000006);
    for (long long n = 2; n <= 60; ++n)
        for (long long a = 1; a < n; ++a) {
            if (std::gcd(a, n) == 1) CHECK(euler_theorem_check(a, n));
            else CHECK_THROWS_AS(euler_theorem_check(a, n), NotCoprime);
        }
    CHECK(pow_mod(3, 1000000006, 1000000007) == 1);
    CHECK(pow_mod(-2, 3, 7) == 6);
}

TEST_CASE("primality") {
    std::vector<long long> primes;
    for (long long n = 0; n < 200; ++n)
        if (is_prime(n)) primes.push_back(n);
    CHECK(primes.size() == 46);
    CHECK(primes.front() == 2);
    CHECK(is_prime(2147483647));
    CHECK(!is_prime(2147483649LL));
}

TEST_CASE("Legendre symbol") {
    for (long long p = 3; p < 100; p += 2) {
        if (!is_prime(p)) {
            CHECK_THROWS_AS(legendre(1, p), NotPrime);
            continue;
        }
        std::vector<bool> square(p, false);
        for (long long x = 1; x < p; ++x) square[x * x % p] = true;
        for (long long k = -p; k < 2 * p; ++k) {
            const long long r = mod(k, p);
            const int expected = r == 0 ? 0 : (square[r] ? 1 : -1);
            CHECK(legendre(k, p) == expected);
        }
        for (long long a = 1; a < p; ++a)
            for (long long b = 1; b < p; ++b) CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    }
    CHECK_THROWS_AS(legendre(1, 2), NotPrime);
    CHECK_THROWS_AS(legendre(1, 1), NotPrime);
    CHECK_THROWS_AS(legendre(1, 0), NotPrime);
}

TEST_CASE("Gauss sums against direct summation") {
    for (long long n = 1; n <= 40; ++n)
        for (long long k = -3; k <= n + 2; ++k) {
            const auto g = gauss_sum(k, n);
            const cld direct = phase_sum(n, [&](long long s) -> Rational { return Rational(big(k * s * s), big(n)); });
            CHECK(std::abs(galq::testing::to_cld(g.exact) - direct) < 1e-12L);
            CHECK(std::abs(to_std(g.value) - std::complex<double>(direct.real(), direct.imag())) < 1e-12);
        }
}

TEST_CASE("Gauss sum closed forms") {
    for (long long n = 3; n < 100; n += 2) {
        if (!is_prime(n)) continue;
        PrecisionScope scope(40);
        for (long long k = 1; k < n; ++k) {
            const auto g = gauss_sum(k, n, 30);
            const auto c = gauss_closed_form(k, n, 30);
            CHECK(abs(g.value - c) < Real("1e-20"));
        }
        CHECK_THROWS_AS(gauss_closed_form(n, n), NotCoprime);
    }
    CHECK(gauss_sum(1, 2).exact.is_zero());
    CHECK(gauss_sum(3, 2).exact.is_zero());
    CHECK(gauss_sum(2, 2).exact == CyclotomicElement(2));
    CHECK(gauss_closed_form(1, 2).re == 0);
    CHECK(gauss_closed_form(4, 2).re == 2);
}

TEST_CASE("|G(1, n)| = sqrt(n) for squarefree odd n") {
    for (long long n : {1, 3, 5, 7, 11, 15, 21, 33, 35, 105}) {
        const auto g = gauss_sum(1, n);
        // |G|^2 = G * conj(G) exactly
        CHECK((g.exact * g.exact.conj()) == CyclotomicElement(static_cast<long>(n)));
    }
}

TEST_CASE("discrete theta") {
    PrecisionScope scope(40);
    // quadratic: Theta(0; 2k, 0) = G(k, n)
    for (long long n = 1; n <= 20; ++n)
        for (long long k = 0; k < n; ++k) {
            const auto t = discrete_theta({n, Rational(0), Rational(big(2 * k)), Rational(0)});
            REQUIRE(t.exact.has_value());
            CHECK(*t.exact == gauss_sum(k, n).exact);
        }
    // quartic and linear terms against direct summation
    RandomRationals rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const long long n = rng.uniform(1, 15);
        const ThetaParams p{n, rng.next(5), rng.next(5), rng.next(5)};
        const auto t = discrete_theta(p);
        const Rational bn(big(n));
        const cld direct = phase_sum(n, [&](long long s) -> Rational {
            const Rational s1(big(s));
            return (p.tau2 * s1 * s1 * s1 * s1 / 4 + p.tau1 * s1 * s1 / 2 + p.z * s1) / bn;
        });
        CHECK(std::abs(to_std(t.value) - std::complex<double>(direct.real(), direct.imag())) < 1e-9);
        if (t.exact) CHECK(std::abs(galq::testing::to_cld(*t.exact) - direct) < 1e-9L);
    }
    // large denominators fall back to the numeric sum
    const auto big_den = discrete_theta({7, Rational(1, 997), Rational(0), Rational(0)});
    CHECK(!big_den.exact.has_value());
    const cld direct = phase_sum(7, [](long long s) { return Rational(big(s), big(7 * 997)); });
    CHECK(std::abs(to_std(big_den.value) - std::complex<double>(direct.real(), direct.imag())) < 1e-12);
    CHECK_THROWS_AS(discrete_theta({0, Rational(0), Rational(0), Rational(0)}), Error);
}

TEST_CASE("discrete Fourier transform") {
    // delta at q = n maps to the constant function
    const auto flat = dft_forward(WaveFunction::delta(4, 4));
    for (long long p = 1; p <= 4; ++p) CHECK(flat.at(p) == CyclotomicElement(1));
    // delta at q = 1 maps to e^{2 pi i p / n}
    const auto wave = dft_forward(WaveFunction::delta(5, 1));
    for (long long p = 1; p <= 5; ++p) CHECK(wave.at(p) == CyclotomicElement::zeta(5, p));

    RandomRationals rng(97);
    for (long long n = 1; n <= 12; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            const auto psi = WaveFunction::from_rationals(rng.vector(n));
            const auto back = dft_inverse(dft_forward(psi));
            CHECK(back == psi.promoted(back.conductor()));
            const auto fwd = dft_forward(dft_inverse(psi));
            CHECK(fwd == psi.promoted(fwd.conductor()));
        }
    // cyclotomic data survives too
    const auto psi = WaveFunction({CyclotomicElement::zeta(3), CyclotomicElement(Rational(1, 2)), CyclotomicElement::zeta(4)});
    const auto back = dft_inverse(dft_forward(psi));
    CHECK(back == psi.promoted(back.conductor()));
}
