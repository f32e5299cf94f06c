#pragma once

#include <complex>
#include <random>
#include <vector>

#include "galq/cyclotomic.hpp"
#include "galq/quantize.hpp"

namespace galq::testing {

using cld = std::complex<long double>;

inline cld root_of_unity(long long n, long long k) {
    const long double pi = 3.141592653589793238462643383279502884L;
    const long double a = 2 * pi * static_cast<long double>(((k % n) + n) % n) / static_cast<long double>(n);
    return {std::cos(a), std::sin(a)};
}

// Direct evaluation of the power-basis sum, independent of the library's embedding.
inline cld to_cld(const CyclotomicElement& a) {
    cld acc = 0;
    const auto c = a.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
        acc += static_cast<long double>(c[j].get_d()) * root_of_unity(a.conductor(), static_cast<long long>(j));
    return acc;
}

inline long double cld_abs(cld z) { return std::abs(z); }

class RandomRationals {
public:
    explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

    Rational next(int bound = 9) {
        std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
        Rational r(num(rng_), den(rng_));
        r.canonicalize();
        return r;
    }
    std::vector<Rational> vector(std::size_t n, int bound = 9) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(next(bound));
        return v;
    }
    CyclotomicElement element(int conductor, int bound = 9) {
        return CyclotomicElement(conductor, vector(static_cast<std::size_t>(euler_phi(conductor)), bound));
    }
    WaveFunction wavefunction(long long n, int conductor = 1) {
        std::vector<CyclotomicElement> amps;
        for (long long q = 0; q < n; ++q) amps.push_back(element(conductor));
        return WaveFunction(std::move(amps));
    }
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

}  // namespace galq::testing
