#pragma once

#include <vector>

#include "galq/cyclotomic.hpp"

namespace galq {

/// sigma_k : zeta_N -> zeta_N^k, k a unit mod N.
class GaloisAutomorphism {
public:
    GaloisAutomorphism(int conductor, long long exponent);

    int conductor() const noexcept { return conductor_; }
    long long exponent() const noexcept { return exponent_; }

    // (this o other)(x) = this(other(x)); exponents multiply mod N.
    GaloisAutomorphism compose(const GaloisAutomorphism& other) const;
    GaloisAutomorphism inverse() const;

    CyclotomicElement operator()(const CyclotomicElement& a) const;

    friend bool operator==(const GaloisAutomorphism&, const GaloisAutomorphism&) = default;

    // All phi(N) automorphisms, ordered by exponent.
    static std::vector<GaloisAutomorphism> all(int conductor);

private:
    int conductor_;
    long long exponent_;
};

CyclotomicElement apply_automorphism(const GaloisAutomorphism& sigma, const CyclotomicElement& a);

enum class RootSign { plus, minus };  // f(X) = X^m + 1 or X^m - 1

/// The m roots of X^m + 1 (m even) or X^m - 1 (m odd), whose product is 1.
struct RootSet {
    int m;
    RootSign sign;
    int conductor;  // m for odd m, 2m for even m
    std::vector<CyclotomicElement> roots;

    // Index of `value` among the roots, or -1.
    int index_of(const CyclotomicElement& value) const;
    // permutation[i] = index of sigma(roots[i]).
    std::vector<int> permutation(const GaloisAutomorphism& sigma) const;
};

RootSet make_rootset(int m);

}  // namespace galq
