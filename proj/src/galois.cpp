#include "galq/galois.hpp"

#include "galq/errors.hpp"

namespace galq {

GaloisAutomorphism::GaloisAutomorphism(int conductor, long long exponent)
    : conductor_(conductor), exponent_(mod(exponent, conductor)) {
    if (conductor < 1 || gcd_ll(exponent_, conductor) != 1) throw InvalidAutomorphism(exponent, conductor);
}

GaloisAutomorphism GaloisAutomorphism::compose(const GaloisAutomorphism& other) const {
    if (other.conductor_ != conductor_) throw ConductorMismatch(conductor_, other.conductor_);
    return {conductor_, (exponent_ * other.exponent_) % conductor_};
}

GaloisAutomorphism GaloisAutomorphism::inverse() const {
    for (long long k = 1; k <= conductor_; ++k)
        if ((k * exponent_) % conductor_ == 1 % conductor_) return {conductor_, k};
    return *this;  // unreachable for a unit
}

CyclotomicElement GaloisAutomorphism::operator()(const CyclotomicElement& a) const {
    return apply_automorphism(*this, a);
}

std::vector<GaloisAutomorphism> GaloisAutomorphism::all(int conductor) {
    std::vector<GaloisAutomorphism> out;
    for (long long k = 1; k <= conductor; ++k)
        if (gcd_ll(k, conductor) == 1) out.emplace_back(conductor, k);
    return out;
}

CyclotomicElement apply_automorphism(const GaloisAutomorphism& sigma, const CyclotomicElement& a) {
    // Elements of a subfield (rationals in particular) are promoted into sigma's field.
    if (sigma.conductor() % a.conductor() != 0) throw ConductorMismatch(a.conductor(), sigma.conductor());
    const CyclotomicElement x = a.promoted(sigma.conductor());
    const int n = sigma.conductor();
    std::vector<Rational> counts(n, 0);
    const auto c = x.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) counts[(static_cast<long long>(j) * sigma.exponent()) % n] += c[j];
    return CyclotomicElement::from_exponent_counts(n, counts);
}

int RootSet::index_of(const CyclotomicElement& value) const {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == value) return static_cast<int>(i);
    return -1;
}

std::vector<int> RootSet::permutation(const GaloisAutomorphism& sigma) const {
    std::vector<int> perm(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) perm[i] = index_of(sigma(roots[i]));
    return perm;
}

RootSet make_rootset(int m) {
    if (m < 1) throw Error("root set order m must be positive, got " + std::to_string(m));
    RootSet rs;
    rs.m = m;
    if (m % 2 == 1) {
        rs.sign = RootSign::minus;
        rs.conductor = m;
        for (int k = 0; k < m; ++k) rs.roots.push_back(CyclotomicElement::zeta(m, k));
    } else {
        rs.sign = RootSign::plus;
        rs.conductor = 2 * m;
        for (int k = 1; k <= m; ++k) rs.roots.push_back(CyclotomicElement::zeta(2 * m, 2 * k - 1));
    }
    return rs;
}

}  // namespace galq
