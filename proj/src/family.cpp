#include "galq/family.hpp"

#include <algorithm>

#include "galq/errors.hpp"

namespace galq {

std::string to_string(EvolutionMode mode) { return mode == EvolutionMode::full ? "full" : "potential_only"; }

EvolutionMode parse_mode(const std::string& name) {
    if (name == "full") return EvolutionMode::full;
    if (name == "potential_only" || name == "potential-only") return EvolutionMode::potential_only;
    throw Error("unknown evolution mode '" + name + "' (expected full or potential-only)");
}

WaveFamily make_family(const RootSet& roots, const WaveFunction& initial) {
    const int conductor = static_cast<int>(lcm_ll(roots.conductor, initial.conductor()));
    WaveFamily out{roots, {}, 0};
    for (int i = 0; i < roots.m; ++i) out.components.push_back(initial.promoted(conductor));
    return out;
}

namespace {

WaveFunction potential_step(const WaveFunction& psi, const CyclotomicElement& alpha, const PotentialSpec& v,
                            ExponentLift lift, int direction) {
    validate_base(alpha, v.modulus());
    WaveFunction out = psi;
    for (long long q = 1; q <= psi.size(); ++q)
        out.set(q, alpha.pow(-direction * potential_exponent(q, v, lift)) * psi.at(q));
    return out;
}

}  // namespace

WaveFamily evolve_family(const WaveFamily& psi, const PotentialSpec& v, long long steps, EvolutionMode mode,
                         ExponentLift lift) {
    WaveFamily out = psi;
    const int direction = steps >= 0 ? +1 : -1;
    for (std::size_t i = 0; i < out.components.size(); ++i) {
        const CyclotomicElement& alpha = out.rootset.roots[i];
        WaveFunction w = out.components[i];
        for (long long t = 0; t < std::abs(steps); ++t) {
            if (mode == EvolutionMode::potential_only)
                w = potential_step(w, alpha, v, lift, direction);
            else
                w = direction > 0 ? propagate_forward(w, alpha, v, lift) : propagate_backward(w, alpha, v, lift);
        }
        out.components[i] = w.promoted(static_cast<int>(lcm_ll(w.conductor(), out.rootset.conductor)));
    }
    out.time += steps;
    return out;
}

std::vector<SymmetricInvariant> symmetric_invariants(const WaveFamily& psi) {
    const int m = static_cast<int>(psi.components.size());
    const long long n = psi.size();
    std::vector<SymmetricInvariant> out;
    for (int k = 1; k <= m; ++k) out.push_back({k, std::vector<CyclotomicElement>(n)});
    for (long long q = 1; q <= n; ++q) {
        // e[k] after absorbing each component in turn
        std::vector<CyclotomicElement> e(m + 1);
        e[0] = CyclotomicElement(1);
        for (int i = 0; i < m; ++i) {
            const auto& x = psi.components[i].at(q);
            for (int k = i + 1; k >= 1; --k) e[k] += x * e[k - 1];
        }
        for (int k = 1; k <= m; ++k) out[k - 1].values[q - 1] = e[k];
    }
    return out;
}

bool all_rational(const std::vector<SymmetricInvariant>& invariants) {
    for (const auto& s : invariants)
        for (const auto& x : s.values)
            if (!is_rational(x)) return false;
    return true;
}

WaveFamily galois_transform(const WaveFamily& psi, const GaloisAutomorphism& sigma) {
    const auto perm = psi.rootset.permutation(sigma);
    WaveFamily out = psi;
    for (std::size_t i = 0; i < psi.components.size(); ++i) {
        std::vector<CyclotomicElement> amps;
        for (const auto& a : psi.components[i].amplitudes()) amps.push_back(sigma(a));
        out.components[perm[i]] = WaveFunction(std::move(amps)).promoted(psi.components[i].conductor());
    }
    return out;
}

CyclotomicElement normalization_functional(const WaveFamily& psi) {
    CyclotomicElement total;
    for (long long q = 1; q <= psi.size(); ++q) {
        CyclotomicElement prod(1);
        for (const auto& c : psi.components) prod *= c.at(q);
        total += prod;
    }
    return total;
}

namespace {

// Exact m-th root of a positive integer, if any.
std::optional<Integer> integer_root(const Integer& x, int m) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m)) == 0) return std::nullopt;
    return r;
}

}  // namespace

std::optional<WaveFamily> normalized(const WaveFamily& psi) {
    const auto r = is_rational(normalization_functional(psi));
    if (!r || *r <= 0) return std::nullopt;
    const int m = psi.rootset.m;
    const auto num = integer_root(r->get_num(), m);
    const auto den = integer_root(r->get_den(), m);
    if (!num || !den) return std::nullopt;
    const CyclotomicElement factor(Rational(*den, *num));
    WaveFamily out = psi;
    for (auto& c : out.components) c = factor * c;
    return out;
}

WaveFamily time_reverse(const WaveFamily& psi) {
    WaveFamily out = psi;
    for (std::size_t i = 0; i < psi.components.size(); ++i) {
        const int j = psi.rootset.index_of(psi.rootset.roots[i].inverse());
        if (j < 0) throw Error("root set is not closed under inversion");
        out.components[j] = psi.components[i];
    }
    out.time = -psi.time;
    return out;
}

PeriodicityReport check_m_periodicity(const WaveFunction& psi, int m) {
    if (m < 1 || psi.size() % m != 0)
        throw Error("periodicity check needs m to divide n (m = " + std::to_string(m) +
                    ", n = " + std::to_string(psi.size()) + ")");
    PeriodicityReport rep{m, m % 2 == 0 ? -1 : +1, true, 0.0, {}};
    const CyclotomicElement sign(rep.sign);
    for (long long q = 1; q <= psi.size(); ++q) {
        const CyclotomicElement d = psi.at(q + m) - sign * psi.at(q);
        if (d.is_zero()) continue;
        rep.holds = false;
        rep.violations.push_back(q);
        rep.max_deviation = std::max(rep.max_deviation, to_double(abs(d.embed(20))));
    }
    return rep;
}

}  // namespace galq
