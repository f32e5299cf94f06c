#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galq/galois.hpp"
#include "galq/quantize.hpp"

namespace galq {

enum class EvolutionMode { full, potential_only };

std::string to_string(EvolutionMode mode);
// Accepts "full", "potential_only" and "potential-only".
EvolutionMode parse_mode(const std::string& name);

/// Psi = (psi_{alpha_1}, ..., psi_{alpha_m}); component i is evolved with base roots[i].
struct WaveFamily {
    RootSet rootset;
    std::vector<WaveFunction> components;
    long long time = 0;

    long long size() const { return components.front().size(); }
    friend bool operator==(const WaveFamily& a, const WaveFamily& b) {
        return a.rootset.m == b.rootset.m && a.time == b.time && a.components == b.components;
    }
};

// Every component starts from the same data, promoted to the root-set field.
WaveFamily make_family(const RootSet& roots, const WaveFunction& initial);

// Negative `steps` run backwards. In potential_only mode one forward step is
// psi(q) -> alpha^{-V(q)} psi(q).
WaveFamily evolve_family(const WaveFamily& psi, const PotentialSpec& v, long long steps,
                         EvolutionMode mode = EvolutionMode::full, ExponentLift lift = ExponentLift::symmetric);

struct SymmetricInvariant {
    int k;
    std::vector<CyclotomicElement> values;  // S_k(q) at index q-1
};

// S_1, ..., S_m, the elementary symmetric polynomials of the components at each q.
std::vector<SymmetricInvariant> symmetric_invariants(const WaveFamily& psi);
bool all_rational(const std::vector<SymmetricInvariant>& invariants);

// sigma applied to every amplitude; component i moves to the slot of sigma(alpha_i).
WaveFamily galois_transform(const WaveFamily& psi, const GaloisAutomorphism& sigma);

// sum_q prod_i psi_i(q)
CyclotomicElement normalization_functional(const WaveFamily& psi);

// Scales every component by r^{-1/m} when the functional is a positive rational r
// with a rational m-th root, so that the functional becomes 1.
std::optional<WaveFamily> normalized(const WaveFamily& psi);

// The component for alpha becomes the one for alpha^{-1}; time is negated.
WaveFamily time_reverse(const WaveFamily& psi);

struct PeriodicityReport {
    int m;
    int sign;              // psi(q + m) is compared against sign * psi(q)
    bool holds;            // exact
    double max_deviation;  // max_q |psi(q + m) - sign psi(q)| under the embedding
    std::vector<long long> violations;
};

// Diagnostic only: -1 for even m, +1 for odd m.
PeriodicityReport check_m_periodicity(const WaveFunction& psi, int m);

}  // namespace galq
