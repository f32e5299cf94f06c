#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "galq/rational.hpp"

namespace galq {

using Residue = long long;

/// V(q) = a_0 + a_1 q + a_2 q^2 + ... with coefficients in Z_n.
class PotentialSpec {
public:
    PotentialSpec(long long n, std::vector<long long> coeffs);

    long long modulus() const noexcept { return n_; }
    const std::vector<long long>& coeffs() const noexcept { return coeffs_; }
    // Index of the last nonzero coefficient, -1 for V = 0.
    int degree() const noexcept;

    Residue value(Residue q) const;  // V(q) mod n
    // V evaluated over the integers with canonical coefficients.
    Integer value_integer(long long q) const;
    // Formal derivative a_1 + 2 a_2 q + 3 a_3 q^2 + ... mod n.
    Residue derivative(Residue q) const;
    // Coefficients of V'/2 when every k*a_k is even as an integer; empty otherwise.
    std::optional<std::vector<long long>> half_derivative_coeffs() const;

private:
    long long n_;
    std::vector<long long> coeffs_;
};

struct PhaseState {
    Residue q_prev;
    Residue q_curr;
    friend auto operator<=>(const PhaseState&, const PhaseState&) = default;
};

struct Trajectory {
    std::vector<Residue> states;  // q(0), q(1), ..., q(T)
    PotentialSpec potential;
};

Residue lagrangian(Residue q_curr, Residue q_prev, const PotentialSpec& v);
Residue action(const Trajectory& traj);
Residue eom_residual(Residue q_next, Residue q_curr, Residue q_prev, const PotentialSpec& v);
Residue energy(Residue q_curr, Residue q_prev, const PotentialSpec& v);

// E(t) both as an integer (canonical residues, no reduction) and mod n.
struct EnergyValue {
    Integer integer;
    Residue residue;
};
EnergyValue energy_value(Residue q_curr, Residue q_prev, const PotentialSpec& v);

// Term-by-term right-hand side of the energy-difference expansion
// (q+ - q-)(q+ - 2q + q-) + (q+ - q) sum_k a_k sum_{j<k} q^j q+^{k-1-j}, mod n.
Residue energy_difference_expansion(Residue q_next, Residue q_curr, Residue q_prev, const PotentialSpec& v);

/// p = 2(q(t+1) - q(t)) and H = p^2/4 + V(q). H is reduced mod n only when 4 is a unit.
struct HamiltonQuantities {
    Integer p_integer;  // always even
    Residue p;
    Integer h_integer;  // (q_next - q_curr)^2 + V(q_curr) over the integers
    std::optional<Residue> h;
};
HamiltonQuantities hamilton_quantities(Residue q_next, Residue q_curr, const PotentialSpec& v);

/// One step of T: (q(t-1), q(t)) -> (q(t), q(t+1)) solving 2 q'' = -V'(q) mod n.
/// Throws NoUniqueStep when the congruence does not fix q(t+1).
PhaseState step_classical(const PhaseState& s, const PotentialSpec& v);
/// The inverse of step_classical (time reversal of one step).
PhaseState step_classical_inverse(const PhaseState& s, const PotentialSpec& v);
// Throws NoUniqueStep if step_classical is not defined on all of Z_n x Z_n.
void require_step_defined(const PotentialSpec& v);

Trajectory iterate_classical(const PhaseState& start, const PotentialSpec& v, int steps);

struct Orbit {
    PhaseState representative;  // smallest member
    std::size_t period;
    std::vector<PhaseState> members;  // in time order, starting at the representative
};

// Pre-periodic state of a non-invertible map: it reaches cycle `cycle_index` after `tail_length` steps.
struct TailEntry {
    PhaseState state;
    std::size_t tail_length;
    std::size_t cycle_index;
};

struct CycleDecomposition {
    long long n;
    bool bijective;
    std::vector<Orbit> orbits;     // the cycles of T
    std::vector<TailEntry> tails;  // empty when bijective
};

CycleDecomposition cycle_census(const PotentialSpec& v);
// Census of an arbitrary self-map of Z_n x Z_n.
CycleDecomposition cycle_census_of(long long n, const std::function<PhaseState(const PhaseState&)>& step);

// All (x, y) with y^2 = 4E - 4V(x) mod n, sorted.
std::vector<std::pair<Residue, Residue>> trajectory_curve_points(Residue e, const PotentialSpec& v);

}  // namespace galq
