#include "galq/classical.hpp"

#include <algorithm>
#include <string>

#include "galq/errors.hpp"

namespace galq {

PotentialSpec::PotentialSpec(long long n, std::vector<long long> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (n < 1 || n > (1LL << 31)) throw Error("modulus n must lie in [1, 2^31], got " + std::to_string(n));
    for (auto& a : coeffs_) a = mod(a, n_);
}

int PotentialSpec::degree() const noexcept {
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
        if (coeffs_[k] != 0) return k;
    return -1;
}

Residue PotentialSpec::value(Residue q) const {
    q = mod(q, n_);
    long long acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = (acc * q + coeffs_[k]) % n_;
    return acc;
}

Integer PotentialSpec::value_integer(long long q) const {
    Integer acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * big(q) + big(coeffs_[k]);
    return acc;
}

Residue PotentialSpec::derivative(Residue q) const {
    q = mod(q, n_);
    long long acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) acc = (acc * q + mod(static_cast<long long>(k) % n_ * coeffs_[k], n_)) % n_;
    return acc;
}

std::optional<std::vector<long long>> PotentialSpec::half_derivative_coeffs() const {
    std::vector<long long> half;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        long long c = static_cast<long long>(k) * coeffs_[k];
        if (c % 2 != 0) return std::nullopt;
        half.push_back(mod(c / 2, n_));
    }
    return half;
}

namespace {

long long eval_mod(const std::vector<long long>& c, long long q, long long n) {
    long long acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = (acc * q + c[k]) % n;
    return acc;
}

// c(q) with 2 q'' = -V'(q)  <=>  q'' = -c(q) mod n.
long long half_force(const PotentialSpec& v, Residue q) {
    const long long n = v.modulus();
    if (n % 2 == 1) return v.derivative(q) * ((n + 1) / 2) % n;
    const long long d = v.derivative(q);
    if (d % 2 != 0)
        throw NoUniqueStep("2 q'' = -V'(q) has no solution mod " + std::to_string(n) + ": V'(" +
                           std::to_string(q) + ") = " + std::to_string(d) + " is odd");
    auto half = v.half_derivative_coeffs();
    if (!half)
        throw NoUniqueStep("2 is not invertible mod " + std::to_string(n) +
                           " and V' has odd coefficients, so q(t+1) is only fixed mod n/2");
    return eval_mod(*half, mod(q, n), n);
}

}  // namespace

Residue lagrangian(Residue q_curr, Residue q_prev, const PotentialSpec& v) {
    const long long n = v.modulus();
    const long long d = mod(q_curr - q_prev, n);
    return mod(d * d % n - v.value(q_curr), n);
}

Residue action(const Trajectory& traj) {
    if (traj.states.size() < 2) throw Error("action needs a trajectory with at least two states");
    const long long n = traj.potential.modulus();
    long long s = 0;
    for (std::size_t t = 1; t < traj.states.size(); ++t)
        s = (s + lagrangian(traj.states[t], traj.states[t - 1], traj.potential)) % n;
    return s;
}

Residue eom_residual(Residue q_next, Residue q_curr, Residue q_prev, const PotentialSpec& v) {
    const long long n = v.modulus();
    const long long accel = mod(q_next - 2 * q_curr + q_prev, n);
    return mod(2 * accel + v.derivative(q_curr), n);
}

Residue energy(Residue q_curr, Residue q_prev, const PotentialSpec& v) {
    const long long n = v.modulus();
    const long long d = mod(q_curr - q_prev, n);
    return (d * d + v.value(q_curr)) % n;
}

EnergyValue energy_value(Residue q_curr, Residue q_prev, const PotentialSpec& v) {
    const long long n = v.modulus();
    Integer d = big(mod(q_curr, n) - mod(q_prev, n));
    return {d * d + v.value_integer(mod(q_curr, n)), energy(q_curr, q_prev, v)};
}

Residue energy_difference_expansion(Residue q_next, Residue q_curr, Residue q_prev, const PotentialSpec& v) {
    const long long n = v.modulus();
    q_next = mod(q_next, n);
    q_curr = mod(q_curr, n);
    q_prev = mod(q_prev, n);
    long long kinetic = mod(q_next - q_prev, n) * mod(q_next - 2 * q_curr + q_prev, n) % n;
    // sum_k a_k h_{k-1}(q, q+), h the complete homogeneous symmetric polynomial
    long long bracket = 0;
    const auto& a = v.coeffs();
    for (std::size_t k = 1; k < a.size(); ++k) {
        long long h = 0;
        for (std::size_t j = 0; j < k; ++j) {
            long long term = 1;
            for (std::size_t e = 0; e < j; ++e) term = term * q_curr % n;
            for (std::size_t e = 0; e < k - 1 - j; ++e) term = term * q_next % n;
            h = (h + term) % n;
        }
        bracket = (bracket + a[k] * h) % n;
    }
    return (kinetic + mod(q_next - q_curr, n) * bracket) % n;
}

HamiltonQuantities hamilton_quantities(Residue q_next, Residue q_curr, const PotentialSpec& v) {
    const long long n = v.modulus();
    q_next = mod(q_next, n);
    q_curr = mod(q_curr, n);
    const long long d = q_next - q_curr;
    HamiltonQuantities out;
    out.p_integer = big(2 * d);
    out.p = mod(2 * d, n);
    out.h_integer = big(d) * big(d) + v.value_integer(q_curr);
    if (n % 2 == 1) out.h = (mod(d, n) * mod(d, n) % n + v.value(q_curr)) % n;
    return out;
}

PhaseState step_classical(const PhaseState& s, const PotentialSpec& v) {
    const long long n = v.modulus();
    const long long q = mod(s.q_curr, n);
    return {q, mod(2 * q - s.q_prev - half_force(v, q), n)};
}

PhaseState step_classical_inverse(const PhaseState& s, const PotentialSpec& v) {
    // s = (q(t), q(t+1)) -> (q(t-1), q(t))
    const long long n = v.modulus();
    const long long q = mod(s.q_prev, n);
    return {mod(2 * q - s.q_curr - half_force(v, q), n), q};
}

void require_step_defined(const PotentialSpec& v) {
    for (long long q = 0; q < v.modulus(); ++q) half_force(v, q);
}

Trajectory iterate_classical(const PhaseState& start, const PotentialSpec& v, int steps) {
    const long long n = v.modulus();
    Trajectory traj{{mod(start.q_prev, n), mod(start.q_curr, n)}, v};
    PhaseState s{traj.states[0], traj.states[1]};
    for (int t = 0; t < steps; ++t) {
        s = step_classical(s, v);
        traj.states.push_back(s.q_curr);
    }
    return traj;
}

CycleDecomposition cycle_census_of(long long n, const std::function<PhaseState(const PhaseState&)>& step) {
    const std::size_t total = static_cast<std::size_t>(n * n);
    auto index = [n](const PhaseState& s) { return static_cast<std::size_t>(s.q_prev * n + s.q_curr); };
    auto state = [n](std::size_t i) { return PhaseState{static_cast<long long>(i) / n, static_cast<long long>(i) % n}; };

    std::vector<std::size_t> next(total);
    std::vector<int> indegree(total, 0);
    for (std::size_t i = 0; i < total; ++i) {
        PhaseState s = step(state(i));
        s.q_prev = mod(s.q_prev, n);
        s.q_curr = mod(s.q_curr, n);
        next[i] = index(s);
        ++indegree[next[i]];
    }

    CycleDecomposition out{n, std::all_of(indegree.begin(), indegree.end(), [](int d) { return d == 1; }), {}, {}};

    // 0 = unvisited, 1 = on the current walk, 2 = finished
    std::vector<char> color(total, 0);
    std::vector<long long> cycle_of(total, -1);
    for (std::size_t start = 0; start < total; ++start) {
        if (color[start]) continue;
        std::vector<std::size_t> walk;
        std::size_t i = start;
        while (!color[i]) {
            color[i] = 1;
            walk.push_back(i);
            i = next[i];
        }
        if (color[i] == 1) {
            // closed a new cycle; its smallest member is the representative
            auto it = std::find(walk.begin(), walk.end(), i);
            std::vector<std::size_t> cyc(it, walk.end());
            auto rot = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), rot, cyc.end());
            Orbit orbit{state(cyc.front()), cyc.size(), {}};
            for (auto c : cyc) {
                orbit.members.push_back(state(c));
                cycle_of[c] = static_cast<long long>(out.orbits.size());
            }
            out.orbits.push_back(std::move(orbit));
        }
        for (auto w : walk) color[w] = 2;
    }

    std::sort(out.orbits.begin(), out.orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
    for (std::size_t k = 0; k < out.orbits.size(); ++k)
        for (const auto& m : out.orbits[k].members) cycle_of[index(m)] = static_cast<long long>(k);

    if (!out.bijective) {
        for (std::size_t i = 0; i < total; ++i) {
            if (cycle_of[i] >= 0) continue;
            std::size_t j = i, len = 0;
            while (cycle_of[j] < 0) {
                j = next[j];
                ++len;
            }
            out.tails.push_back({state(i), len, static_cast<std::size_t>(cycle_of[j])});
        }
    }
    return out;
}

CycleDecomposition cycle_census(const PotentialSpec& v) {
    require_step_defined(v);
    return cycle_census_of(v.modulus(), [&v](const PhaseState& s) { return step_classical(s, v); });
}

std::vector<std::pair<Residue, Residue>> trajectory_curve_points(Residue e, const PotentialSpec& v) {
    const long long n = v.modulus();
    std::vector<std::pair<Residue, Residue>> pts;
    for (long long x = 0; x < n; ++x) {
        const long long rhs = mod(4 * mod(e, n) - 4 * v.value(x), n);
        for (long long y = 0; y < n; ++y)
            if (y * y % n == rhs) pts.emplace_back(x, y);
    }
    return pts;
}

}  // namespace galq
