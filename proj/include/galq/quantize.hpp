#pragma once

#include <string>
#include <vector>

#include "galq/classical.hpp"
#include "galq/cyclotomic.hpp"

namespace galq {

/// psi(q) for q = 1..n (stored at index q-1), all amplitudes in one Q(zeta_N).
class WaveFunction {
public:
    WaveFunction(long long n, int conductor);  // zero function
    WaveFunction(std::vector<CyclotomicElement> amplitudes);

    static WaveFunction delta(long long n, long long q0, int conductor = 1);
    static WaveFunction from_rationals(const std::vector<Rational>& values, int conductor = 1);

    long long size() const noexcept { return static_cast<long long>(amps_.size()); }
    int conductor() const noexcept { return conductor_; }
    // 1-based, cyclic in q.
    const CyclotomicElement& at(long long q) const;
    void set(long long q, CyclotomicElement value);
    const std::vector<CyclotomicElement>& amplitudes() const noexcept { return amps_; }

    WaveFunction promoted(int conductor) const;
    friend bool operator==(const WaveFunction&, const WaveFunction&);

private:
    int conductor_;
    std::vector<CyclotomicElement> amps_;
};

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b);
WaveFunction operator-(const WaveFunction& a, const WaveFunction& b);
WaveFunction operator*(const CyclotomicElement& c, const WaveFunction& psi);

/// How the residue exponent L mod n is turned into an integer power of g.
///  symmetric: representative of L mod n in (-n/2, n/2]
///  integer:   (q - q')^2 - V(q) over the integers, q, q' in 1..n, canonical a_k
enum class ExponentLift { symmetric, integer };

std::string to_string(ExponentLift lift);
ExponentLift parse_lift(const std::string& name);

/// L_{q,q'} = (q - q')^2 - V(q) mod n for q, q' in 1..n.
struct LagrangianMatrix {
    long long n;
    std::vector<std::vector<Residue>> entries;  // canonical residues, row q-1, column q'-1

    Residue at(long long q, long long qp) const { return entries[q - 1][qp - 1]; }
    // Entries in (-n/2, n/2], the form used in printed tables.
    std::vector<std::vector<long long>> symmetric() const;
};

LagrangianMatrix lagrangian_matrix(const PotentialSpec& v);

// Integer exponent used for g^{L_{q,q'}} under the given lift.
long long kernel_exponent(long long q, long long qp, const PotentialSpec& v, ExponentLift lift);
// Integer exponent used for g^{V(q)} under the given lift.
long long potential_exponent(long long q, const PotentialSpec& v, ExponentLift lift);

/// Returns s in {+1, -1} with g^n = s; throws InvalidBase otherwise.
int validate_base(const CyclotomicElement& g, long long n);

using ExactMatrix = std::vector<std::vector<CyclotomicElement>>;

struct HamiltonianMatrix {
    long long n;
    int conductor;
    CyclotomicElement base;
    ExponentLift lift;
    ExactMatrix entries;  // H_{q,q'} at [q-1][q'-1]

    WaveFunction apply(const WaveFunction& psi) const;
};

// Forward step psi'(q) = sum_q' g^{L_{q,q'}} psi(q').
WaveFunction propagate_forward(const WaveFunction& psi, const CyclotomicElement& g, const PotentialSpec& v,
                               ExponentLift lift = ExponentLift::symmetric);
// Backward step: the forward kernel with g replaced by g^{-1}.
WaveFunction propagate_backward(const WaveFunction& psi, const CyclotomicElement& g, const PotentialSpec& v,
                                ExponentLift lift = ExponentLift::symmetric);
// The same forward step written as g^{-V(q)} sum_xi g^{xi^2} psi(q - xi), xi symmetric.
WaveFunction propagate_forward_xi(const WaveFunction& psi, const CyclotomicElement& g, const PotentialSpec& v,
                                  ExponentLift lift = ExponentLift::symmetric);

// H_{q,q'} = (g^{L} - g^{-L}) / 2.
HamiltonianMatrix hamiltonian(const CyclotomicElement& g, const PotentialSpec& v,
                              ExponentLift lift = ExponentLift::symmetric);

// Symmetric xi range {-floor((n-1)/2), ..., floor(n/2)}.
std::vector<long long> xi_range(long long n);

// A_k(g) = sum_xi g^{xi^2} xi^k over the symmetric xi range, k in 0..3.
CyclotomicElement a_sum(const CyclotomicElement& g, long long n, int k);

struct QuantumCoefficients {
    CyclotomicElement potential;      // V_Q(q)
    CyclotomicElement inverse_mass;   // 1 / m_Q(q)
};

QuantumCoefficients quantum_potential_mass(const CyclotomicElement& g, const PotentialSpec& v, long long q,
                                           ExponentLift lift = ExponentLift::symmetric);

}  // namespace galq
