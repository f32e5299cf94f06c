#pragma once

#include <string>
#include <vector>

#include "galq/galois.hpp"
#include "galq/linalg.hpp"
#include "galq/polynomial.hpp"
#include "galq/quantize.hpp"

namespace galq {

/// Monic det(x I - H) with exact coefficients, ascending: coeffs[k] multiplies x^k.
struct CharPoly {
    std::vector<CyclotomicElement> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    CycPoly poly() const { return CycPoly(coeffs); }
};

struct Eigenpair {
    Complex value;
    int multiplicity;                    // algebraic
    std::vector<ComplexVector> vectors;  // eigenspace basis, last nonzero entry = 1
    bool exact;                          // value and vectors came from the exact layer
};

struct Spectrum {
    CyclotomicElement base;
    ExponentLift lift;
    CharPoly charpoly;
    std::vector<Eigenpair> eigen;
    unsigned precision;
};

// Faddeev-LeVerrier recurrence over Q(zeta_N).
CharPoly char_poly(const ExactMatrix& h);
inline CharPoly char_poly(const HamiltonianMatrix& h) { return char_poly(h.entries); }
// The same polynomial in lambda with E = c * lambda, made monic: coefficient k becomes a_k c^{k-n}.
CharPoly rescale_variable(const CharPoly& p, const CyclotomicElement& c);
std::string to_string(const CharPoly& p, const std::string& var = "x");

// Exact characteristic polynomial, exact kernel, numeric nonzero eigenpairs.
// Throws NonConvergence when the residual bound cannot be met at this precision.
Spectrum eigen_solve(const HamiltonianMatrix& h, unsigned precision = 30);
Spectrum eigen_solve(const CyclotomicElement& g, const PotentialSpec& v, unsigned precision = 30,
                     ExponentLift lift = ExponentLift::symmetric);

// One spectrum per root of the set, in root order.
std::vector<Spectrum> rootset_spectra(const RootSet& roots, const PotentialSpec& v, unsigned precision = 30,
                                      ExponentLift lift = ExponentLift::symmetric);

// Spectrum for g^{-1} from that of g (g a root of unity, so g^{-1} = conj(g)).
Spectrum conjugate_spectrum(const Spectrum& s);

// Distinct sums E_1 + ... + E_m, one eigenvalue per spectrum; deduplicated at `tol`.
std::vector<Complex> total_energies(const std::vector<Spectrum>& spectra, const Real& tol);

// Clustering tolerance 10^{-precision/2}.
Real cluster_tolerance(unsigned precision);

// Scales v so its last entry with modulus above tol equals 1.
void normalize_last_nonzero(ComplexVector& v, const Real& tol);

// |E - E'| <= tol for sorting and deduplication.
bool approx_equal(const Complex& a, const Complex& b, const Real& tol);

}  // namespace galq
