#pragma once

#include <vector>

#include "galq/bigfloat.hpp"
#include "galq/quantize.hpp"

namespace galq {

using ComplexMatrix = std::vector<std::vector<Complex>>;
using ComplexVector = std::vector<Complex>;

ExactMatrix identity_matrix(std::size_t n, int conductor);
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix scale(const ExactMatrix& a, const CyclotomicElement& c);
CyclotomicElement trace(const ExactMatrix& a);

// Basis of {x : A x = 0} over Q(zeta_N), one vector per free column of the
// reduced row echelon form; each has a 1 in its free column.
std::vector<std::vector<CyclotomicElement>> exact_nullspace(const ExactMatrix& a);
std::size_t exact_rank(const ExactMatrix& a);

ComplexMatrix embed_matrix(const ExactMatrix& a, unsigned precision);
// Null space of a complex matrix; pivots with modulus <= tol are treated as zero.
std::vector<ComplexVector> numeric_nullspace(ComplexMatrix a, const Real& tol);
ComplexVector multiply(const ComplexMatrix& a, const ComplexVector& x);
Real inf_norm(const ComplexMatrix& a);
Real inf_norm(const ComplexVector& x);

// Rows reduced from the last column backwards: each vector ends in 1 at a column
// where all the others vanish. Spans are preserved.
std::vector<ComplexVector> trailing_echelon(std::vector<ComplexVector> basis, const Real& tol);
std::vector<std::vector<CyclotomicElement>> trailing_echelon(std::vector<std::vector<CyclotomicElement>> basis);

// Whether v lies in span(basis), by comparing numeric ranks at `tol`.
bool in_span(const std::vector<ComplexVector>& basis, const ComplexVector& v, const Real& tol);

}  // namespace galq
