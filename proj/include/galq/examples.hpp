#pragma once

#include <string>
#include <vector>

#include "galq/spectra.hpp"

namespace galq {

/// One compared quantity of a worked example.
struct ExampleCheck {
    int example;
    std::string quantity;
    bool pass;
    std::string expected;
    std::string observed;
    std::string note;  // empty unless there is something to explain
};

struct ExamplesReport {
    unsigned precision;
    std::vector<ExampleCheck> checks;
    std::vector<std::string> diagnostics;  // informational, never affect pass/fail

    bool all_pass() const;
    bool example_pass(int example) const;
    std::string markdown() const;
};

// Eigenvalues within 1e-12 relative (absolute for 0); vectors compared as directions.
inline constexpr double kEigenvalueTolerance = 1e-12;

// The four fixed configurations n = m = 2; n = m = 3; (n, m) = (6, 2); (6, 3), V = q^2,
// run with the default (symmetric) exponent lift.
ExamplesReport reproduce_examples(unsigned precision = 30);

// Expected eigenvalue multiset vs. computed spectrum (multiplicities expanded).
bool eigenvalues_match(const std::vector<Complex>& expected, const Spectrum& s, double rel_tol);
// Whether v is an eigenvector of the spectrum's eigenvalue closest to `value` (within rel_tol).
bool has_eigenvector(const Spectrum& s, const Complex& value, const ComplexVector& v, double rel_tol);
bool complex_sets_match(const std::vector<Complex>& expected, const std::vector<Complex>& observed, double rel_tol);

std::string format_complex(const Complex& z, int digits = 12);

}  // namespace galq
