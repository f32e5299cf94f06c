#include "galq/spectra.hpp"

#include <algorithm>

#include "galq/errors.hpp"

namespace galq {

namespace {

unsigned working_digits(unsigned precision) { return precision + 10; }

Real pow10(int e) { return boost::multiprecision::pow(Real(10), e); }

// Orders by real part, then imaginary part, treating |difference| <= tol as equal.
bool complex_less(const Complex& a, const Complex& b, const Real& tol) {
    if (boost::multiprecision::abs(a.re - b.re) > tol) return a.re < b.re;
    if (boost::multiprecision::abs(a.im - b.im) > tol) return a.im < b.im;
    return false;
}

void check_residual(const ComplexMatrix& h, const Complex& lambda, const ComplexVector& v, unsigned precision) {
    ComplexVector hv = multiply(h, v);
    for (std::size_t i = 0; i < v.size(); ++i) hv[i] -= lambda * v[i];
    const Real bound = pow10(-static_cast<int>(precision) + 4) * inf_norm(h);
    if (inf_norm(hv) > bound)
        throw NonConvergence("eigenpair residual " + format_real(inf_norm(hv), 6) + " exceeds " +
                                 format_real(bound, 6) + "; raise the precision",
                             0);
}

}  // namespace

Real cluster_tolerance(unsigned precision) { return pow10(-static_cast<int>(precision) / 2); }

bool approx_equal(const Complex& a, const Complex& b, const Real& tol) { return abs(a - b) <= tol; }

void normalize_last_nonzero(ComplexVector& v, const Real& tol) {
    for (std::size_t k = v.size(); k-- > 0;) {
        if (abs(v[k]) <= tol) continue;
        const Complex inv = Complex(Real(1)) / v[k];
        for (auto& x : v) x *= inv;
        v[k] = Complex(Real(1));
        return;
    }
}

CharPoly char_poly(const ExactMatrix& h) {
    const std::size_t n = h.size();
    int conductor = 1;
    for (const auto& row : h) {
        if (row.size() != n) throw Error("characteristic polynomial needs a square matrix");
        for (const auto& x : row) conductor = static_cast<int>(lcm_ll(conductor, x.conductor()));
    }
    CharPoly p;
    p.coeffs.assign(n + 1, CyclotomicElement(0, conductor));
    p.coeffs[n] = CyclotomicElement(1, conductor);
    // M_k = H M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(H M_k) / k
    ExactMatrix m(n, std::vector<CyclotomicElement>(n, CyclotomicElement(0, conductor)));
    for (std::size_t k = 1; k <= n; ++k) {
        ExactMatrix next = multiply(h, m);
        for (std::size_t i = 0; i < n; ++i) next[i][i] += p.coeffs[n - k + 1];
        m = std::move(next);
        const ExactMatrix hm = multiply(h, m);
        p.coeffs[n - k] = -trace(hm) * CyclotomicElement(Rational(1, static_cast<long>(k)));
    }
    for (auto& c : p.coeffs) c = c.promoted(conductor);
    return p;
}

CharPoly rescale_variable(const CharPoly& p, const CyclotomicElement& c) {
    const int n = p.degree();
    CharPoly out;
    for (int k = 0; k <= n; ++k) out.coeffs.push_back(p.coeffs[k] * c.pow(k - n));
    return out;
}

std::string to_string(const CharPoly& p, const std::string& var) {
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const auto& c = p.coeffs[k];
        if (c.is_zero()) continue;
        std::string term;
        const auto r = c.as_rational();
        const std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (r && *r == 1 && k > 0)
            term = mono;
        else if (r && *r == -1 && k > 0)
            term = "-" + mono;
        else {
            term = r ? (r->get_den() == 1 ? r->get_num().get_str() : to_string(*r)) : "(" + c.str() + ")";
            if (k > 0) term += "*" + mono;
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

Spectrum eigen_solve(const HamiltonianMatrix& h, unsigned precision) {
    if (precision < 15) throw Error("precision must be at least 15 digits");
    const unsigned work = working_digits(precision);
    PrecisionScope scope(work);
    const std::size_t n = h.entries.size();

    Spectrum s{h.base, h.lift, char_poly(h.entries), {}, precision};
    const ComplexMatrix hc = embed_matrix(h.entries, work);
    const Real tol = cluster_tolerance(precision);

    // Exact kernel: algebraic multiplicity from the vanishing low coefficients.
    int zero_mult = 0;
    while (zero_mult <= static_cast<int>(n) && s.charpoly.coeffs[zero_mult].is_zero()) ++zero_mult;
    if (zero_mult > 0) {
        auto kernel = trailing_echelon(exact_nullspace(h.entries));
        Eigenpair zero{Complex(), zero_mult, {}, true};
        for (const auto& v : kernel) {
            ComplexVector e;
            for (const auto& x : v) e.push_back(x.embed(work));
            check_residual(hc, zero.value, e, precision);
            zero.vectors.push_back(std::move(e));
        }
        s.eigen.push_back(std::move(zero));
    }

    // Nonzero part: exact square-free split, numeric roots of each factor.
    std::vector<CyclotomicElement> rest(s.charpoly.coeffs.begin() + zero_mult, s.charpoly.coeffs.end());
    const CycPoly p(rest);
    std::vector<Eigenpair> numeric;
    if (p.degree() > 0) {
        for (const auto& [factor, mult] : squarefree_decomposition(p)) {
            std::vector<Complex> coeffs;
            for (const auto& c : factor.coeffs()) coeffs.push_back(c.embed(work));
            for (auto& root : polynomial_roots(coeffs, work)) {
                auto same = std::find_if(numeric.begin(), numeric.end(),
                                         [&](const Eigenpair& e) { return approx_equal(e.value, root, tol); });
                if (same != numeric.end())
                    same->multiplicity += mult;
                else
                    numeric.push_back({root, mult, {}, false});
            }
        }
    }
    const Real rank_tol = tol * boost::multiprecision::max(Real(1), inf_norm(hc));
    for (auto& e : numeric) {
        ComplexMatrix shifted = hc;
        for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= e.value;
        auto basis = trailing_echelon(numeric_nullspace(shifted, rank_tol), tol);
        if (basis.empty())
            throw NonConvergence("no eigenvector found for an eigenvalue near " + format_real(e.value.re, 10) + " + " +
                                     format_real(e.value.im, 10) + "i; raise the precision",
                                 0);
        for (const auto& v : basis) check_residual(hc, e.value, v, precision);
        e.vectors = std::move(basis);
        s.eigen.push_back(std::move(e));
    }

    std::sort(s.eigen.begin(), s.eigen.end(),
              [&tol](const Eigenpair& a, const Eigenpair& b) { return complex_less(a.value, b.value, tol); });
    return s;
}

Spectrum eigen_solve(const CyclotomicElement& g, const PotentialSpec& v, unsigned precision, ExponentLift lift) {
    return eigen_solve(hamiltonian(g, v, lift), precision);
}

std::vector<Spectrum> rootset_spectra(const RootSet& roots, const PotentialSpec& v, unsigned precision,
                                      ExponentLift lift) {
    std::vector<Spectrum> out;
    for (const auto& alpha : roots.roots) out.push_back(eigen_solve(alpha, v, precision, lift));
    return out;
}

Spectrum conjugate_spectrum(const Spectrum& s) {
    PrecisionScope scope(working_digits(s.precision));
    Spectrum out{s.base.inverse(), s.lift, {}, {}, s.precision};
    for (const auto& c : s.charpoly.coeffs) out.charpoly.coeffs.push_back(c.conj());
    const Real tol = cluster_tolerance(s.precision);
    for (const auto& e : s.eigen) {
        Eigenpair c{conj(e.value), e.multiplicity, {}, e.exact};
        for (const auto& v : e.vectors) {
            ComplexVector w;
            for (const auto& x : v) w.push_back(conj(x));
            c.vectors.push_back(std::move(w));
        }
        out.eigen.push_back(std::move(c));
    }
    std::sort(out.eigen.begin(), out.eigen.end(),
              [&tol](const Eigenpair& a, const Eigenpair& b) { return complex_less(a.value, b.value, tol); });
    return out;
}

std::vector<Complex> total_energies(const std::vector<Spectrum>& spectra, const Real& tol) {
    std::vector<Complex> sums{Complex()};
    for (const auto& s : spectra) {
        std::vector<Complex> next;
        for (const auto& partial : sums)
            for (const auto& e : s.eigen) {
                Complex t = partial + e.value;
                if (std::none_of(next.begin(), next.end(), [&](const Complex& x) { return approx_equal(x, t, tol); }))
                    next.push_back(std::move(t));
            }
        sums = std::move(next);
    }
    std::sort(sums.begin(), sums.end(), [&tol](const Complex& a, const Complex& b) { return complex_less(a, b, tol); });
    return sums;
}

}  // namespace galq
