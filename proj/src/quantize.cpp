#include "galq/quantize.hpp"

#include "galq/errors.hpp"

namespace galq {

WaveFunction::WaveFunction(long long n, int conductor)
    : conductor_(conductor), amps_(static_cast<std::size_t>(n), CyclotomicElement(0, conductor)) {
    if (n < 1) throw Error("wave function needs n >= 1");
}

WaveFunction::WaveFunction(std::vector<CyclotomicElement> amplitudes) : conductor_(1), amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw Error("wave function needs n >= 1");
    for (const auto& a : amps_) conductor_ = static_cast<int>(lcm_ll(conductor_, a.conductor()));
    for (auto& a : amps_) a = a.promoted(conductor_);
}

WaveFunction WaveFunction::delta(long long n, long long q0, int conductor) {
    WaveFunction psi(n, conductor);
    psi.set(q0, CyclotomicElement(1, conductor));
    return psi;
}

WaveFunction WaveFunction::from_rationals(const std::vector<Rational>& values, int conductor) {
    std::vector<CyclotomicElement> amps;
    for (const auto& v : values) amps.emplace_back(v, conductor);
    return WaveFunction(std::move(amps));
}

const CyclotomicElement& WaveFunction::at(long long q) const { return amps_[mod(q - 1, size())]; }

void WaveFunction::set(long long q, CyclotomicElement value) {
    if (value.conductor() != conductor_) {
        const int target = static_cast<int>(lcm_ll(conductor_, value.conductor()));
        if (target != conductor_) *this = promoted(target);
        value = value.promoted(target);
    }
    amps_[mod(q - 1, size())] = std::move(value);
}

WaveFunction WaveFunction::promoted(int conductor) const {
    std::vector<CyclotomicElement> amps;
    for (const auto& a : amps_) amps.push_back(a.promoted(conductor));
    WaveFunction out(std::move(amps));
    out.conductor_ = conductor;
    return out;
}

bool operator==(const WaveFunction& a, const WaveFunction& b) { return a.amps_ == b.amps_; }

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b) {
    if (a.size() != b.size()) throw Error("wave functions of different length");
    std::vector<CyclotomicElement> out;
    for (long long q = 1; q <= a.size(); ++q) out.push_back(a.at(q) + b.at(q));
    return WaveFunction(std::move(out));
}

WaveFunction operator-(const WaveFunction& a, const WaveFunction& b) {
    if (a.size() != b.size()) throw Error("wave functions of different length");
    std::vector<CyclotomicElement> out;
    for (long long q = 1; q <= a.size(); ++q) out.push_back(a.at(q) - b.at(q));
    return WaveFunction(std::move(out));
}

WaveFunction operator*(const CyclotomicElement& c, const WaveFunction& psi) {
    std::vector<CyclotomicElement> out;
    for (const auto& a : psi.amplitudes()) out.push_back(c * a);
    return WaveFunction(std::move(out));
}

std::string to_string(ExponentLift lift) { return lift == ExponentLift::symmetric ? "symmetric" : "integer"; }

ExponentLift parse_lift(const std::string& name) {
    if (name == "symmetric") return ExponentLift::symmetric;
    if (name == "integer") return ExponentLift::integer;
    throw Error("unknown exponent lift '" + name + "' (expected symmetric or integer)");
}

std::vector<std::vector<long long>> LagrangianMatrix::symmetric() const {
    std::vector<std::vector<long long>> out = entries;
    for (auto& row : out)
        for (auto& e : row) e = symmetric_rep(e, n);
    return out;
}

LagrangianMatrix lagrangian_matrix(const PotentialSpec& v) {
    const long long n = v.modulus();
    LagrangianMatrix m{n, std::vector<std::vector<Residue>>(n, std::vector<Residue>(n))};
    for (long long q = 1; q <= n; ++q)
        for (long long qp = 1; qp <= n; ++qp) m.entries[q - 1][qp - 1] = lagrangian(q, qp, v);
    return m;
}

long long kernel_exponent(long long q, long long qp, const PotentialSpec& v, ExponentLift lift) {
    const long long n = v.modulus();
    if (lift == ExponentLift::symmetric) return symmetric_rep(lagrangian(q, qp, v), n);
    Integer e = big((q - qp) * (q - qp)) - v.value_integer(mod(q, n));
    if (!e.fits_slong_p()) throw Error("integer-lift exponent does not fit in 64 bits");
    return e.get_si();
}

long long potential_exponent(long long q, const PotentialSpec& v, ExponentLift lift) {
    const long long n = v.modulus();
    if (lift == ExponentLift::symmetric) return symmetric_rep(v.value(q), n);
    Integer e = v.value_integer(mod(q, n));
    if (!e.fits_slong_p()) throw Error("integer-lift exponent does not fit in 64 bits");
    return e.get_si();
}

int validate_base(const CyclotomicElement& g, long long n) {
    if (n < 1) throw InvalidBase("modulus must be positive");
    if (g.is_zero()) throw InvalidBase("base g = 0 is not invertible");
    CyclotomicElement p = g.pow(n);
    if (p == CyclotomicElement(1)) return +1;
    if (p == CyclotomicElement(-1)) return -1;
    throw InvalidBase("g^" + std::to_string(n) + " = " + p.str() + " is neither +1 nor -1");
}

namespace {

// g^e for an admissible base, using g^{2n} = 1.
class PowerTable {
public:
    PowerTable(const CyclotomicElement& g, long long n) : period_(2 * n) {
        validate_base(g, n);
        table_.reserve(period_);
        CyclotomicElement p(1, g.conductor());
        for (long long k = 0; k < period_; ++k) {
            table_.push_back(p);
            p *= g;
        }
    }
    const CyclotomicElement& operator()(long long e) const { return table_[mod(e, period_)]; }

private:
    long long period_;
    std::vector<CyclotomicElement> table_;
};

WaveFunction apply_kernel(const WaveFunction& psi, const PowerTable& pow, const PotentialSpec& v,
                          ExponentLift lift, int direction) {
    const long long n = v.modulus();
    if (psi.size() != n) throw Error("wave function length does not match the modulus");
    std::vector<CyclotomicElement> out;
    out.reserve(n);
    for (long long q = 1; q <= n; ++q) {
        CyclotomicElement acc;
        for (long long qp = 1; qp <= n; ++qp) {
            const auto& a = psi.at(qp);
            if (a.is_zero()) continue;
            acc += pow(direction * kernel_exponent(q, qp, v, lift)) * a;
        }
        out.push_back(std::move(acc));
    }
    return WaveFunction(std::move(out));
}

}  // namespace

WaveFunction HamiltonianMatrix::apply(const WaveFunction& psi) const {
    if (psi.size() != n) throw Error("wave function length does not match the Hamiltonian");
    std::vector<CyclotomicElement> out;
    for (long long q = 1; q <= n; ++q) {
        CyclotomicElement acc;
        for (long long qp = 1; qp <= n; ++qp) acc += entries[q - 1][qp - 1] * psi.at(qp);
        out.push_back(std::move(acc));
    }
    return WaveFunction(std::move(out));
}

WaveFunction propagate_forward(const WaveFunction& psi, const CyclotomicElement& g, const PotentialSpec& v,
                               ExponentLift lift) {
    return apply_kernel(psi, PowerTable(g, v.modulus()), v, lift, +1);
}

WaveFunction propagate_backward(const WaveFunction& psi, const CyclotomicElement& g, const PotentialSpec& v,
                                ExponentLift lift) {
    return apply_kernel(psi, PowerTable(g, v.modulus()), v, lift, -1);
}

std::vector<long long> xi_range(long long n) {
    std::vector<long long> xs;
    for (long long xi = -((n - 1) / 2); xi <= n / 2; ++xi) xs.push_back(xi);
    return xs;
}

WaveFunction propagate_forward_xi(const WaveFunction& psi, const CyclotomicElement& g, const PotentialSpec& v,
                                  ExponentLift lift) {
    const long long n = v.modulus();
    PowerTable pow(g, n);
    std::vector<CyclotomicElement> out;
    for (long long q = 1; q <= n; ++q) {
        CyclotomicElement acc;
        for (long long xi : xi_range(n)) acc += pow(xi * xi) * psi.at(q - xi);
        out.push_back(pow(-potential_exponent(q, v, lift)) * acc);
    }
    return WaveFunction(std::move(out));
}

HamiltonianMatrix hamiltonian(const CyclotomicElement& g, const PotentialSpec& v, ExponentLift lift) {
    const long long n = v.modulus();
    PowerTable pow(g, n);
    const CyclotomicElement half(Rational(1, 2), g.conductor());
    HamiltonianMatrix h{n, g.conductor(), g, lift, ExactMatrix(n, std::vector<CyclotomicElement>(n))};
    for (long long q = 1; q <= n; ++q)
        for (long long qp = 1; qp <= n; ++qp) {
            const long long e = kernel_exponent(q, qp, v, lift);
            h.entries[q - 1][qp - 1] = half * (pow(e) - pow(-e));
        }
    return h;
}

CyclotomicElement a_sum(const CyclotomicElement& g, long long n, int k) {
    if (k < 0 || k > 3) throw Error("A_k is provided for k = 0..3");
    PowerTable pow(g, n);
    CyclotomicElement acc(0, g.conductor());
    for (long long xi : xi_range(n)) {
        long long w = 1;
        for (int j = 0; j < k; ++j) w *= xi;
        if (w != 0) acc += CyclotomicElement(Rational(big(w)), g.conductor()) * pow(xi * xi);
    }
    return acc;
}

QuantumCoefficients quantum_potential_mass(const CyclotomicElement& g, const PotentialSpec& v, long long q,
                                           ExponentLift lift) {
    const long long n = v.modulus();
    PowerTable pow(g, n);
    const CyclotomicElement g_inv = g.inverse();
    const long long e = potential_exponent(q, v, lift);
    const CyclotomicElement half(Rational(1, 2), g.conductor());
    auto combine = [&](int k) {
        return half * (a_sum(g, n, k) * pow(-e) - a_sum(g_inv, n, k) * pow(e));
    };
    return {combine(0), combine(2)};
}

}  // namespace galq
