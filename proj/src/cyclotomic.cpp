#include "galq/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "galq/errors.hpp"
#include "galq/galois.hpp"

namespace galq {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

using IntPoly = std::vector<Integer>;  // ascending

// Exact quotient of a by a monic divisor b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

IntPoly cyclotomic_polynomial(int n, std::map<int, IntPoly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d, memo));
    memo[n] = p;
    return p;
}

std::unique_ptr<CyclotomicField> build_field(int n) {
    static std::map<int, IntPoly> memo;  // guarded by the caller's mutex
    auto f = std::make_unique<CyclotomicField>();
    f->conductor = n;
    f->phi = cyclotomic_polynomial(n, memo);
    f->degree = static_cast<int>(f->phi.size()) - 1;
    const int deg = f->degree;
    f->power.assign(n, std::vector<Integer>(deg, 0));
    for (int k = 0; k < n; ++k) {
        if (k < deg) {
            f->power[k][k] = 1;
            continue;
        }
        // zeta^k = zeta * zeta^{k-1}, then fold zeta^deg = -sum phi[j] zeta^j
        const auto& prev = f->power[k - 1];
        Integer top = prev[deg - 1];
        auto& cur = f->power[k];
        for (int j = deg - 1; j > 0; --j) cur[j] = prev[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (int j = 0; j < deg; ++j) cur[j] -= top * f->phi[j];
    }
    return f;
}

// sum_k counts[k] zeta^k, counts indexed mod N.
std::vector<Rational> reduce_counts(const CyclotomicField& f, std::span<const Rational> counts) {
    std::vector<Rational> out(f.degree, 0);
    for (int k = 0; k < f.conductor; ++k) {
        const Rational& c = counts[k];
        if (c == 0) continue;
        if (k < f.degree) {
            out[k] += c;
            continue;
        }
        const auto& p = f.power[k];
        for (int j = 0; j < f.degree; ++j)
            if (p[j] != 0) out[j] += c * p[j];
    }
    return out;
}

}  // namespace

const CyclotomicField& CyclotomicField::get(int conductor) {
    if (conductor < 1) throw Error("conductor must be positive, got " + std::to_string(conductor));
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[conductor];
    if (!slot) slot = build_field(conductor);
    return *slot;
}

CyclotomicElement::CyclotomicElement() : conductor_(1), coeffs_(1, 0) {}

CyclotomicElement::CyclotomicElement(const Rational& value, int conductor)
    : conductor_(conductor), coeffs_(CyclotomicField::get(conductor).degree, 0) {
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

CyclotomicElement::CyclotomicElement(int conductor, std::vector<Rational> coeffs) : conductor_(conductor) {
    const auto& f = CyclotomicField::get(conductor);
    for (auto& c : coeffs) c.canonicalize();
    if (static_cast<int>(coeffs.size()) == f.degree) {
        coeffs_ = std::move(coeffs);
        return;
    }
    std::vector<Rational> counts(conductor, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) counts[k % conductor] += coeffs[k];
    coeffs_ = reduce_counts(f, counts);
}

CyclotomicElement CyclotomicElement::zeta(int conductor, long long power) {
    const auto& f = CyclotomicField::get(conductor);
    CyclotomicElement z;
    z.conductor_ = conductor;
    const auto& p = f.power[mod(power, conductor)];
    z.coeffs_.assign(p.begin(), p.end());
    return z;
}

CyclotomicElement CyclotomicElement::from_exponent_counts(int conductor, std::span<const Rational> counts) {
    if (static_cast<int>(counts.size()) != conductor)
        throw Error("exponent count vector must have length equal to the conductor");
    CyclotomicElement z;
    z.conductor_ = conductor;
    z.coeffs_ = reduce_counts(CyclotomicField::get(conductor), counts);
    return z;
}

bool CyclotomicElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<Rational> CyclotomicElement::as_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return std::nullopt;
    return coeffs_[0];
}

CyclotomicElement CyclotomicElement::promoted(int conductor) const {
    if (conductor == conductor_) return *this;
    if (conductor % conductor_ != 0)
        throw ConductorMismatch(conductor_, conductor);
    const long long step = conductor / conductor_;
    std::vector<Rational> counts(conductor, 0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) counts[(j * step) % conductor] += coeffs_[j];
    return from_exponent_counts(conductor, counts);
}

void CyclotomicElement::unify(CyclotomicElement& other) {
    if (conductor_ == other.conductor_) return;
    const int target = static_cast<int>(lcm_ll(conductor_, other.conductor_));
    *this = promoted(target);
    other = other.promoted(target);
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    if (o.conductor_ != conductor_) {
        CyclotomicElement rhs = o;
        unify(rhs);
        return *this += rhs;
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
    if (o.conductor_ != conductor_) {
        CyclotomicElement rhs = o;
        unify(rhs);
        return *this -= rhs;
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
    if (o.conductor_ != conductor_) {
        CyclotomicElement rhs = o;
        unify(rhs);
        return *this *= rhs;
    }
    if (auto r = o.as_rational()) {
        for (auto& c : coeffs_) c *= *r;
        return *this;
    }
    if (auto r = as_rational()) {
        Rational s = *r;
        coeffs_ = o.coeffs_;
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    const int n = conductor_;
    std::vector<Rational> counts(n, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            counts[(i + j) % n] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = reduce_counts(CyclotomicField::get(n), counts);
    return *this;
}

CyclotomicElement& CyclotomicElement::operator/=(const CyclotomicElement& o) {
    return *this *= o.inverse();
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    CyclotomicElement x = a, y = b;
    x.unify(y);
    return x.coeffs_ == y.coeffs_;
}

CyclotomicElement CyclotomicElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (auto r = as_rational()) return CyclotomicElement(1 / *r, conductor_);
    // a^{-1} = (prod_{sigma != id} sigma(a)) / N(a)
    CyclotomicElement cofactor(1, conductor_);
    for (const auto& sigma : GaloisAutomorphism::all(conductor_))
        if (sigma.exponent() != 1) cofactor *= sigma(*this);
    auto norm = (*this * cofactor).as_rational();
    // the norm of a nonzero element is a nonzero rational
    return cofactor * CyclotomicElement(1 / *norm, conductor_);
}

Rational CyclotomicElement::field_norm() const {
    CyclotomicElement prod(1, conductor_);
    for (const auto& sigma : GaloisAutomorphism::all(conductor_)) prod *= sigma(*this);
    return *prod.as_rational();
}

CyclotomicElement CyclotomicElement::pow(long long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    CyclotomicElement result(1, conductor_);
    CyclotomicElement base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

CyclotomicElement CyclotomicElement::conj() const {
    return apply_automorphism(GaloisAutomorphism(conductor_, -1), *this);
}

Complex CyclotomicElement::embed(unsigned precision) const {
    PrecisionScope scope(precision + 10);
    Complex sum;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        Complex term = unit_root(conductor_, static_cast<long long>(j));
        Real c = to_real(coeffs_[j]);
        sum.re += c * term.re;
        sum.im += c * term.im;
    }
    return sum;
}

std::string CyclotomicElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        Rational c = coeffs_[j];
        if (c == 0) continue;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (j == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << "z";
        if (j > 1) os << "^" << j;
    }
    if (first) os << "0";
    return os.str();
}

CyclotomicElement field_arith(const CyclotomicElement& a, const CyclotomicElement& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::sub: return a - b;
        case FieldOp::mul: return a * b;
        case FieldOp::div: return a / b;
    }
    return a;
}

std::optional<Rational> is_rational(const CyclotomicElement& a) { return a.as_rational(); }

Complex embed_complex(const CyclotomicElement& a, unsigned precision) { return a.embed(precision); }

}  // namespace galq
