#pragma once

#include <stdexcept>
#include <string>

namespace galq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

class ConductorMismatch : public Error {
public:
    ConductorMismatch(int lhs, int rhs)
        : Error("conductor mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class InvalidAutomorphism : public Error {
public:
    InvalidAutomorphism(long long k, int conductor)
        : Error("exponent " + std::to_string(k) + " is not a unit mod " + std::to_string(conductor)) {}
};

// g^n must be +1 or -1 for g to serve as a path-integral base on Z_n.
class InvalidBase : public Error {
public:
    using Error::Error;
};

// 2 q'' = -V'(q) does not determine q(t+1) uniquely modulo n.
class NoUniqueStep : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, int iterations)
        : Error(what + " (after " + std::to_string(iterations) + " iterations)"), iterations_(iterations) {}
    int iterations() const noexcept { return iterations_; }

private:
    int iterations_;
};

class NotPrime : public Error {
public:
    explicit NotPrime(long long p) : Error(std::to_string(p) + " is not an odd prime") {}
};

class NotCoprime : public Error {
public:
    NotCoprime(long long a, long long n)
        : Error("gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1") {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace galq
