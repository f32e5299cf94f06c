#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace galq {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical: gcd(|p|, q) = 1, q > 0

// gmpxx has no long long overloads; long is 64-bit on the supported targets.
static_assert(sizeof(long) == sizeof(long long));
inline Integer big(long long v) { return Integer(static_cast<long>(v)); }

// Fixed textual form "p/q", also for integers ("3/1"), so output files are byte-stable.
std::string to_string(const Rational& r);

// Accepts "p/q" or "p" (optional sign). Throws galq::Error on malformed input or q = 0.
Rational parse_rational(std::string_view text);

// Floor modulus into [0, n).
inline long long mod(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

// Symmetric representative of a mod n in (-n/2, n/2].
inline long long symmetric_rep(long long a, long long n) {
    long long r = mod(a, n);
    return (2 * r > n) ? r - n : r;
}

}  // namespace galq
