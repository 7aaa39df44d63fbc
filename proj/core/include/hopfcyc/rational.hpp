#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hopfcyc {

// Ground field: exact rationals in canonical form (gcd(|num|,den)=1, den>=1).
// mpq_class maintains canonical form under arithmetic; string construction
// must be canonicalized explicitly, which rat_parse does.
using Rat = mpq_class;

// Sentinel for "known exactly / no adic truncation".
constexpr int kExactPrecision = 1 << 28;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p" or "p/q" with arbitrary-precision integers. Rejects q == 0.
Rat rat_parse(const std::string& s);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// n! as an exact rational (used by exp/log series and the Upsilon constants).
Rat factorial(unsigned n);

}  // namespace hopfcyc
