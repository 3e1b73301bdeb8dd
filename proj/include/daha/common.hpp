#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace daha {

using Int = mpz_class;
using Rat = mpq_class;

// Arithmetic-domain errors (division by zero, poles, non-invertible input).
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Truncation / window exhaustion in series computations.
struct WindowError : std::runtime_error {
  explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw MathError("integer out of long range");
  return z.get_si();
}

// gcd of two machine ints, nonnegative result
inline long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) { long r = a % b; a = b; b = r; }
  return a;
}

}  // namespace daha
