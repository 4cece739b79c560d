#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace blowcalc {

/// Unbounded integer used for determinants and related invariants.
using Int = mpz_class;
/// Exact rational, used by the congruence diagonalization.
using Rat = mpq_class;

/// Vertex weights and sequence terms. Kept in a checked 64-bit range
/// (|w| < 2^62); determinant arithmetic is unbounded instead.
using Weight = std::int64_t;

inline constexpr Weight kWeightBound = Weight{1} << 62;

inline Weight checked_weight(Weight w) {
  if (w >= kWeightBound || w <= -kWeightBound)
    throw std::overflow_error("weight out of range");
  return w;
}

inline Weight wadd(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("weight overflow");
  return checked_weight(r);
}

inline Weight wsub(Weight a, Weight b) {
  Weight r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("weight overflow");
  return checked_weight(r);
}

/// Narrow an Int to Weight, throwing when it does not fit.
inline Weight to_weight(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value exceeds weight range");
  return checked_weight(static_cast<Weight>(v.get_si()));
}

}  // namespace blowcalc
