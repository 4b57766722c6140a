// Exact arbitrary-precision integers for series coefficients and weights.
// Thin alias over GMP's mpz_class; only ring operations and comparisons are
// used anywhere in the library.

#pragma once

#include <gmpxx.h>

#include <string>

namespace qpart {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2u, e);
  return r;
}

inline bool fits_long(const BigInt& v) { return v.fits_slong_p(); }

}  // namespace qpart
