#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace baire {

// Digits of Baire space are naturals with no a-priori bound; graph codes and
// fuel budgets routinely outgrow machine words, so everything numeric is an
// arbitrary-precision integer.
using Nat = mpz_class;

inline Nat nat(std::uint64_t v) { return Nat(static_cast<unsigned long>(v)); }

inline bool fits_u64(const Nat& n) { return n.fits_ulong_p(); }

inline std::uint64_t to_u64(const Nat& n) {
  if (!n.fits_ulong_p()) throw std::overflow_error("Nat too large for u64: " + n.get_str());
  return static_cast<std::uint64_t>(n.get_ui());
}

// 2^e
inline Nat pow2(std::uint64_t e) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

inline std::size_t bit_length(const Nat& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline Nat parse_nat(const std::string& s) {
  Nat n;
  if (n.set_str(s, 10) != 0 || n < 0) throw std::invalid_argument("not a natural: " + s);
  return n;
}

}  // namespace baire
