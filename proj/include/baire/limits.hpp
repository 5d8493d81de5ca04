#pragma once

#include <cstdint>

#include "baire/nat.hpp"

namespace baire::limits {

// Evaluation of a name without structural support scans at most this many
// graph pairs, whatever the fuel says. Library-built names carry exact
// shortcut semantics and are not affected.
inline constexpr std::uint64_t kScanCap = 1u << 16;

// Internal budget ladder for names whose pairs are produced by fuel-bounded
// simulation: a pair justified by k digits of data runs the inner evaluation
// with fuel 2^(2^k). Word codes double their bit length per digit, so this
// keeps certified depth roughly linear in k. Exponents are capped so budgets
// stay manageable bignums.
inline constexpr std::uint64_t kBudgetExpCap = 20;

inline Nat slot_budget(std::uint64_t slot) {
  std::uint64_t e = slot < kBudgetExpCap ? slot : kBudgetExpCap;
  return pow2(std::uint64_t(1) << e);
}

// Generous default evaluation fuel for a wanted certification depth.
inline Nat fuel_for_depth(std::uint64_t depth) {
  std::uint64_t e = depth + 4 < kBudgetExpCap ? depth + 4 : kBudgetExpCap;
  return pow2(std::uint64_t(1) << e);
}

// Pair-emission rate of dovetailed names: a prefix of length L of the
// argument justifies at most kEmitRate*L listed pairs.
inline constexpr std::uint64_t kEmitRate = 4;

// Number of leading slots of a parameterized fixed-point name that list the
// parameter spine before the global enumeration is interleaved in.
inline constexpr std::uint64_t kSpineLead = 48;

// Materialization guard: no single certified word or machine output may
// exceed this many digits.
inline constexpr std::uint64_t kWordCap = 1u << 20;

}  // namespace baire::limits
