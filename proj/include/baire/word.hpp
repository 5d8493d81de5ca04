#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "baire/nat.hpp"

namespace baire {

// A word is a finite tuple of naturals; the empty word is {}.
using Word = std::vector<Nat>;

inline Word word(std::initializer_list<std::uint64_t> ds) {
  Word w;
  w.reserve(ds.size());
  for (auto d : ds) w.push_back(nat(d));
  return w;
}

// u is a prefix of v
inline bool is_prefix(const Word& u, const Word& v) {
  if (u.size() > v.size()) return false;
  return std::equal(u.begin(), u.end(), v.begin());
}

inline bool comparable(const Word& u, const Word& v) {
  return is_prefix(u, v) || is_prefix(v, u);
}

inline Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

inline Word take(const Word& u, std::size_t n) {
  if (n >= u.size()) return u;
  return Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
}

inline Word drop(const Word& u, std::size_t n) {
  if (n >= u.size()) return Word{};
  return Word(u.begin() + static_cast<std::ptrdiff_t>(n), u.end());
}

// Digits of the interleaving ⟨p,q⟩ determined by prefixes p=a, q=b:
// position 2n needs a(n), position 2n+1 needs b(n); result is the longest
// fully determined initial segment.
inline Word interleave_word(const Word& a, const Word& b) {
  std::size_t len = a.size() <= b.size() ? 2 * a.size() : 2 * b.size() + 1;
  Word r;
  r.reserve(len);
  for (std::size_t i = 0; i < len; ++i) r.push_back(i % 2 == 0 ? a[i / 2] : b[i / 2]);
  return r;
}

inline Word evens_word(const Word& u) {
  Word r;
  r.reserve((u.size() + 1) / 2);
  for (std::size_t i = 0; i < u.size(); i += 2) r.push_back(u[i]);
  return r;
}

inline Word odds_word(const Word& u) {
  Word r;
  r.reserve(u.size() / 2);
  for (std::size_t i = 1; i < u.size(); i += 2) r.push_back(u[i]);
  return r;
}

inline bool has_nonzero(const Word& u) {
  for (const auto& d : u)
    if (d != 0) return true;
  return false;
}

inline std::string show_word(const Word& u) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) os << ',';
    if (bit_length(u[i]) > 64)
      os << "#<" << bit_length(u[i]) << "b>";
    else
      os << u[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace baire
