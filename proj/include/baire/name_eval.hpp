#pragma once

#include <memory>
#include <utility>

#include "baire/eval_core.hpp"
#include "baire/machine.hpp"

namespace baire {

namespace detail {

// Longest available prefix of x whose word code is < fuel, code-incremental.
// Mirrors exactly which listed pairs (word_decode(j) ↦ ·) with j < fuel apply
// to x in a code-ordered enumeration.
inline Word longest_coded_prefix(const Input& x, const Nat& fuel) {
  if (fuel <= 0) return {};
  if (x.stream()) {
    // cached cumulative codes on the stream itself
    const Stream& s = *x.stream();
    std::uint64_t k = 0;
    while (k < limits::kWordCap) {
      Nat c;
      try {
        c = s.prefixCode(k + 1);
      } catch (const Unavailable&) {
        if (x.isStrict()) throw;
        break;
      }
      if (c >= fuel) break;
      ++k;
    }
    return s.prefix(k);
  }
  Word cur;
  Nat c = 0;  // word_code(cur)
  for (std::uint64_t i = 0; i < limits::kWordCap; ++i) {
    auto d = x.probe(i);
    if (!d) break;
    Nat cn = cantor_pair(c, *d) + 1;
    if (cn >= fuel) break;
    cur.push_back(*d);
    c = std::move(cn);
  }
  return cur;
}

// Name whose pair j is (j, word_code(g(word_decode(j)))): the canonical
// encoding of the graph of g, listed in word_code order.
struct EncNameSem final : NameSemantics {
  Machine g;
  explicit EncNameSem(Machine m) : g(std::move(m)) {}
  EvalOutcome eval(const Input& x, const Nat& fuel) const override {
    Word m = longest_coded_prefix(x, fuel);
    return {g.apply(m), EvalStatus::Progressing, std::nullopt};
  }
};

}  // namespace detail

// The name of g under the representation of continuous functions: a listing
// of the graph pairs of g over all of N*.
inline Stream encode_machine(const Machine& g) {
  auto gen = [g](std::uint64_t j) {
    return cantor_pair(nat(j), word_code(g.apply(word_decode(nat(j)))));
  };
  return Stream::fromFn(gen, "enc:" + std::string("machine"))
      .withName(std::make_shared<detail::EncNameSem>(g));
}

// Fuel-bounded evaluation of the function named by q at x. Library-built
// names carry exact shortcut semantics; arbitrary streams are scanned
// literally (up to the scan cap). `strictName` marks q as a piece of a
// transformer argument: exhausting its digits aborts the enclosing digit
// computation instead of truncating the scan.
inline EvalOutcome eval_name(const Stream& q, const Input& x, const Nat& fuel,
                             bool strictName = false) {
  if (auto ns = q.nameSemantics()) return ns->eval(x, fuel);
  return scan_name(Input(q, strictName), x, fuel);
}

inline EvalOutcome eval_name(const Stream& q, const Stream& x, const Nat& fuel) {
  return eval_name(q, Input(x), fuel);
}

inline EvalOutcome eval_name(const Stream& q, const Word& x, const Nat& fuel) {
  return eval_name(q, Input(x), fuel);
}

// Evaluation against a finite name prefix given as a word.
inline EvalOutcome eval_name_prefix(const Word& qPrefix, const Input& x, const Nat& fuel) {
  return scan_name(Input(qPrefix), x, fuel);
}

// U(⟨q,p⟩) = Φ_q(p)
inline EvalOutcome universal(const Stream& r, const Nat& fuel) {
  return eval_name(even_part(r), Input(odd_part(r)), fuel);
}

}  // namespace baire
