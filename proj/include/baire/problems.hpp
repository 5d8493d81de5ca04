#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "baire/transform.hpp"

namespace baire {

// Prefix-monotone: once Accept or Reject, every extension answers the same.
enum class Verdict { Accept, Reject, Unknown };

inline const char* show(Verdict v) {
  switch (v) {
    case Verdict::Accept: return "accept";
    case Verdict::Reject: return "reject";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

// Finitary adjudicator for a multi-valued problem on Baire space: dom answers
// "can a point of dom(f) extend this prefix", graph answers membership of
// extension pairs in graph(f). Accept/Reject are only returned on certified
// evidence valid for every extension.
struct ProblemOracle {
  std::string name;
  std::function<Verdict(const Word&)> dom;
  std::function<Verdict(const Word&, const Word&)> graph;
};

struct SetOracle {
  std::string name;
  std::function<Verdict(const Word&)> adj;
};

struct ProblemBundle {
  ProblemOracle oracle;
  std::optional<Machine> realizer;         // continuous (partial) realizer, when one exists
  std::optional<Transformer> discontinuity;
};

// --- set oracles -----------------------------------------------------------

// Clopen set determined by the first digit: x ∈ A iff x(0) ∈ digits
// (complemented when `complement`).
inline SetOracle first_digit_set(std::set<std::uint64_t> digits, bool complement = false,
                                 std::string label = "first-digit") {
  auto adj = [digits, complement](const Word& u) {
    if (u.empty()) return Verdict::Unknown;
    bool in = u[0].fits_ulong_p() && digits.count(to_u64(u[0])) > 0;
    if (complement) in = !in;
    return in ? Verdict::Accept : Verdict::Reject;
  };
  return {std::move(label), adj};
}

// Clopen set determined by the first k digits via an accepted-prefix table.
inline SetOracle clopen_table(std::uint64_t k, std::vector<Word> accepted,
                              std::string label = "clopen") {
  auto adj = [k, accepted](const Word& u) {
    if (u.size() >= k) {
      Word key = take(u, k);
      for (const auto& a : accepted)
        if (a == key) return Verdict::Accept;
      return Verdict::Reject;
    }
    // any accepted entry still reachable?
    for (const auto& a : accepted)
      if (is_prefix(u, a)) return Verdict::Unknown;
    return Verdict::Reject;
  };
  return {std::move(label), adj};
}

// --- catalog ----------------------------------------------------------------

// id : N^N -> N^N. Equality of streams is never finitely certifiable, so the
// graph adjudicator can only refute.
inline ProblemBundle id_problem() {
  ProblemOracle o;
  o.name = "id";
  o.dom = [](const Word&) { return Verdict::Accept; };
  o.graph = [](const Word& u, const Word& v) {
    std::size_t m = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < m; ++i)
      if (u[i] != v[i]) return Verdict::Reject;
    return Verdict::Unknown;
  };
  ProblemBundle b;
  b.oracle = std::move(o);
  b.realizer = Machine::identity();
  return b;
}

// DIS : p ↦ {q : U(p) ≠ q}. A certified digit of U on the prefix that differs
// from the candidate output is an acceptance certificate; rejection would
// certify q = U(p) exactly and never happens.
inline ProblemBundle dis_problem();

// LPO as the {0,1}-valued map with value 1 iff the input contains a nonzero
// digit; the value is read off the first output digit.
inline ProblemBundle lpo_problem() {
  ProblemOracle o;
  o.name = "lpo";
  o.dom = [](const Word&) { return Verdict::Accept; };
  o.graph = [](const Word& u, const Word& v) {
    if (v.empty()) return Verdict::Unknown;
    if (v[0] > 1) return Verdict::Reject;  // not a {0,1} code
    if (has_nonzero(u)) return v[0] == 1 ? Verdict::Accept : Verdict::Reject;
    return Verdict::Unknown;  // u all zeros so far: value not settled
  };
  ProblemBundle b;
  b.oracle = std::move(o);
  // partial candidate realizer: silent until a nonzero digit is seen, then 1s;
  // diverges on 000... (no continuous realizer exists)
  b.realizer = Machine::host(
      "lpo-scan",
      [](const Word& u) {
        for (std::size_t i = 0; i < u.size(); ++i)
          if (u[i] != 0) {
            Word r;
            r.assign(u.size() - i, Nat(1));
            return r;
          }
        return Word{};
      },
      /*growing=*/false);
  return b;
}

// χ_A : X -> S, value 1 on A; Sierpiński value 1 is certified by any nonzero
// output digit, value 0 never finitely.
inline ProblemBundle chi_problem(const SetOracle& A) {
  ProblemOracle o;
  o.name = "chi:" + A.name;
  o.dom = [](const Word&) { return Verdict::Accept; };
  SetOracle a = A;
  o.graph = [a](const Word& u, const Word& v) {
    if (!has_nonzero(v)) return Verdict::Unknown;
    Verdict m = a.adj(u);
    if (m == Verdict::Accept) return Verdict::Accept;
    if (m == Verdict::Reject) return Verdict::Reject;
    return Verdict::Unknown;
  };
  ProblemBundle b;
  b.oracle = std::move(o);
  // total realizer sound for clopen A: zeros while undecided, ones on Accept
  SetOracle a2 = A;
  b.realizer = Machine::host(
      "chi-scan",
      [a2](const Word& u) {
        Word r;
        r.reserve(u.size());
        bool one = false;
        for (std::size_t t = 1; t <= u.size(); ++t) {
          if (!one && a2.adj(take(u, t)) == Verdict::Accept) one = true;
          r.push_back(one ? 1 : 0);
        }
        return r;
      },
      /*growing=*/true, [](std::uint64_t L) { return L; });
  return b;
}

// B/A with graph (A×B) ∪ (A^c×B^c).
inline ProblemBundle quotient_problem(const SetOracle& A, const SetOracle& B) {
  ProblemOracle o;
  o.name = "quot:" + A.name + ":" + B.name;
  o.dom = [](const Word&) { return Verdict::Accept; };
  SetOracle a = A, bb = B;
  o.graph = [a, bb](const Word& u, const Word& v) {
    Verdict va = a.adj(u), vb = bb.adj(v);
    if (va == Verdict::Unknown || vb == Verdict::Unknown) return Verdict::Unknown;
    return va == vb ? Verdict::Accept : Verdict::Reject;
  };
  ProblemBundle b;
  b.oracle = std::move(o);
  return b;
}

// NRNG : p ↦ {A ∈ 2^N : A ≠ range(p−1)}, where p−1 drops zeros and shifts.
inline ProblemBundle nrng_problem() {
  ProblemOracle o;
  o.name = "nrng";
  o.dom = [](const Word&) { return Verdict::Accept; };
  o.graph = [](const Word& u, const Word& v) {
    for (const auto& d : v)
      if (d > 1) return Verdict::Reject;  // not a point of 2^N
    // decoded range so far: {u(i)-1 : u(i) >= 1}
    for (const auto& d : u) {
      if (d == 0) continue;
      Nat n = d - 1;
      if (n < nat(v.size()) && v[to_u64(n)] == 0) return Verdict::Accept;
    }
    return Verdict::Unknown;
  };
  ProblemBundle b;
  b.oracle = std::move(o);
  return b;
}

// Tf: outside certified dom(f) everything is allowed.
inline ProblemOracle totalize(const ProblemOracle& f) {
  ProblemOracle o;
  o.name = "total:" + f.name;
  o.dom = [](const Word&) { return Verdict::Accept; };
  ProblemOracle g = f;
  o.graph = [g](const Word& u, const Word& v) {
    Verdict gr = g.graph(u, v), dm = g.dom(u);
    if (gr == Verdict::Accept || dm == Verdict::Reject) return Verdict::Accept;
    if (gr == Verdict::Reject && dm == Verdict::Accept) return Verdict::Reject;
    return Verdict::Unknown;
  };
  return o;
}

// f^w = w^{-1} ∘ f ∘ w: digits are word codes, concatenated after decoding.
inline ProblemOracle word_lift(const ProblemOracle& f) {
  auto decodeConcat = [](const Word& u) {
    Word r;
    for (const auto& d : u) {
      Word w = word_decode(d);
      r.insert(r.end(), w.begin(), w.end());
    }
    return r;
  };
  ProblemOracle o;
  o.name = "lift:" + f.name;
  ProblemOracle g = f;
  o.dom = [g, decodeConcat](const Word& u) { return g.dom(decodeConcat(u)); };
  o.graph = [g, decodeConcat](const Word& u, const Word& v) {
    return g.graph(decodeConcat(u), decodeConcat(v));
  };
  return o;
}

// Δ_A : O(X) ⇉ X, U ↦ A Δ U. Input prefixes are name prefixes of χ_U
// realizers; x ∈ U is certified by a nonzero digit of the fuel-bounded run.
inline ProblemOracle delta_problem(const SetOracle& A) {
  ProblemOracle o;
  o.name = "delta:" + A.name;
  o.dom = [](const Word&) { return Verdict::Unknown; };  // "U ≠ A" is not finitely certified
  SetOracle a = A;
  o.graph = [a](const Word& p, const Word& x) {
    bool inU = has_nonzero(eval_name_prefix(p, Input(x), nat(p.size())).output);
    if (!inU) return Verdict::Unknown;
    Verdict va = a.adj(x);
    if (va == Verdict::Reject) return Verdict::Accept;  // x ∈ U \ A ⊆ AΔU
    if (va == Verdict::Accept) return Verdict::Reject;  // x ∈ U ∩ A, not in AΔU
    return Verdict::Unknown;
  };
  return o;
}

// The computable discontinuity function of DIS: D with U(D(q)) = Φ_q(D(q)),
// so no continuous candidate realizer survives its own diagonal input.
inline Transformer dis_discontinuity() { return param_fixpoint(Machine::universal()); }

inline ProblemBundle dis_problem() {
  ProblemOracle o;
  o.name = "dis";
  o.dom = [](const Word&) { return Verdict::Accept; };  // DIS is total
  o.graph = [](const Word& u, const Word& v) {
    Word c = Machine::universal().apply(u);  // certified U-output at fuel tied to |u|
    std::size_t m = std::min(c.size(), v.size());
    for (std::size_t i = 0; i < m; ++i)
      if (c[i] != v[i]) return Verdict::Accept;
    return Verdict::Unknown;  // q = U(p) exactly is never certified
  };
  ProblemBundle b;
  b.oracle = std::move(o);
  b.discontinuity = dis_discontinuity();
  return b;
}

}  // namespace baire
