#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "baire/problems.hpp"

namespace baire {

enum class Side { I, II };

// Word-move strategy: II sees I's moves through the current round,
// I sees II's moves of the previous rounds.
struct WadgeStrategy {
  Side side = Side::II;
  std::function<Word(const std::vector<Word>&)> move;
  std::string label;
};

// Digit-move strategy.
struct LipschitzStrategy {
  Side side = Side::II;
  std::function<Nat(const std::vector<Nat>&)> move;
  std::string label;
};

struct Run {
  std::vector<Word> xMoves, yMoves;
  Word x, y;  // concatenations
};

enum class GameVerdict { I, II, UnknownAtDepth };

inline const char* show(GameVerdict v) {
  switch (v) {
    case GameVerdict::I: return "I";
    case GameVerdict::II: return "II";
    case GameVerdict::UnknownAtDepth: return "unknown-at-depth";
  }
  return "?";
}

inline Run run_wadge(const WadgeStrategy& sI, const WadgeStrategy& sII, std::uint64_t rounds) {
  Run r;
  for (std::uint64_t i = 0; i < rounds; ++i) {
    Word xi = sI.move(r.yMoves);
    r.xMoves.push_back(xi);
    r.x.insert(r.x.end(), xi.begin(), xi.end());
    Word yi = sII.move(r.xMoves);
    r.yMoves.push_back(yi);
    r.y.insert(r.y.end(), yi.begin(), yi.end());
  }
  return r;
}

// Verdicts only from certified adjudicator evidence: II on graph acceptance
// or domain rejection, I on graph rejection inside the certified domain.
inline GameVerdict adjudicate_run(const Run& r, const ProblemOracle& f, std::uint64_t depth) {
  Word xd = take(r.x, depth), yd = take(r.y, depth);
  Verdict g = f.graph(xd, yd);
  Verdict d = f.dom(xd);
  if (g == Verdict::Accept || d == Verdict::Reject) return GameVerdict::II;
  if (g == Verdict::Reject && d == Verdict::Accept) return GameVerdict::I;
  return GameVerdict::UnknownAtDepth;
}

// --- strategy compilers ------------------------------------------------------

// II plays the increments of a monotone realizer machine along I's
// concatenated moves: v_0...v_i = h(w_0...w_i).
inline WadgeStrategy realizer_to_strategy_II(const Machine& h) {
  WadgeStrategy s;
  s.side = Side::II;
  s.label = "II:machine";
  s.move = [h](const std::vector<Word>& xs) {
    Word now, before;
    for (std::size_t i = 0; i < xs.size(); ++i) now = concat(now, xs[i]);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) before = concat(before, xs[i]);
    Word a = h.apply(before), b = h.apply(now);
    return drop(b, a.size());
  };
  return s;
}

// The realizer recovered from a II-strategy, fed digitwise:
// h(a_0...a_i) = v_0...v_i with v_j = σ((a_0),...,(a_j)).
inline Machine strategy_II_to_realizer(const WadgeStrategy& s) {
  auto fn = [s](const Word& u) {
    Word out;
    std::vector<Word> hist;
    for (const auto& d : u) {
      hist.push_back(Word{d});
      Word v = s.move(hist);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  };
  return Machine::host("II-realizer", fn, /*growing=*/false);
}

// I plays the increments of a machine approximating a discontinuity function,
// evaluated on the pair-coded history
// ⟨code(w_0),code(v_0)⟩⟨code(w_0w_1),code(v_0v_1)⟩...
inline WadgeStrategy disc_to_strategy_I(const Machine& h) {
  WadgeStrategy s;
  s.side = Side::I;
  s.label = "I:disc";
  s.move = [h](const std::vector<Word>& ys) {
    // replay own moves to rebuild the history word
    Word xCum, yCum, hist;
    Word prevOut = h.apply({});  // w_0 = h(ε)
    Word xOut = prevOut;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      yCum = concat(yCum, ys[i]);
      xCum = xOut;
      hist.push_back(cantor_pair(word_code(xCum), word_code(yCum)));
      Word nxt = h.apply(hist);
      if (nxt.size() < xOut.size()) nxt = xOut;  // h monotone; guard
      xOut = nxt;
    }
    if (ys.empty()) return prevOut;
    Word prev = xCum;
    // move i = suffix of h(hist_i) past the previous cumulative x
    return drop(xOut, prev.size());
  };
  return s;
}

// The discontinuity transformer recovered from an I-strategy: play σ against
// the monotone approximation h(u) = certified output of Φ_p on u at fuel |u|.
inline Transformer strategy_I_to_disc(const WadgeStrategy& s) {
  struct Impl final : Transformer::Impl {
    WadgeStrategy sig;
    explicit Impl(WadgeStrategy s0) : sig(std::move(s0)) {}
    Stream applyS(const Stream& p) const override {
      auto sigc = sig;
      Stream pc = p;
      auto gen = [sigc, pc](std::uint64_t n) -> Nat {
        Word x, y;
        std::vector<Word> yHist;
        for (std::uint64_t round = 0;; ++round) {
          Word wi = sigc.move(yHist);
          x = concat(x, wi);
          if (x.size() > n) return x[n];
          if (round > 4 * (n + 1) + 64) throw Unavailable{};
          Word vi = eval_name(pc, Input(x), nat(x.size()), /*strictName=*/true).output;
          if (vi.size() < y.size()) vi = y;
          yHist.push_back(drop(vi, y.size()));
          y = vi;
        }
      };
      return Stream::fromFn(gen, "sigma-disc");
    }
    std::string label() const override { return "strategy-disc"; }
  };
  return Transformer(std::make_shared<Impl>(s));
}

// --- Wadge ↔ Lipschitz translations ------------------------------------------

inline LipschitzStrategy wadge_to_lipschitz(const WadgeStrategy& s) {
  LipschitzStrategy l;
  l.side = s.side;
  l.label = "lip:" + s.label;
  l.move = [s](const std::vector<Nat>& hist) {
    std::vector<Word> ws;
    ws.reserve(hist.size());
    for (const auto& n : hist) ws.push_back(word_decode(n));
    return word_code(s.move(ws));
  };
  return l;
}

inline WadgeStrategy lipschitz_to_wadge(const LipschitzStrategy& l) {
  WadgeStrategy s;
  s.side = l.side;
  s.label = "wadge:" + l.label;
  s.move = [l](const std::vector<Word>& hist) {
    std::vector<Nat> ns;
    ns.reserve(hist.size());
    for (const auto& w : hist) ns.push_back(word_code(w));
    return word_decode(l.move(ns));
  };
  return s;
}

// --- Lipschitz and Gale-Stewart games ----------------------------------------

inline Run run_lipschitz(const LipschitzStrategy& lI, const LipschitzStrategy& lII,
                         std::uint64_t rounds) {
  Run r;
  std::vector<Nat> xs, ys;
  for (std::uint64_t i = 0; i < rounds; ++i) {
    Nat xi = lI.move(ys);
    xs.push_back(xi);
    r.xMoves.push_back(Word{xi});
    r.x.push_back(xi);
    Nat yi = lII.move(xs);
    ys.push_back(yi);
    r.yMoves.push_back(Word{yi});
    r.y.push_back(yi);
  }
  return r;
}

// Payoff set of the Gale-Stewart game matching the Lipschitz game of f:
// the interleaved run lies in the graph of the totalization.
inline SetOracle gs_payoff_from_problem(const ProblemOracle& f) {
  ProblemOracle tf = totalize(f);
  SetOracle a;
  a.name = "gs:" + f.name;
  a.adj = [tf](const Word& r) { return tf.graph(evens_word(r), odds_word(r)); };
  return a;
}

inline std::pair<Run, GameVerdict> run_gale_stewart(const LipschitzStrategy& lI,
                                                    const LipschitzStrategy& lII,
                                                    const SetOracle& A, std::uint64_t rounds) {
  Run r = run_lipschitz(lI, lII, rounds);
  Word inter = interleave_word(r.x, r.y);
  switch (A.adj(inter)) {
    case Verdict::Accept: return {r, GameVerdict::II};
    case Verdict::Reject: return {r, GameVerdict::I};
    case Verdict::Unknown: return {r, GameVerdict::UnknownAtDepth};
  }
  return {r, GameVerdict::UnknownAtDepth};
}

// --- stock opponents ----------------------------------------------------------

inline WadgeStrategy echo_strategy_II() {
  WadgeStrategy s;
  s.side = Side::II;
  s.label = "II:echo";
  s.move = [](const std::vector<Word>& xs) { return xs.empty() ? Word{} : xs.back(); };
  return s;
}

inline WadgeStrategy constant_strategy(Side side, Word w, std::string label = "const") {
  WadgeStrategy s;
  s.side = side;
  s.label = (side == Side::I ? "I:" : "II:") + label;
  s.move = [w](const std::vector<Word>&) { return w; };
  return s;
}

inline WadgeStrategy stall_strategy(Side side) { return constant_strategy(side, {}, "stall"); }

inline WadgeStrategy random_strategy(Side side, std::uint64_t seed, std::uint64_t maxLen = 3,
                                     std::uint64_t maxDigit = 3) {
  WadgeStrategy s;
  s.side = side;
  s.label = (side == Side::I ? "I:random" : "II:random");
  // moves depend on the seed and round only, so replays are deterministic
  s.move = [seed, maxLen, maxDigit](const std::vector<Word>& hist) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (hist.size() + 1)));
    return r.randomWord(maxLen, maxDigit);
  };
  return s;
}

}  // namespace baire
