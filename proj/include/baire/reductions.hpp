#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "baire/problems.hpp"
#include "baire/rng.hpp"

namespace baire {

enum class Flavor { Strong, Plain };

// Weihrauch reduction witness: for strong flavor H∘G∘K realizes f for every
// realizer G of g; plain flavor uses H⟨id, G∘K⟩.
struct Witness {
  Machine H, K;
  Flavor flavor = Flavor::Strong;
};

inline Machine apply_witness(const Witness& w, const Machine& G) {
  Machine gk = Machine::compose(G, w.K);
  if (w.flavor == Flavor::Strong) return Machine::compose(w.H, gk);
  return Machine::compose(w.H, Machine::pairup(Machine::identity(), gk));
}

struct Refutation {
  Word input;
  Word output;
  std::uint64_t sampleIndex = 0;
};

struct VerifyReport {
  std::uint64_t samples = 0;
  std::uint64_t accepts = 0, unknowns = 0, rejects = 0;
  std::optional<Refutation> firstRefutation;
  bool refuted() const { return rejects > 0; }
};

// Finitary check of a reduction witness: sample dom-consistent input
// prefixes, push them through the composed candidate realizer, and ask the
// target oracle. A single graph rejection refutes the witness.
inline VerifyReport verify_reduction(const ProblemOracle& f, const Machine& realizerG,
                                     const Witness& wit, std::uint64_t samples,
                                     std::uint64_t depth, std::uint64_t seed = kDefaultSeed) {
  Machine cand = apply_witness(wit, realizerG);
  Rng rng(seed);
  VerifyReport rep;
  rep.samples = samples;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Word u;
    for (int tries = 0; tries < 64; ++tries) {
      u = rng.randomWord(depth, 3);
      if (f.dom(u) != Verdict::Reject) break;
    }
    Word v = cand.apply(u);
    if (v.size() > depth) v.resize(depth);
    switch (f.graph(u, v)) {
      case Verdict::Accept: ++rep.accepts; break;
      case Verdict::Unknown: ++rep.unknowns; break;
      case Verdict::Reject:
        ++rep.rejects;
        if (!rep.firstRefutation) rep.firstRefutation = Refutation{u, v, i};
        break;
    }
  }
  return rep;
}

// DIS ≤sW f from a discontinuity transformer D of f: K := D ∘ const_section,
// H := id. Every realizer F of f then satisfies F(K(p)) ≠ U(p).
inline Witness disc_to_dis_reduction(const Transformer& D) {
  Transformer K = compose(D, const_section_transformer());
  Witness w;
  w.H = Machine::identity();
  w.K = K.machineForm();
  w.flavor = Flavor::Strong;
  return w;
}

// Discontinuity transformer for f from a witness of DIS ≤W f: the
// parameterized fixed point of q ↦ H⟨R(q), U⟨q, K R(q)⟩⟩ composed with K.
inline Transformer reduction_to_disc(const Witness& wit) {
  Transformer R = param_fixpoint_witness(wit.H, wit.K);
  return compose(lift_machine(wit.K), R);
}

// DIS ≤sW LPO: K scans the universal run for a first nonzero digit; H flips
// the answer into a stream guaranteed to differ from U(p) whenever that is
// an infinite sequence.
inline Witness dis_to_lpo() {
  Witness w;
  w.K = Machine::zscan(Machine::universal());
  w.H = Machine::compose(Machine::dmap(DigitFn::flip01()), Machine::firstRep());
  w.flavor = Flavor::Strong;
  return w;
}

// χ_A ≤sW χ_B from a many-one reduction h with A = h^{-1}(B); numbers are
// coded by the first digit, so the head map suffices and the Sierpiński
// output passes through.
inline Witness many_one_to_sw(const DigitFn& h) {
  Witness w;
  w.K = Machine::dmap(h);
  w.H = Machine::identity();
  w.flavor = Flavor::Strong;
  return w;
}

// Δ_A-realizer from a discontinuity transformer of χ_A (the transformer
// already maps χ_U-realizer names to points of AΔU).
inline Machine disc_to_delta_realizer(const Transformer& D) { return D.machineForm(); }

// Discontinuity transformer of χ_A from a Δ_A-realizer, via the Sierpiński
// totalizer G: D := F ∘ G.
inline Transformer delta_realizer_to_disc(const Machine& R_delta) {
  return compose(lift_machine(R_delta), sierpinski_transformer());
}

}  // namespace baire
