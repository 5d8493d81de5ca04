#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "baire/name_eval.hpp"

namespace baire {

// A total continuous map on names, with an explicit word-level approximation:
// applyWord(u) is the part of apply(q)'s digit sequence determined by the
// prefix u alone (digit formulas abort on reads past u, so word and stream
// forms agree digit for digit).
class Transformer {
 public:
  struct Impl {
    virtual ~Impl() = default;
    virtual Stream applyS(const Stream& q) const = 0;
    virtual std::string label() const = 0;
    // input digits that may influence output digit n; 0 = unspecified
    virtual std::uint64_t modulus(std::uint64_t) const { return 0; }
  };

  explicit Transformer(std::shared_ptr<const Impl> i)
      : impl_(std::move(i)), memo_(std::make_shared<Memo>()) {}

  Stream apply(const Stream& q) const { return impl_->applyS(q); }

  Word applyWord(const Word& u, std::uint64_t cap = 0) const {
    {
      std::lock_guard<std::mutex> lk(memo_->mu);
      auto it = memo_->word.find({u, cap});
      if (it != memo_->word.end()) return it->second;
    }
    Stream out = impl_->applyS(Stream::fromWordArg(u));
    std::uint64_t lim = cap ? cap : limits::kEmitRate * (u.size() + 1);
    Word r;
    for (std::uint64_t j = 0; j < lim; ++j) {
      try {
        r.push_back(out.at(j));
      } catch (const Unavailable&) {
        break;
      }
    }
    std::lock_guard<std::mutex> lk(memo_->mu);
    memo_->word.emplace(std::make_pair(u, cap), r);
    return r;
  }

  Machine machineForm(std::string serialTag = "", std::string payload = "") const {
    auto self = *this;
    return Machine::host(
        impl_->label(), [self](const Word& u) { return self.applyWord(u); },
        /*growing=*/true, [](std::uint64_t L) { return L; }, std::move(serialTag),
        std::move(payload));
  }

  std::string label() const { return impl_->label(); }
  std::uint64_t modulus(std::uint64_t n) const { return impl_->modulus(n); }

 private:
  struct Memo {
    std::mutex mu;
    std::map<std::pair<Word, std::uint64_t>, Word> word;
  };
  std::shared_ptr<const Impl> impl_;
  std::shared_ptr<Memo> memo_;
};

namespace detail {

// --- smn ---------------------------------------------------------------

inline Machine section_machine(const Machine& F, const Stream& q) {
  auto fn = [F, q](const Word& v) {
    return F.apply(interleave_word(q.prefix(v.size()), v));
  };
  bool grow = F.growing();
  auto lm = [F](std::uint64_t L) { return F.lenmod(L); };
  return Machine::host("sect", fn, grow, lm);
}

struct SmnImpl final : Transformer::Impl {
  Machine F;
  explicit SmnImpl(Machine f) : F(std::move(f)) {}
  Stream applyS(const Stream& q) const override {
    return encode_machine(section_machine(F, q));
  }
  std::string label() const override { return "smn"; }
  std::uint64_t modulus(std::uint64_t n) const override {
    std::uint64_t m = 0;
    for (std::uint64_t j = 0; j <= n; ++j)
      m = std::max<std::uint64_t>(m, word_decode_len(nat(j)));
    return m;
  }
};

// --- constant section: Φ_{R(p)}(q) = U(p) -------------------------------

struct ConstSectNameSem final : NameSemantics {
  Stream name, inp;  // even and odd parts of p
  ConstSectNameSem(Stream n, Stream i) : name(std::move(n)), inp(std::move(i)) {}
  Word outAt(std::uint64_t len) const {
    return eval_name(name, Input(inp, /*strict=*/true), limits::slot_budget(len),
                     /*strictName=*/true)
        .output;
  }
  EvalOutcome eval(const Input& x, const Nat& fuel) const override {
    Word m = detail::longest_coded_prefix(x, fuel);
    return {outAt(m.size()), EvalStatus::Progressing, std::nullopt};
  }
};

struct ConstSectImpl final : Transformer::Impl {
  Stream applyS(const Stream& p) const override {
    auto sem = std::make_shared<ConstSectNameSem>(even_part(p), odd_part(p));
    auto gen = [sem](std::uint64_t j) {
      Word v = word_decode(nat(j));
      return cantor_pair(nat(j), word_code(sem->outAt(v.size())));
    };
    return Stream::fromFn(gen, "constsect").withName(sem);
  }
  std::string label() const override { return "constsect"; }
};

// --- d: the name of the function named by the point Φ_r(r) --------------

// Literal digits of d(r) relist the self-application certified at linear
// fuel (slot i reads at most the first i+1 pairs of r), so their moduli stay
// bounded and the machine form of the tower emits digits from short
// prefixes. The name's shortcut semantics additionally exploits structural
// views of r at large fuels; beyond the literal window this over-approximates
// the finite-fuel scan but stays below the denoted limit.
inline EvalOutcome self_apply_lit(const Stream& r, std::uint64_t slot) {
  return eval_name(r, Input(r, /*strict=*/true), nat(slot) + 1, /*strictName=*/true);
}

inline EvalOutcome self_apply_deep(const Stream& r, const Nat& budget) {
  return eval_name(r, Input(r, /*strict=*/true), budget, /*strictName=*/true);
}

struct DNameSem final : NameSemantics {
  static constexpr std::uint64_t kLit = 96;
  // budget ladder saturates, so one deep certification serves all large fuels
  static constexpr std::uint64_t kMax = limits::kBudgetExpCap + 2;
  Stream bare;  // the literal relisting digits (no semantics attached)
  Stream r;
  mutable std::mutex mu;
  mutable std::map<std::uint64_t, Word> deepCache;
  DNameSem(Stream b, Stream rr) : bare(std::move(b)), r(std::move(rr)) {}
  EvalOutcome eval(const Input& x, const Nat& fuel) const override {
    if (fuel <= nat(kLit)) return scan_name(Input(bare, /*strict=*/true), x, fuel);
    std::uint64_t idx = fuel > nat(kMax) ? kMax : to_u64(fuel);
    Word w;
    bool hit = false;
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = deepCache.find(idx);
      if (it != deepCache.end()) {
        w = it->second;
        hit = true;
      }
    }
    if (!hit) {
      w = self_apply_deep(r, limits::slot_budget(idx)).output;
      std::lock_guard<std::mutex> lk(mu);
      deepCache.emplace(idx, w);
    }
    EvalOutcome deep = scan_name(Input(w), x, nat(w.size()));
    EvalOutcome lit = scan_name(Input(bare, /*strict=*/true), x, nat(kLit));
    return deep.output.size() >= lit.output.size() ? deep : lit;
  }
};

struct DApplyImpl final : Transformer::Impl {
  Stream applyS(const Stream& r) const override {
    auto rho = std::make_shared<std::vector<std::uint64_t>>();  // #reals through slot i
    auto gen = [r, rho](std::uint64_t i) -> Nat {
      std::uint64_t before = i == 0 ? 0 : (*rho)[i - 1];
      Word nu = self_apply_lit(r, i).output;
      bool real = nu.size() > before;
      Nat d = real ? nu[before] : Nat(0);
      if (rho->size() == i) rho->push_back(before + (real ? 1 : 0));
      return d;
    };
    Stream bare = Stream::fromFn(gen, "dnode");
    return bare.withName(std::make_shared<DNameSem>(bare, r));
  }
  std::string label() const override { return "dnode"; }
};

// --- e: Φ_{e(p)}(r) = Φ_p(d(r)) ------------------------------------------

inline Machine e_section(const Stream& p) {
  Transformer dT(std::make_shared<DApplyImpl>());
  auto fn = [p, dT](const Word& v) {
    Word dv = dT.applyWord(v);
    Word out =
        eval_name(p, Input(dv), limits::slot_budget(v.size()), /*strictName=*/true).output;
    std::uint64_t cap = limits::kEmitRate * (v.size() + 1);
    if (out.size() > cap) out.resize(cap);
    return out;
  };
  return Machine::host("esect", fn, /*growing=*/true,
                       [](std::uint64_t L) { return L; });
}

struct FixImpl final : Transformer::Impl {
  Stream applyS(const Stream& p) const override {
    Stream e = encode_machine(e_section(p));
    return DApplyImpl{}.applyS(e);
  }
  std::string label() const override { return "fixT"; }
};

// --- parameterized fixed point -------------------------------------------

struct ParamBody {
  enum class Kind { MachineF, Univ, Witness } kind = Kind::MachineF;
  Machine F, H, K;

  static ParamBody ofMachine(Machine f) {
    ParamBody b;
    b.kind = f.node().op == Machine::Op::Univ ? Kind::Univ : Kind::MachineF;
    b.F = std::move(f);
    return b;
  }
  static ParamBody ofWitness(Machine h, Machine k) {
    ParamBody b;
    b.kind = Kind::Witness;
    b.H = std::move(h);
    b.K = std::move(k);
    return b;
  }

  // ⟨renv,q⟩ prefix of length m (reads may abort)
  static Word pairPrefix(const Stream& renv, const Stream& q, std::uint64_t m) {
    Word r;
    r.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i)
      r.push_back(i % 2 == 0 ? renv.at(i / 2) : q.at(i / 2));
    return r;
  }

  // certified prefix of F⟨p',⟨r,q⟩⟩ justified by u ⊑ p' alone
  Word eval(const Word& u, const Stream& renv, const Stream& q) const {
    switch (kind) {
      case Kind::MachineF:
        return F.apply(interleave_word(u, pairPrefix(renv, q, u.size())));
      case Kind::Univ: {
        Stream s = interleave(renv, q);
        return scan_name(Input(u), Input(s, /*strict=*/true), nat(u.size())).output;
      }
      case Kind::Witness: {
        Word y = pairPrefix(renv, q, u.size());
        Word k = K.apply(y);
        Word inner = scan_name(Input(u), Input(k), nat(u.size())).output;
        return H.apply(interleave_word(y, inner));
      }
    }
    return {};
  }
};

// Name of p' ↦ F⟨p',⟨r,q⟩⟩, listing the spine of q-prefixes ahead of the
// global enumeration so that evaluation at q itself certifies quickly.
struct InnerNameSem final : NameSemantics {
  ParamBody body;
  Stream renv, q;
  mutable std::mutex mu;
  mutable std::map<Word, Word> bodyCache;
  InnerNameSem(ParamBody b, Stream r, Stream qq)
      : body(std::move(b)), renv(std::move(r)), q(std::move(qq)) {}

  Word bodyAt(const Word& in) const {
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = bodyCache.find(in);
      if (it != bodyCache.end()) return it->second;
    }
    Word out = body.eval(in, renv, q);
    std::lock_guard<std::mutex> lk(mu);
    bodyCache.emplace(in, out);
    return out;
  }

  Word inputAt(std::uint64_t s) const {
    if (s < limits::kSpineLead) return q.prefix(s);
    std::uint64_t t = s - limits::kSpineLead;
    if (t % 2 == 0) return word_decode(nat(t / 2));
    return q.prefix(limits::kSpineLead + (t - 1) / 2);
  }

  Nat digitAt(std::uint64_t s) const {
    Word in = inputAt(s);
    return cantor_pair(word_code(in), word_code(bodyAt(in)));
  }

  // longest spine prefix length listed among the first `fuel` slots
  static std::uint64_t spineBound(const Nat& fuel) {
    if (fuel <= nat(limits::kSpineLead)) return fuel == 0 ? 0 : to_u64(fuel) - 1;
    // late spine: prefix length kSpineLead + (t-1)/2 at slot kSpineLead + t, t odd
    Nat tcap = fuel - 1 - nat(limits::kSpineLead);
    if (tcap < 1) return limits::kSpineLead - 1;
    Nat tstar = tcap % 2 == 1 ? tcap : tcap - 1;
    Nat lam = nat(limits::kSpineLead) + (tstar - 1) / 2;
    return lam > nat(limits::kWordCap) ? limits::kWordCap : to_u64(lam);
  }

  EvalOutcome eval(const Input& x, const Nat& fuel) const override {
    if (fuel <= 0) return {};
    std::uint64_t spineMax = spineBound(fuel);
    std::uint64_t kappa = 0;
    while (kappa < spineMax) {
      auto d = x.probe(kappa);
      bool qa = true;
      Nat qd;
      try {
        qd = q.at(kappa);
      } catch (const Unavailable&) {
        qa = false;
      }
      if (!d || !qa || *d != qd) break;
      ++kappa;
    }
    Word best = bodyAt(q.prefix(kappa));
    // longest global word within fuel: word_decode(j) sits at slot kSpineLead+2j
    if (fuel > nat(limits::kSpineLead)) {
      Nat gfuel = (fuel - nat(limits::kSpineLead) + 1) / 2;
      Word m = detail::longest_coded_prefix(x, gfuel);
      Word other = bodyAt(m);
      if (other.size() > best.size()) best = other;
    }
    return {best, EvalStatus::Progressing, std::nullopt};
  }
};

inline Stream inner_name(ParamBody body, Stream renv, Stream q) {
  auto sem = std::make_shared<InnerNameSem>(std::move(body), std::move(renv), std::move(q));
  auto gen = [sem](std::uint64_t s) { return sem->digitAt(s); };
  return Stream::fromFn(gen, "inner").withName(sem);
}

inline Machine s_section(const ParamBody& body, const Stream& q) {
  auto fn = [body, q](const Word& v) {
    Stream renv = Stream::fromWordArg(v);
    Stream nm = inner_name(body, renv, q);
    std::uint64_t lim = limits::kEmitRate * (v.size() + 1);
    Word r;
    for (std::uint64_t s = 0; s < lim; ++s) {
      try {
        r.push_back(nm.at(s));
      } catch (const Unavailable&) {
        break;
      }
    }
    return r;
  };
  return Machine::host("ssect", fn, /*growing=*/true,
                       [](std::uint64_t L) { return L; });
}

struct ParamImpl final : Transformer::Impl {
  ParamBody body;
  explicit ParamImpl(ParamBody b) : body(std::move(b)) {}
  Stream applyS(const Stream& q) const override {
    Stream S_q = encode_machine(s_section(body, q));
    Stream e = encode_machine(e_section(S_q));
    Stream TS_q = DApplyImpl{}.applyS(e);
    return interleave(TS_q, q);
  }
  std::string label() const override { return "paramR"; }
};

// --- lifting a growing machine to streams --------------------------------

struct MachineLiftImpl final : Transformer::Impl {
  Machine M;
  explicit MachineLiftImpl(Machine m) : M(std::move(m)) {}
  Stream applyS(const Stream& x) const override {
    Machine M2 = M;
    Stream xs = x;
    auto gen = [M2, xs](std::uint64_t n) -> Nat {
      std::uint64_t L = std::max<std::uint64_t>(M2.lenmod(n + 1), n + 1);
      for (;;) {
        Word w = M2.apply(xs.prefix(L));
        if (w.size() > n) return w[n];
        if (L > limits::kWordCap) throw Unavailable{};
        L = 2 * L + 1;
      }
    };
    return Stream::fromFn(gen, "lift");
  }
  std::string label() const override { return "lift:" + M.node().hostLabel; }
};

struct ComposeImpl final : Transformer::Impl {
  Transformer outer, inner;
  ComposeImpl(Transformer o, Transformer i) : outer(std::move(o)), inner(std::move(i)) {}
  Stream applyS(const Stream& q) const override { return outer.apply(inner.apply(q)); }
  std::string label() const override { return outer.label() + "∘" + inner.label(); }
};

}  // namespace detail

// --- public operations ----------------------------------------------------

// S with Φ_{S(q)}(p) = F⟨q,p⟩ for all q,p.
inline Transformer smn_transform(Machine F) {
  return Transformer(std::make_shared<detail::SmnImpl>(std::move(F)));
}

// R with Φ_{R(p)}(q) = U(p) for all q.
inline Transformer const_section_transformer() {
  return Transformer(std::make_shared<detail::ConstSectImpl>());
}
inline Stream const_section(const Stream& p) { return const_section_transformer().apply(p); }

// T with Φ_{T(p)} = Φ_{Φ_p T(p)} whenever Φ_p is total.
inline Transformer fixpoint_transformer() {
  return Transformer(std::make_shared<detail::FixImpl>());
}
inline Stream fixpoint(const Stream& p) { return fixpoint_transformer().apply(p); }

// R with U(R(q)) = F⟨q,R(q)⟩ for all q.
inline Transformer param_fixpoint(Machine F) {
  return Transformer(
      std::make_shared<detail::ParamImpl>(detail::ParamBody::ofMachine(std::move(F))));
}

inline Transformer param_fixpoint_witness(Machine H, Machine K) {
  return Transformer(std::make_shared<detail::ParamImpl>(
      detail::ParamBody::ofWitness(std::move(H), std::move(K))));
}

inline Transformer lift_machine(Machine M) {
  return Transformer(std::make_shared<detail::MachineLiftImpl>(std::move(M)));
}

inline Transformer compose(Transformer outer, Transformer inner) {
  return Transformer(
      std::make_shared<detail::ComposeImpl>(std::move(outer), std::move(inner)));
}

// G with Φ_{G(q)} total and δ_S-equivalent to Φ_q where the latter converges:
// zeros while the fuel-bounded run of Φ_q stays zero, ones once it shows a
// nonzero digit.
inline Machine name_apply_machine(const Stream& q) {
  auto fn = [q](const Word& w) {
    return eval_name(q, Input(w), nat(w.size()), /*strictName=*/true).output;
  };
  return Machine::host("nameapply", fn, /*growing=*/false);
}

inline Stream sierpinski_totalizer(const Stream& q) {
  return encode_machine(Machine::zscan(name_apply_machine(q)));
}

struct SierpImpl final : Transformer::Impl {
  Stream applyS(const Stream& q) const override { return sierpinski_totalizer(q); }
  std::string label() const override { return "sierp"; }
};
inline Transformer sierpinski_transformer() {
  return Transformer(std::make_shared<SierpImpl>());
}

}  // namespace baire
