#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baire/eval_core.hpp"
#include "baire/stream.hpp"

namespace baire {

// Digit-level maps used by the `dmap` combinator.
struct DigitFn {
  enum class Kind { Affine, Flip01, Sgn01, Table } kind = Kind::Affine;
  Nat a = 0, b = 1;                          // affine: d ↦ a + b*d
  std::vector<std::pair<Nat, Nat>> entries;  // table, falls back to affine

  Nat operator()(const Nat& d) const {
    switch (kind) {
      case Kind::Affine: return a + b * d;
      case Kind::Flip01: return d == 0 ? Nat(1) : Nat(0);
      case Kind::Sgn01: return d == 0 ? Nat(0) : Nat(1);
      case Kind::Table:
        for (const auto& [k, v] : entries)
          if (k == d) return v;
        return a + b * d;
    }
    return d;
  }

  static DigitFn affine(Nat a0, Nat b0) { return {Kind::Affine, std::move(a0), std::move(b0), {}}; }
  static DigitFn flip01() { return {Kind::Flip01, 0, 1, {}}; }
  static DigitFn sgn01() { return {Kind::Sgn01, 0, 1, {}}; }
  static DigitFn table(std::vector<std::pair<Nat, Nat>> es, Nat a0 = 0, Nat b0 = 1) {
    return {Kind::Table, std::move(a0), std::move(b0), std::move(es)};
  }
};

// An executable monotone word function N* -> N*, described by a closed
// combinator tree (serializable) or by host code (library API only).
class Machine {
 public:
  enum class Op {
    Id, Const, Prepend, Evens, Odds, Sect, Comp, Pairup, DMap,
    Table, Stutter, FirstRep, Univ, ZScan, Host
  };

  struct Node {
    Op op = Op::Id;
    Word w;
    std::optional<StreamDesc> sdesc;  // Sect, when serializable
    Stream sect;                      // Sect source
    std::vector<Machine> kids;
    DigitFn dfn;
    std::vector<Constraint> table;
    std::uint64_t k = 1;
    std::string hostLabel;
    std::function<Word(const Word&)> hostFn;
    std::function<std::uint64_t(std::uint64_t)> hostLenmod;
    bool hostGrowing = false;
    std::string serialTag;      // set by transformer wrappers
    std::string serialPayload;  // JSON payload for serialTag
    // host applications can be expensive (fuel-bounded simulations); results
    // are pure in u, so cache them
    mutable std::mutex cacheMu;
    mutable std::map<Word, Word> cache;
  };

  Machine() : n_(std::make_shared<Node>()) {}
  explicit Machine(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  const Node& node() const { return *n_; }

  Word apply(const Word& u) const {
    const Node& n = *n_;
    switch (n.op) {
      case Op::Id: return u;
      case Op::Const: return n.w;
      case Op::Prepend: return concat(n.w, u);
      case Op::Evens: return evens_word(u);
      case Op::Odds: return odds_word(u);
      case Op::Sect: return interleave_word(n.sect.prefix(u.size()), u);
      case Op::Comp: return n.kids[0].apply(n.kids[1].apply(u));
      case Op::Pairup: return interleave_word(n.kids[0].apply(u), n.kids[1].apply(u));
      case Op::DMap: {
        Word r;
        r.reserve(u.size());
        for (const auto& d : u) r.push_back(n.dfn(d));
        return r;
      }
      case Op::Table: {
        Word best;
        for (const auto& c : n.table)
          if (is_prefix(c.in, u) && c.out.size() > best.size()) best = c.out;
        return best;
      }
      case Op::Stutter: {
        Word r;
        r.reserve(u.size() * n.k);
        for (const auto& d : u)
          for (std::uint64_t i = 0; i < n.k; ++i) r.push_back(d);
        return r;
      }
      case Op::FirstRep: {
        Word r;
        if (!u.empty()) r.assign(u.size(), u[0]);
        return r;
      }
      case Op::Univ: {
        // fuel is the number of graph pairs present in the even part
        Word e = evens_word(u), o = odds_word(u);
        return scan_name(Input(e), Input(o), nat(e.size())).output;
      }
      case Op::ZScan: {
        // 0s until the inner machine first certifies a nonzero digit, 1s after
        std::uint64_t s = u.size() + 1;
        for (std::uint64_t t = 0; t <= u.size(); ++t)
          if (has_nonzero(n.kids[0].apply(take(u, t)))) {
            s = t;
            break;
          }
        std::uint64_t zeros = s < u.size() ? s : u.size();
        Word r;
        r.reserve(u.size());
        for (std::uint64_t i = 0; i < zeros; ++i) r.push_back(0);
        for (std::uint64_t i = zeros; i < u.size(); ++i) r.push_back(1);
        return r;
      }
      case Op::Host: {
        {
          std::lock_guard<std::mutex> lk(n.cacheMu);
          auto it = n.cache.find(u);
          if (it != n.cache.end()) return it->second;
        }
        Word r = n.hostFn(u);  // Unavailable propagates uncached
        std::lock_guard<std::mutex> lk(n.cacheMu);
        n.cache.emplace(u, r);
        return r;
      }
    }
    return {};
  }

  // Does output length grow without bound in input length?
  bool growing() const {
    const Node& n = *n_;
    switch (n.op) {
      case Op::Id: case Op::Prepend: case Op::Evens: case Op::Odds:
      case Op::Sect: case Op::DMap: case Op::Stutter: case Op::FirstRep:
      case Op::ZScan:
        return true;
      case Op::Const: case Op::Table: case Op::Univ: return false;
      case Op::Comp: return n.kids[0].growing() && n.kids[1].growing();
      case Op::Pairup: return n.kids[0].growing() && n.kids[1].growing();
      case Op::Host: return n.hostGrowing;
    }
    return false;
  }

  // Input length that guarantees output length >= L (only meaningful when
  // growing()).
  std::uint64_t lenmod(std::uint64_t L) const {
    const Node& n = *n_;
    switch (n.op) {
      case Op::Id: return L;
      case Op::Prepend: return L > n.w.size() ? L - n.w.size() : 0;
      case Op::Evens: case Op::Odds: return 2 * L;
      case Op::Sect: return (L + 1) / 2 + 1;
      case Op::DMap: case Op::FirstRep: case Op::ZScan: return L;
      case Op::Stutter: return (L + n.k - 1) / n.k;
      case Op::Comp: return n.kids[1].lenmod(n.kids[0].lenmod(L));
      case Op::Pairup: {
        std::uint64_t h = L / 2 + 1;
        std::uint64_t a = n.kids[0].lenmod(h), b = n.kids[1].lenmod(h);
        return a > b ? a : b;
      }
      case Op::Host: return n.hostLenmod ? n.hostLenmod(L) : L;
      default: return L;
    }
  }

  const std::string& serialTag() const { return n_->serialTag; }

  // --- constructors ---
  static Machine identity() { return mk(Op::Id); }
  static Machine constant(Word w) {
    auto m = mk(Op::Const);
    m.mut().w = std::move(w);
    return m;
  }
  static Machine prepend(Word w) {
    auto m = mk(Op::Prepend);
    m.mut().w = std::move(w);
    return m;
  }
  static Machine evens() { return mk(Op::Evens); }
  static Machine odds() { return mk(Op::Odds); }
  static Machine section(StreamDesc d) {
    auto m = mk(Op::Sect);
    m.mut().sect = Stream::fromDesc(d);
    m.mut().sdesc = std::move(d);
    return m;
  }
  static Machine sectionOf(Stream s) {  // host-side, not serializable
    auto m = mk(Op::Sect);
    m.mut().sect = std::move(s);
    return m;
  }
  static Machine compose(Machine f, Machine g) {
    auto m = mk(Op::Comp);
    m.mut().kids = {std::move(f), std::move(g)};
    return m;
  }
  static Machine pairup(Machine a, Machine b) {
    auto m = mk(Op::Pairup);
    m.mut().kids = {std::move(a), std::move(b)};
    return m;
  }
  static Machine dmap(DigitFn f) {
    auto m = mk(Op::DMap);
    m.mut().dfn = std::move(f);
    return m;
  }
  static Machine table(std::vector<Constraint> t) {
    ConstraintSet s;
    for (const auto& c : t)
      if (s.insert(c)) throw std::invalid_argument("inconsistent machine table");
    auto m = mk(Op::Table);
    m.mut().table = std::move(t);
    return m;
  }
  static Machine stutter(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("stutter factor must be positive");
    auto m = mk(Op::Stutter);
    m.mut().k = k;
    return m;
  }
  static Machine firstRep() { return mk(Op::FirstRep); }
  static Machine universal() { return mk(Op::Univ); }
  static Machine zscan(Machine inner) {
    auto m = mk(Op::ZScan);
    m.mut().kids = {std::move(inner)};
    return m;
  }
  static Machine host(std::string label, std::function<Word(const Word&)> fn,
                      bool growing = false,
                      std::function<std::uint64_t(std::uint64_t)> lenmod = nullptr,
                      std::string serialTag = "", std::string serialPayload = "") {
    auto m = mk(Op::Host);
    auto& n = m.mut();
    n.hostLabel = std::move(label);
    n.hostFn = std::move(fn);
    n.hostGrowing = growing;
    n.hostLenmod = std::move(lenmod);
    n.serialTag = std::move(serialTag);
    n.serialPayload = std::move(serialPayload);
    return m;
  }

 private:
  std::shared_ptr<const Node> n_;
  static Machine mk(Op op) {
    auto n = std::make_shared<Node>();
    n->op = op;
    Machine m;
    m.n_ = std::move(n);
    return m;
  }
  Node& mut() { return const_cast<Node&>(*n_); }
};

}  // namespace baire
