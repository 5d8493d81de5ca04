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

#include "baire/coding.hpp"
#include "baire/limits.hpp"
#include "baire/nat.hpp"
#include "baire/word.hpp"

namespace baire {

// Thrown when a digit is requested that a finite approximation of an
// argument cannot determine yet. Machine forms of transformers stop at the
// first unavailable digit; genuine streams never throw it.
struct Unavailable {};

enum class EvalStatus { Progressing, InconsistentName };

struct EvalOutcome {
  Word output;
  EvalStatus status = EvalStatus::Progressing;
  // indices of the first clashing pair of graph entries, when inconsistent
  std::optional<std::pair<std::uint64_t, std::uint64_t>> clash;
};

class Input;

// Fast-path evaluation semantics for a stream read as a name. Implementations
// must return exactly the supremum over the first `fuel` listed graph pairs
// that apply to x (the literal scan semantics), for any fuel.
struct NameSemantics {
  virtual ~NameSemantics() = default;
  virtual EvalOutcome eval(const Input& x, const Nat& fuel) const = 0;
};

// Serializable stream description: finite prefix followed by a rule.
struct StreamDesc {
  enum class Rule { Cycle, Arith };
  Word prefix;
  Rule rule = Rule::Cycle;
  Word cycleWord = word({0});  // nonempty
  Nat a = 0, b = 0;            // arith: a + b*n

  Nat digit(std::uint64_t n) const {
    if (n < prefix.size()) return prefix[n];
    std::uint64_t m = n - prefix.size();
    if (rule == Rule::Cycle) return cycleWord[m % cycleWord.size()];
    return a + b * nat(m);
  }

  static StreamDesc constant(Nat d) {
    StreamDesc s;
    s.cycleWord = {std::move(d)};
    return s;
  }
  static StreamDesc cycle(Word w, Word pre = {}) {
    if (w.empty()) throw std::invalid_argument("cycle word must be nonempty");
    StreamDesc s;
    s.prefix = std::move(pre);
    s.cycleWord = std::move(w);
    return s;
  }
  static StreamDesc arith(Nat a0, Nat b0, Word pre = {}) {
    StreamDesc s;
    s.prefix = std::move(pre);
    s.rule = Rule::Arith;
    s.a = std::move(a0);
    s.b = std::move(b0);
    return s;
  }
};

// A total, demand-driven digit source over N. Digits are memoized under a
// lock, so queries are stable and concurrent access is safe even for stateful
// generator closures.
class Stream {
  struct Impl {
    std::recursive_mutex mu;
    std::vector<Nat> memo;
    std::vector<Nat> codes;  // codes[k] = word_code(prefix(k)), filled on demand
    std::function<Nat(std::uint64_t)> gen;
    std::string label;

    // structure, for cancellation laws and serialization
    enum class Kind { Opaque, Desc, Interleave, Even, Odd, Merge, Project } kind = Kind::Opaque;
    std::vector<Stream> kids;
    std::optional<StreamDesc> desc;
    std::function<Stream(std::uint64_t)> family;  // Merge
    std::map<std::uint64_t, Stream> famCache;
    std::uint64_t projIndex = 0;

    std::shared_ptr<const NameSemantics> nameSem;
  };
  std::shared_ptr<Impl> p_;

  explicit Stream(std::shared_ptr<Impl> p) : p_(std::move(p)) {}

  static Stream make(std::function<Nat(std::uint64_t)> g, std::string label) {
    auto im = std::make_shared<Impl>();
    im->gen = std::move(g);
    im->label = std::move(label);
    return Stream(std::move(im));
  }

 public:
  Stream() = default;
  bool valid() const { return static_cast<bool>(p_); }

  Nat at(std::uint64_t n) const {
    if (!p_) throw std::logic_error("use of empty Stream");
    std::lock_guard<std::recursive_mutex> lk(p_->mu);
    while (p_->memo.size() <= n) {
      Nat d = p_->gen(static_cast<std::uint64_t>(p_->memo.size()));
      p_->memo.push_back(std::move(d));
    }
    return p_->memo[n];
  }

  // digits 0..n-1
  Word prefix(std::uint64_t n) const {
    Word r;
    r.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) r.push_back(at(i));
    return r;
  }

  // word_code(prefix(k)), cached incrementally
  Nat prefixCode(std::uint64_t k) const {
    if (!p_) throw std::logic_error("use of empty Stream");
    std::lock_guard<std::recursive_mutex> lk(p_->mu);
    if (p_->codes.empty()) p_->codes.push_back(0);
    while (p_->codes.size() <= k) {
      Nat d = at(p_->codes.size() - 1);
      p_->codes.push_back(cantor_pair(p_->codes.back(), d) + 1);
    }
    return p_->codes[k];
  }

  // longest prefix of length <= n that is determined (word-backed arguments
  // may run out of digits)
  Word prefixAvail(std::uint64_t n) const {
    Word r;
    r.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      try {
        r.push_back(at(i));
      } catch (const Unavailable&) {
        break;
      }
    }
    return r;
  }

  const std::string& label() const { return p_->label; }
  std::shared_ptr<const NameSemantics> nameSemantics() const { return p_ ? p_->nameSem : nullptr; }
  const std::optional<StreamDesc>& descriptor() const {
    static const std::optional<StreamDesc> none;
    return p_ ? p_->desc : none;
  }

  Stream withName(std::shared_ptr<const NameSemantics> ns) const {
    return attach(*this, std::move(ns));
  }

  static Stream attach(const Stream& s, std::shared_ptr<const NameSemantics> ns) {
    auto im = std::make_shared<Impl>();
    im->gen = [s](std::uint64_t n) { return s.at(n); };
    im->label = s.p_->label;
    im->kind = s.p_->kind;
    im->kids = s.p_->kids;
    im->desc = s.p_->desc;
    im->family = s.p_->family;
    im->projIndex = s.p_->projIndex;
    im->nameSem = std::move(ns);
    return Stream(std::move(im));
  }

  // --- constructors ---

  static Stream fromFn(std::function<Nat(std::uint64_t)> g, std::string label = "fn") {
    return make(std::move(g), std::move(label));
  }

  static Stream fromDesc(StreamDesc d) {
    auto s = make([d](std::uint64_t n) { return d.digit(n); }, "desc");
    s.p_->kind = Impl::Kind::Desc;
    s.p_->desc = std::move(d);
    return s;
  }

  static Stream constant(Nat d) { return fromDesc(StreamDesc::constant(std::move(d))); }
  static Stream cycle(Word w) { return fromDesc(StreamDesc::cycle(std::move(w))); }
  static Stream arith(Nat a, Nat b) { return fromDesc(StreamDesc::arith(std::move(a), std::move(b))); }

  // finite word viewed as an approximation of an unknown total stream;
  // reading past the end throws Unavailable
  static Stream fromWordArg(Word u, std::string label = "wordarg") {
    return make(
        [u](std::uint64_t n) -> Nat {
          if (n >= u.size()) throw Unavailable{};
          return u[n];
        },
        std::move(label));
  }

  friend Stream interleave(const Stream& a, const Stream& b);
  friend Stream even_part(const Stream& r);
  friend Stream odd_part(const Stream& r);
  friend Stream tuple_merge(std::function<Stream(std::uint64_t)> fam);
  friend Stream tuple_project(const Stream& r, std::uint64_t i);
};

// ⟨p,q⟩(2n)=p(n), ⟨p,q⟩(2n+1)=q(n)
inline Stream interleave(const Stream& a, const Stream& b) {
  auto s = Stream::make(
      [a, b](std::uint64_t n) { return n % 2 == 0 ? a.at(n / 2) : b.at(n / 2); }, "pair");
  s.p_->kind = Stream::Impl::Kind::Interleave;
  s.p_->kids = {a, b};
  return s;
}

inline Stream even_part(const Stream& r) {
  if (r.p_ && r.p_->kind == Stream::Impl::Kind::Interleave) return r.p_->kids[0];
  auto s = Stream::make([r](std::uint64_t n) { return r.at(2 * n); }, "even");
  s.p_->kind = Stream::Impl::Kind::Even;
  s.p_->kids = {r};
  return s;
}

inline Stream odd_part(const Stream& r) {
  if (r.p_ && r.p_->kind == Stream::Impl::Kind::Interleave) return r.p_->kids[1];
  auto s = Stream::make([r](std::uint64_t n) { return r.at(2 * n + 1); }, "odd");
  s.p_->kind = Stream::Impl::Kind::Odd;
  s.p_->kids = {r};
  return s;
}

// merged(⟨i,j⟩) = fam(i)(j)
inline Stream tuple_merge(std::function<Stream(std::uint64_t)> fam) {
  auto s = Stream::make(nullptr, "merge");
  auto impl = s.p_;
  impl->kind = Stream::Impl::Kind::Merge;
  impl->family = std::move(fam);
  std::weak_ptr<Stream::Impl> w = impl;
  impl->gen = [w](std::uint64_t n) -> Nat {
    auto im = w.lock();
    auto [i, j] = cantor_unpair(nat(n));
    std::uint64_t iu = to_u64(i), ju = to_u64(j);
    auto it = im->famCache.find(iu);
    if (it == im->famCache.end()) it = im->famCache.emplace(iu, im->family(iu)).first;
    return it->second.at(ju);
  };
  return s;
}

inline Stream tuple_project(const Stream& r, std::uint64_t i) {
  if (r.p_ && r.p_->kind == Stream::Impl::Kind::Merge) {
    std::lock_guard<std::recursive_mutex> lk(r.p_->mu);
    auto it = r.p_->famCache.find(i);
    if (it == r.p_->famCache.end()) it = r.p_->famCache.emplace(i, r.p_->family(i)).first;
    return it->second;
  }
  auto s = Stream::make(
      [r, i](std::uint64_t j) { return r.at(to_u64(cantor_pair(nat(i), nat(j)))); }, "proj");
  s.p_->kind = Stream::Impl::Kind::Project;
  s.p_->kids = {r};
  s.p_->projIndex = i;
  return s;
}

// An input to name evaluation: a point of Baire space given either as a
// stream or as a finite word prefix. `strict` inputs are pieces of a
// transformer argument: running out of digits aborts the digit being
// computed (Unavailable) instead of merely truncating the answer.
class Input {
  std::optional<Stream> s_;
  Word w_;
  bool strict_ = false;

 public:
  explicit Input(Stream s, bool strict = false) : s_(std::move(s)), strict_(strict) {}
  explicit Input(Word w, bool strict = false) : w_(std::move(w)), strict_(strict) {}

  const std::optional<Stream>& stream() const { return s_; }
  bool isStrict() const { return strict_; }

  // digit n if determined
  std::optional<Nat> probe(std::uint64_t n) const {
    if (s_) {
      if (strict_) return s_->at(n);  // Unavailable propagates
      try {
        return s_->at(n);
      } catch (const Unavailable&) {
        return std::nullopt;
      }
    }
    if (n < w_.size()) return w_[n];
    if (strict_) throw Unavailable{};
    return std::nullopt;
  }

  // does this input certainly extend u?
  bool extends(const Word& u) const {
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto d = probe(i);
      if (!d || *d != u[i]) return false;
    }
    return true;
  }

  Word availPrefix(std::uint64_t cap) const {
    Word r;
    for (std::uint64_t i = 0; i < cap; ++i) {
      auto d = probe(i);
      if (!d) break;
      r.push_back(*d);
    }
    return r;
  }
};

}  // namespace baire
