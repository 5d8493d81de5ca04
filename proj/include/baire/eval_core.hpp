#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "baire/limits.hpp"
#include "baire/stream.hpp"

namespace baire {

// One listed graph entry w_n ↦ w_k.
struct Constraint {
  Word in;
  Word out;
};

// Two entries are compatible when comparable inputs have comparable outputs;
// a set passing this check denotes a well-defined monotone limit
// x ↦ sup{out : in ⊑ x} (applicable outputs always form a chain).
inline bool compatible(const Constraint& a, const Constraint& b) {
  if (!comparable(a.in, b.in)) return true;
  return comparable(a.out, b.out);
}

// Incremental constraint store with prefix-indexed lookup.
class ConstraintSet {
  struct Node {
    std::map<Nat, std::unique_ptr<Node>> kids;
    std::vector<std::uint64_t> here;  // constraint indices ending at this node
  };
  Node root_;
  std::vector<Constraint> all_;

 public:
  const std::vector<Constraint>& constraints() const { return all_; }

  // Insert; on incompatibility returns the index of an existing constraint
  // that clashes with the new one (which is still recorded).
  std::optional<std::uint64_t> insert(Constraint c) {
    std::optional<std::uint64_t> clash;
    // ancestors (inputs that are prefixes of c.in), including exact node
    Node* n = &root_;
    auto check = [&](const Node& node) {
      for (auto idx : node.here)
        if (!clash && !compatible(all_[idx], c)) clash = idx;
    };
    check(*n);
    bool fullPath = true;
    for (const auto& d : c.in) {
      auto it = n->kids.find(d);
      if (it == n->kids.end()) {
        fullPath = false;
        break;
      }
      n = it->second.get();
      check(*n);
    }
    // descendants (inputs extending c.in)
    if (fullPath && !clash) {
      std::vector<const Node*> stack;
      for (auto& [d, kid] : n->kids) stack.push_back(kid.get());
      while (!stack.empty() && !clash) {
        const Node* cur = stack.back();
        stack.pop_back();
        check(*cur);
        for (auto& [d, kid] : cur->kids) stack.push_back(kid.get());
      }
    }
    // record
    Node* m = &root_;
    for (const auto& d : c.in) {
      auto it = m->kids.find(d);
      if (it == m->kids.end()) it = m->kids.emplace(d, std::make_unique<Node>()).first;
      m = it->second.get();
    }
    std::uint64_t idx = all_.size();
    all_.push_back(std::move(c));
    m->here.push_back(idx);
    return clash;
  }

  // sup of outputs over constraints applicable to x
  Word supAlong(const Input& x) const {
    Word best;
    const Node* n = &root_;
    auto takeBest = [&](const Node& node) {
      for (auto idx : node.here)
        if (all_[idx].out.size() > best.size()) best = all_[idx].out;
    };
    takeBest(*n);
    for (std::uint64_t i = 0;; ++i) {
      auto d = x.probe(i);
      if (!d) break;
      auto it = n->kids.find(*d);
      if (it == n->kids.end()) break;
      n = it->second.get();
      takeBest(*n);
    }
    return best;
  }
};

inline bool check_consistent(const std::vector<Constraint>& cs) {
  ConstraintSet s;
  for (const auto& c : cs)
    if (s.insert(c)) return false;
  return true;
}

// Ground-truth name evaluation: decode graph pairs from `name` one by one
// (at most `fuel`, at most the scan cap), stop at the first incompatibility
// with the output frozen at the last consistent stage.
inline EvalOutcome scan_name(const Input& name, const Input& x, const Nat& fuel) {
  EvalOutcome r;
  std::uint64_t steps = fuel > nat(limits::kScanCap) ? limits::kScanCap : to_u64(fuel);
  ConstraintSet set;
  for (std::uint64_t i = 0; i < steps; ++i) {
    auto d = name.probe(i);
    if (!d) break;
    auto [n, k] = cantor_unpair(*d);
    Constraint c{word_decode(n), word_decode(k)};
    if (auto clash = set.insert(std::move(c))) {
      r.status = EvalStatus::InconsistentName;
      r.clash = {*clash, i};
      break;
    }
    // incremental sup would also work; recompute lazily below
  }
  // sup over the consistent stage only
  if (r.status == EvalStatus::InconsistentName) {
    ConstraintSet frozen;
    std::uint64_t upto = r.clash->second;
    for (std::uint64_t i = 0; i < upto; ++i) {
      auto d = name.probe(i);
      frozen.insert(Constraint{word_decode(cantor_unpair(*d).first),
                               word_decode(cantor_unpair(*d).second)});
    }
    r.output = frozen.supAlong(x);
  } else {
    r.output = set.supAlong(x);
  }
  return r;
}

}  // namespace baire
