#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "baire/reductions.hpp"

namespace baire {

using json = nlohmann::json;

// Digits may exceed what JSON numbers can carry faithfully; anything past
// 2^53 is written as a decimal string.
inline json nat_to_json(const Nat& n) {
  if (n.fits_ulong_p() && n < nat(1ull << 53)) return json(to_u64(n));
  return json(n.get_str());
}

inline Nat nat_from_json(const json& j) {
  if (j.is_number_unsigned()) return nat(j.get<std::uint64_t>());
  if (j.is_string()) return parse_nat(j.get<std::string>());
  throw std::invalid_argument("expected natural");
}

inline json word_to_json(const Word& w) {
  json a = json::array();
  for (const auto& d : w) a.push_back(nat_to_json(d));
  return a;
}

inline Word word_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected word (array)");
  Word w;
  for (const auto& e : j) w.push_back(nat_from_json(e));
  return w;
}

inline json stream_desc_to_json(const StreamDesc& s) {
  json j;
  j["prefix"] = word_to_json(s.prefix);
  if (s.rule == StreamDesc::Rule::Cycle)
    j["rule"] = {{"kind", "cycle"}, {"word", word_to_json(s.cycleWord)}};
  else
    j["rule"] = {{"kind", "arith"}, {"a", nat_to_json(s.a)}, {"b", nat_to_json(s.b)}};
  return j;
}

inline StreamDesc stream_desc_from_json(const json& j) {
  Word pre = j.contains("prefix") ? word_from_json(j.at("prefix")) : Word{};
  const json& r = j.at("rule");
  std::string kind = r.at("kind").get<std::string>();
  if (kind == "cycle") return StreamDesc::cycle(word_from_json(r.at("word")), pre);
  if (kind == "arith")
    return StreamDesc::arith(nat_from_json(r.at("a")), nat_from_json(r.at("b")), pre);
  throw std::invalid_argument("unknown stream rule: " + kind);
}

inline json digitfn_to_json(const DigitFn& f) {
  json j;
  switch (f.kind) {
    case DigitFn::Kind::Affine:
      j = {{"kind", "affine"}, {"a", nat_to_json(f.a)}, {"b", nat_to_json(f.b)}};
      break;
    case DigitFn::Kind::Flip01: j = {{"kind", "flip01"}}; break;
    case DigitFn::Kind::Sgn01: j = {{"kind", "sgn01"}}; break;
    case DigitFn::Kind::Table: {
      json es = json::array();
      for (const auto& [k, v] : f.entries) es.push_back({nat_to_json(k), nat_to_json(v)});
      j = {{"kind", "table"},
           {"entries", es},
           {"a", nat_to_json(f.a)},
           {"b", nat_to_json(f.b)}};
      break;
    }
  }
  return j;
}

inline DigitFn digitfn_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "affine") return DigitFn::affine(nat_from_json(j.at("a")), nat_from_json(j.at("b")));
  if (kind == "flip01") return DigitFn::flip01();
  if (kind == "sgn01") return DigitFn::sgn01();
  if (kind == "table") {
    std::vector<std::pair<Nat, Nat>> es;
    for (const auto& e : j.at("entries"))
      es.emplace_back(nat_from_json(e.at(0)), nat_from_json(e.at(1)));
    return DigitFn::table(std::move(es), nat_from_json(j.at("a")), nat_from_json(j.at("b")));
  }
  throw std::invalid_argument("unknown digit map: " + kind);
}

inline json machine_to_json(const Machine& m) {
  const auto& n = m.node();
  using Op = Machine::Op;
  switch (n.op) {
    case Op::Id: return {{"op", "id"}};
    case Op::Const: return {{"op", "const"}, {"word", word_to_json(n.w)}};
    case Op::Prepend: return {{"op", "prepend"}, {"word", word_to_json(n.w)}};
    case Op::Evens: return {{"op", "evens"}};
    case Op::Odds: return {{"op", "odds"}};
    case Op::Sect:
      if (!n.sdesc) throw std::invalid_argument("section over a host stream is not serializable");
      return {{"op", "sect"}, {"stream", stream_desc_to_json(*n.sdesc)}};
    case Op::Comp:
      return {{"op", "comp"}, {"f", machine_to_json(n.kids[0])}, {"g", machine_to_json(n.kids[1])}};
    case Op::Pairup:
      return {{"op", "pairup"}, {"a", machine_to_json(n.kids[0])}, {"b", machine_to_json(n.kids[1])}};
    case Op::DMap: return {{"op", "dmap"}, {"fn", digitfn_to_json(n.dfn)}};
    case Op::Table: {
      json es = json::array();
      for (const auto& c : n.table) es.push_back({word_to_json(c.in), word_to_json(c.out)});
      return {{"op", "ftable"}, {"entries", es}};
    }
    case Op::Stutter: return {{"op", "stutter"}, {"k", n.k}};
    case Op::FirstRep: return {{"op", "firstrep"}};
    case Op::Univ: return {{"op", "univ"}};
    case Op::ZScan: return {{"op", "zscan"}, {"inner", machine_to_json(n.kids[0])}};
    case Op::Host:
      if (!n.serialTag.empty()) {
        json j = json::parse(n.serialPayload.empty() ? "{}" : n.serialPayload);
        j["op"] = n.serialTag;
        return j;
      }
      throw std::invalid_argument("host machine '" + n.hostLabel + "' is not serializable");
  }
  throw std::logic_error("unreachable");
}

inline Machine machine_from_json(const json& j);

// transformer-backed machines (built in reductions/transform)
inline Machine transformer_machine_from_json(const std::string& op, const json& j) {
  if (op == "discfn") {
    Machine F = machine_from_json(j.at("body"));
    Transformer t = param_fixpoint(F);
    return t.machineForm("discfn", json({{"body", machine_to_json(F)}}).dump());
  }
  if (op == "discfn-wit") {
    Machine H = machine_from_json(j.at("H"));
    Machine K = machine_from_json(j.at("K"));
    Transformer t = compose(lift_machine(K), param_fixpoint_witness(H, K));
    return t.machineForm(
        "discfn-wit", json({{"H", machine_to_json(H)}, {"K", machine_to_json(K)}}).dump());
  }
  if (op == "constsect") return const_section_transformer().machineForm("constsect");
  if (op == "fixt") return fixpoint_transformer().machineForm("fixt");
  if (op == "disc-dis") {
    Transformer t = compose(dis_discontinuity(), const_section_transformer());
    return t.machineForm("disc-dis");
  }
  throw std::invalid_argument("unknown machine op: " + op);
}

inline Machine machine_from_json(const json& j) {
  std::string op = j.at("op").get<std::string>();
  if (op == "id") return Machine::identity();
  if (op == "const") return Machine::constant(word_from_json(j.at("word")));
  if (op == "prepend") return Machine::prepend(word_from_json(j.at("word")));
  if (op == "evens") return Machine::evens();
  if (op == "odds") return Machine::odds();
  if (op == "sect") return Machine::section(stream_desc_from_json(j.at("stream")));
  if (op == "comp")
    return Machine::compose(machine_from_json(j.at("f")), machine_from_json(j.at("g")));
  if (op == "pairup")
    return Machine::pairup(machine_from_json(j.at("a")), machine_from_json(j.at("b")));
  if (op == "dmap") return Machine::dmap(digitfn_from_json(j.at("fn")));
  if (op == "ftable") {
    std::vector<Constraint> es;
    for (const auto& e : j.at("entries"))
      es.push_back({word_from_json(e.at(0)), word_from_json(e.at(1))});
    return Machine::table(std::move(es));
  }
  if (op == "stutter") return Machine::stutter(j.at("k").get<std::uint64_t>());
  if (op == "firstrep") return Machine::firstRep();
  if (op == "univ") return Machine::universal();
  if (op == "zscan") return Machine::zscan(machine_from_json(j.at("inner")));
  return transformer_machine_from_json(op, j);
}

inline json witness_to_json(const Witness& w) {
  return {{"H", machine_to_json(w.H)},
          {"K", machine_to_json(w.K)},
          {"flavor", w.flavor == Flavor::Strong ? "strong" : "plain"}};
}

inline Witness witness_from_json(const json& j) {
  Witness w;
  w.H = machine_from_json(j.at("H"));
  w.K = machine_from_json(j.at("K"));
  w.flavor = j.at("flavor").get<std::string>() == "plain" ? Flavor::Plain : Flavor::Strong;
  return w;
}

}  // namespace baire
