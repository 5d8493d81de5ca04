#include <iostream>

#include "baire/reductions.hpp"

using namespace baire;

static void show(const char* tag, const Word& w) {
  std::cout << tag << " " << show_word(w) << "\n";
}

int main() {
  Nat fuel = pow2(1 << 18);

  // 1. smn with F = odds: Φ_{S(q)}(p) = p
  {
    Transformer S = smn_transform(Machine::odds());
    Stream q = Stream::cycle(word({7, 8}));
    Stream p = Stream::arith(1, 1);  // 1,2,3,...
    Stream Sq = S.apply(q);
    EvalOutcome r = eval_name(Sq, Input(p), fuel);
    show("smn odds ->", r.output);
  }
  // 2. smn with F = evens: Φ_{S(q)}(p) = q
  {
    Transformer S = smn_transform(Machine::evens());
    Stream q = Stream::cycle(word({7, 8}));
    Stream p = Stream::arith(1, 1);
    EvalOutcome r = eval_name(S.apply(q), Input(p), fuel);
    show("smn evens ->", r.output);
  }
  // 3. const_section: p = ⟨enc(id), x⟩, Φ_{R(p)}(anything) = x
  {
    Stream x = Stream::cycle(word({4, 5, 6}));
    Stream p = interleave(encode_machine(Machine::identity()), x);
    Stream Rp = const_section(p);
    EvalOutcome r = eval_name(Rp, Input(Stream::constant(9)), fuel);
    show("constsect ->", r.output);
  }
  // 4. param_fixpoint with F = evens: U(R(q)) = q
  {
    Transformer R = param_fixpoint(Machine::evens());
    Stream q = Stream::cycle(word({3, 1, 2}));
    Stream Rq = R.apply(q);
    EvalOutcome r = universal(Rq, fuel);
    show("param evens ->", r.output);
  }
  // 5. param_fixpoint with F = const (1,1,1)
  {
    Transformer R = param_fixpoint(Machine::constant(word({1, 1, 1})));
    Stream q = Stream::cycle(word({3, 1, 2}));
    EvalOutcome r = universal(R.apply(q), fuel);
    show("param const ->", r.output);
  }
  // 6. DIS diagonal with q = enc(id): U(D(q)) vs Φ_q(D(q))
  {
    Transformer D = dis_discontinuity();
    Stream q = encode_machine(Machine::identity());
    Stream Dq = D.apply(q);
    EvalOutcome lhs = universal(Dq, fuel);
    EvalOutcome rhs = eval_name(q, Input(Dq), fuel);
    show("dis lhs ->", lhs.output);
    show("dis rhs ->", rhs.output);
    show("Dq prefix", Dq.prefix(6));
  }
  // 7. fixpoint quine: Φ_p(r) = name of const-r machine
  {
    Machine constName = Machine::host(
        "mkconst",
        [](const Word& v) {
          // name of the machine u ↦ v|_{|u|}: pairs (decode(j) ↦ v|_{len})
          Word out;
          for (std::uint64_t j = 0; j < 4 * (v.size() + 1); ++j) {
            std::size_t len = word_decode_len(nat(j));
            if (len > v.size()) break;
            Word val = take(v, len);
            out.push_back(cantor_pair(nat(j), word_code(val)));
          }
          return out;
        },
        true, [](std::uint64_t L) { return L; });
    Stream p = encode_machine(constName);
    Stream Tp = fixpoint(p);
    EvalOutcome r = eval_name(Tp, Input(Stream::constant(0)), fuel);
    show("quine eval ->", r.output);
    show("quine Tp   ->", Tp.prefix(r.output.size() ? r.output.size() : 4));
  }
  return 0;
}
