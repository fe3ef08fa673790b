#include "insep/pairs.hpp"

#include "insep/assembler.hpp"
#include "insep/eval.hpp"

#include <stdexcept>

namespace insep {

std::string kind_name(PropKind k) {
  switch (k) {
    case PropKind::EI: return "EI";
    case PropKind::CEI: return "CEI";
    case PropKind::WEI: return "WEI";
    case PropKind::DG: return "DG";
    case PropKind::SemiDG: return "SemiDG";
    case PropKind::DCP: return "DCP";
    case PropKind::WDCP: return "WDCP";
    case PropKind::DU: return "DU";
    case PropKind::SemiDU: return "SemiDU";
    case PropKind::KP: return "KP";
    case PropKind::SF: return "SF";
  }
  return "?";
}

std::optional<PropKind> kind_from_name(const std::string& name) {
  for (PropKind k : all_kinds())
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

std::vector<PropKind> all_kinds() {
  return {PropKind::EI,  PropKind::CEI,    PropKind::WEI, PropKind::DG,
          PropKind::SemiDG, PropKind::DCP, PropKind::WDCP, PropKind::DU,
          PropKind::SemiDU, PropKind::KP,  PropKind::SF};
}

namespace {

// Semi-decider for one side of the stage-comparison pair: accepts n when
// program first(n) halts on n at some stage s and second(n) has not halted
// on n at any stage <= s.
Index stage_race_side(bool first_is_proj0) {
  Asm a;
  Nat i = a.temp(), j = a.temp();
  if (first_is_proj0) {
    a.mkproj0(i, 0);
    a.mkproj1(j, 0);
  } else {
    a.mkproj0(j, 0);
    a.mkproj1(i, 0);
  }
  Nat s = a.temp(), st = a.temp(), n = a.temp(), v = a.temp();
  Asm::Label loop = a.lbl(), found = a.lbl(), lose = a.lbl(), acc = a.lbl();
  a.here(loop);
  a.call_bounded(st, n, v, i, 0, s);
  a.jnz(st, found);
  a.inc(s);
  a.jmp(loop);
  a.here(found);
  a.call_bounded(st, s, v, j, 0, n);  // reuse s for the rival stage
  a.jnz(st, lose);
  a.jmp(acc);
  a.here(lose);
  a.jmp(lose);
  a.here(acc);
  return encode_program(a.assemble());
}

}  // namespace

std::pair<DisjointPair, PropertyWitness> kleene_pair() {
  DisjointPair p;
  p.a = ReSet{stage_race_side(true),
              "stage race: (n)_0 halts on n strictly before (n)_1", {}};
  p.b = ReSet{stage_race_side(false),
              "stage race: (n)_1 halts on n strictly before (n)_0", {}};
  p.disjointness = Disjointness::by_construction(
      "a strict stage winner exists on at most one side");
  p.name = "kleene";

  // Kleene function f(x,y) = <y,x>: its value n has (n)_0 = y, (n)_1 = x,
  // so membership of n in W_y - W_x settles the race for side A.
  Asm a;
  Nat x = a.temp(), y = a.temp(), d = a.temp();
  a.mkproj0(x, 0);
  a.mkproj1(y, 0);
  a.mkpair(d, y, x);
  a.copy(0, d);
  PropertyWitness w;
  w.kind = PropKind::KP;
  w.payload = encode_program(a.assemble());
  w.derivation = {"KP: stage-race pair with swap pairing"};
  w.pair_ref = p;
  return {p, w};
}

DisjointPair value_pair(const Nat& i, const Nat& j) {
  if (i == j) throw std::invalid_argument("value_pair: i and j must differ");
  auto side = [](const Nat& k) {
    Asm a;
    Nat v = a.temp(), kc = a.temp(), t = a.temp();
    a.call(v, 0, 0);  // phi_e(e), input register doubles as the index
    a.cconst(kc, k);
    a.eq(t, v, kc);
    Asm::Label loop = a.lbl(), acc = a.lbl();
    a.jnz(t, acc);
    a.here(loop);
    a.jmp(loop);
    a.here(acc);
    return encode_program(a.assemble());
  };
  DisjointPair p;
  p.a = ReSet{side(i), "diagonal value " + i.str(), {}};
  p.b = ReSet{side(j), "diagonal value " + j.str(), {}};
  p.disjointness = Disjointness::by_construction(
      "phi_e(e) is single-valued, so it cannot equal both constants");
  p.name = "value_" + i.str() + "_" + j.str();
  return p;
}

DisjointPair lift_pair(const ReSet& a, const ReSet& b) {
  auto side = [](const Index& set_idx) {
    Asm s;
    Nat v = s.temp(), sc = s.temp(), w = s.temp();
    s.call(v, 0, 0);
    s.cconst(sc, set_idx);
    s.call(w, sc, v);
    return encode_program(s.assemble());
  };
  DisjointPair p;
  p.a = ReSet{side(a.idx), "diagonal lands in first set", {}};
  p.b = ReSet{side(b.idx), "diagonal lands in second set", {}};
  p.disjointness = Disjointness::by_construction(
      "phi_e(e) is single-valued and the target sets are disjoint");
  p.name = "lift";
  return p;
}

namespace {

// Template for the sigma-set semi-decider. Input <c, x> with c = <i, j>:
// accept when x enters W_i at stage s, W_j has no stage < s, and stage
// ties go to the smaller index.
Index sigma_core() {
  static const Index core = [] {
    Asm a;
    Nat c = a.temp(), x = a.temp(), i = a.temp(), j = a.temp();
    a.mkproj0(c, 0);
    a.mkproj1(x, 0);
    a.mkproj0(i, c);
    a.mkproj1(j, c);
    Nat s = a.temp(), st = a.temp(), n1 = a.temp(), v = a.temp();
    Asm::Label loop = a.lbl(), found = a.lbl(), lose = a.lbl(), acc = a.lbl();
    a.here(loop);
    a.call_bounded(st, n1, v, i, x, s);
    a.jnz(st, found);
    a.inc(s);
    a.jmp(loop);
    a.here(found);
    Nat st2 = a.temp(), n2 = a.temp();
    a.call_bounded(st2, n2, v, j, x, n1);
    a.jz(st2, acc);  // rival silent through stage n1
    Nat tie = a.temp(), win = a.temp();
    a.eq(tie, n2, n1);
    a.jz(tie, lose);  // rival strictly earlier
    a.lt(win, i, j);
    a.jnz(win, acc);
    a.here(lose);
    a.jmp(lose);
    a.here(acc);
    return encode_program(a.assemble());
  }();
  return core;
}

}  // namespace

Index sigma() {
  static const Index s = [] {
    Asm a;
    Nat t = a.temp(), out = a.temp();
    a.cconst(t, sigma_core());
    a.splice(out, t, 0);
    a.copy(0, out);
    return encode_program(a.assemble());
  }();
  return s;
}

Index sigma_set(const Index& i, const Index& j) {
  return smn(sigma_core(), pair(i, j));
}

DisjointPair swap_pair(const DisjointPair& p) {
  DisjointPair out;
  out.a = p.b;
  out.b = p.a;
  out.disjointness = p.disjointness;
  out.name = p.name + "_swapped";
  return out;
}

PropertyWitness swap_witness(const PropertyWitness& w) {
  switch (w.kind) {
    case PropKind::DU:
    case PropKind::SemiDU:
    case PropKind::SF:
      throw std::invalid_argument(
          "swap_witness: " + kind_name(w.kind) +
          " swaps through its own uniformizer, not by argument swap");
    default:
      break;
  }
  Asm a;
  Nat x = a.temp(), y = a.temp(), c = a.temp(), fc = a.temp(), v = a.temp();
  a.mkproj0(x, 0);
  a.mkproj1(y, 0);
  a.mkpair(c, y, x);
  a.cconst(fc, w.payload);
  a.call(v, fc, c);
  a.copy(0, v);
  PropertyWitness out;
  out.kind = w.kind;
  out.payload = encode_program(a.assemble());
  out.derivation = w.derivation;
  out.derivation.push_back("swap: g(i,j) = f(j,i)");
  out.pair_ref = swap_pair(w.pair_ref);
  return out;
}

}  // namespace insep
