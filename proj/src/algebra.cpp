#include "insep/algebra.hpp"

#include "insep/eval.hpp"

#include <mutex>

namespace insep {

Program shift_targets(const Program& p, const Nat& delta) {
  Program out;
  out.instrs.reserve(p.instrs.size());
  for (const auto& ins : p.instrs) {
    if (ins.kind == Instruction::Kind::Inc) {
      out.instrs.push_back(ins);
    } else {
      out.instrs.push_back(Instruction::decjz(ins.reg, ins.target + delta));
    }
  }
  return out;
}

Index smn(const Index& e, const Nat& a) {
  // Prologue: r1 := a; r0 := <a, r0>; r1 := 0.  Five instructions, so the
  // body of e starts at 5 with the standard input convention restored.
  std::vector<Instruction> out;
  auto append = [&out](const std::vector<Instruction>& v) {
    out.insert(out.end(), v.begin(), v.end());
  };
  append(emit_block({MacroOp::Const, {1}, {a}}, 0));
  append(emit_block({MacroOp::Pair, {0, 1, 0}, {}}, 2));
  append(emit_block({MacroOp::Const, {1}, {0}}, 3));
  Program body = shift_targets(decode_program(e), 5);
  append(body.instrs);
  return encode_program(Program{std::move(out)});
}

Index universal() {
  static const Index univ = [] {
    Asm a;
    Nat e = a.temp(), x = a.temp(), v = a.temp();
    a.mkproj0(e, 0);
    a.mkproj1(x, 0);
    a.call(v, e, x);
    a.copy(0, v);
    return encode_program(a.assemble());
  }();
  return univ;
}

Index preimage_transformer(const Index& g) {
  // Core: on <i, x>, compute g(x) then run i on it.
  Asm core;
  Nat i = core.temp(), x = core.temp(), y = core.temp(), v = core.temp();
  Nat gc = core.temp();
  core.mkproj0(i, 0);
  core.mkproj1(x, 0);
  core.cconst(gc, g);
  core.call(y, gc, x);
  core.call(v, i, y);
  Index hcore = encode_program(core.assemble());

  Asm h;
  Nat t = h.temp(), d = h.temp();
  h.cconst(t, hcore);
  h.splice(d, t, 0);
  h.copy(0, d);
  return encode_program(h.assemble());
}

ReSet finite_set_index(const std::set<Nat>& s) {
  Asm a;
  Nat t = a.temp(), u = a.temp();
  Asm::Label acc = a.lbl();
  for (const auto& v : s) {
    a.cconst(t, v);
    a.eq(u, 0, t);
    a.jnz(u, acc);
  }
  Asm::Label loop = a.lbl();
  a.here(loop);
  a.jmp(loop);
  a.here(acc);  // end of program: halt
  ReSet r;
  r.idx = encode_program(a.assemble());
  r.provenance = "finite membership table";
  r.finite = s;
  return r;
}

Index compose_idx(const Index& g, const Index& f) {
  Asm a;
  Nat fc = a.temp(), gc = a.temp(), v = a.temp(), w = a.temp();
  a.cconst(fc, f);
  a.cconst(gc, g);
  a.call(v, fc, 0);
  a.call(w, gc, v);
  a.copy(0, w);
  return encode_program(a.assemble());
}

Index pad(const Index& e) {
  Program body = shift_targets(decode_program(e), 1);
  Program out;
  // Register 1 is 0 at start, so this jumps to 1: a no-op prefix.
  out.instrs.push_back(Instruction::decjz(1, 1));
  out.instrs.insert(out.instrs.end(), body.instrs.begin(), body.instrs.end());
  return encode_program(out);
}

Index prog_identity() { return encode_program(Program{}); }

Index prog_diverge() {
  static const Index e = [] {
    Program p;
    p.instrs.push_back(Instruction::decjz(1, 0));
    return encode_program(p);
  }();
  return e;
}

Index prog_const(const Nat& k) {
  Asm a;
  a.cconst(0, k);
  return encode_program(a.assemble());
}

Index prog_succ() {
  Program p;
  p.instrs.push_back(Instruction::inc(0));
  return encode_program(p);
}

Index prog_total_everywhere() { return prog_const(0); }

Index semi_union(const Index& e1, const Index& e2) {
  Asm a;
  Nat c1 = a.temp(), c2 = a.temp(), s = a.temp();
  Nat st = a.temp(), n = a.temp(), v = a.temp();
  Asm::Label acc = a.lbl(), loop = a.lbl();
  a.cconst(c1, e1);
  a.cconst(c2, e2);
  a.here(loop);
  a.call_bounded(st, n, v, c1, 0, s);
  a.jnz(st, acc);
  a.call_bounded(st, n, v, c2, 0, s);
  a.jnz(st, acc);
  a.inc(s);
  a.jmp(loop);
  a.here(acc);
  return encode_program(a.assemble());
}

Index semi_intersection(const Index& e1, const Index& e2) {
  Asm a;
  Nat c1 = a.temp(), c2 = a.temp(), s = a.temp();
  Nat st1 = a.temp(), st2 = a.temp(), n = a.temp(), v = a.temp();
  Asm::Label acc = a.lbl(), loop = a.lbl(), next = a.lbl();
  a.cconst(c1, e1);
  a.cconst(c2, e2);
  a.here(loop);
  a.call_bounded(st1, n, v, c1, 0, s);
  a.call_bounded(st2, n, v, c2, 0, s);
  a.jz(st1, next);
  a.jnz(st2, acc);
  a.here(next);
  a.inc(s);
  a.jmp(loop);
  a.here(acc);
  return encode_program(a.assemble());
}

Index semi_union_finite(const Index& e, const std::set<Nat>& s) {
  return semi_union(e, finite_set_index(s).idx);
}

}  // namespace insep
