#pragma once

// Shared structured corpus of small hand-built programs: raw two-instruction
// code exercising jumps and loops, plus macro-structured programs from the
// assembler. Used by the kernel/algebra invariants and the acceptance suite.

#include "insep/algebra.hpp"
#include "insep/assembler.hpp"
#include "insep/kernel.hpp"

#include <vector>

namespace insep::testing {

inline Program pure_double() {
  // r0 := 2 * r0 via a drain loop into r1, then a drain back.
  Asm a(2);  // z = r2
  Asm::Label top = a.lbl(), back = a.lbl(), done = a.lbl();
  a.here(top);
  a.decjz(0, back);
  a.inc(1);
  a.inc(1);
  a.jmp(top);
  a.here(back);
  a.decjz(1, done);
  a.inc(0);
  a.jmp(back);
  a.here(done);
  return a.assemble();
}

inline Program pure_add_const(int k) {
  Program p;
  for (int i = 0; i < k; ++i) p.instrs.push_back(Instruction::inc(0));
  return p;
}

inline Program pure_halve() {
  // r0 := floor(r0 / 2).
  Asm a(2);
  Asm::Label top = a.lbl(), back = a.lbl(), done = a.lbl();
  a.here(top);
  a.decjz(0, back);
  a.decjz(0, back);
  a.inc(1);
  a.jmp(top);
  a.here(back);
  a.decjz(1, done);
  a.inc(0);
  a.jmp(back);
  a.here(done);
  return a.assemble();
}

inline Program pure_diverge_if_positive() {
  // halts with 0 iff input is 0, else diverges
  Asm a(1);
  Asm::Label loop = a.lbl(), done = a.lbl();
  a.decjz(0, done);
  a.here(loop);
  a.jmp(loop);
  a.here(done);
  return a.assemble();
}

inline Program macro_mul_const(int k) {
  Asm a;
  Nat t = a.temp(), d = a.temp();
  a.cconst(t, k);
  a.mul(d, 0, t);
  a.copy(0, d);
  return a.assemble();
}

inline Program macro_swap_pair() {
  Asm a;
  Nat x = a.temp(), y = a.temp(), d = a.temp();
  a.mkproj0(x, 0);
  a.mkproj1(y, 0);
  a.mkpair(d, y, x);
  a.copy(0, d);
  return a.assemble();
}

inline Program macro_triangle() {
  // r0 := r0 * (r0 + 1) / 2
  Asm a;
  Nat u = a.temp(), v = a.temp(), two = a.temp(), q = a.temp(), r = a.temp();
  a.cconst(u, 1);
  a.add(u, 0, u);
  a.mul(v, 0, u);
  a.cconst(two, 2);
  a.divmod(q, r, v, two);
  a.copy(0, q);
  return a.assemble();
}

// Around 230 programs; all total on small inputs or cleanly divergent.
inline std::vector<Index> structured_corpus() {
  std::vector<Index> out;
  for (int n = 0; n < 120; ++n) out.push_back(n);  // every small raw program
  out.push_back(prog_identity());
  out.push_back(prog_diverge());
  out.push_back(prog_succ());
  for (int k = 0; k < 24; ++k) out.push_back(prog_const(k));
  for (int k = 1; k <= 24; ++k) out.push_back(encode_program(pure_add_const(k)));
  out.push_back(encode_program(pure_double()));
  out.push_back(encode_program(pure_halve()));
  out.push_back(encode_program(pure_diverge_if_positive()));
  for (int k = 0; k <= 12; ++k) out.push_back(encode_program(macro_mul_const(k)));
  out.push_back(encode_program(macro_swap_pair()));
  out.push_back(encode_program(macro_triangle()));
  for (int k = 0; k < 16; ++k)
    out.push_back(finite_set_index({Nat(k), Nat(2 * k + 1), Nat(3 * k)}).idx);
  for (int k = 0; k < 8; ++k)
    out.push_back(semi_union(prog_const(k), prog_diverge()));
  out.push_back(universal());
  out.push_back(pad(prog_succ()));
  out.push_back(pad(pad(prog_succ())));
  out.push_back(compose_idx(prog_succ(), prog_succ()));
  out.push_back(smn(universal(), prog_succ()));
  return out;
}

// Subset that halts on every input below a small bound.
inline std::vector<Index> halting_corpus() {
  std::vector<Index> out;
  out.push_back(prog_identity());
  out.push_back(prog_succ());
  for (int k = 0; k < 40; ++k) out.push_back(prog_const(k));
  for (int k = 1; k <= 40; ++k) out.push_back(encode_program(pure_add_const(k)));
  out.push_back(encode_program(pure_double()));
  out.push_back(encode_program(pure_halve()));
  for (int k = 0; k <= 20; ++k) out.push_back(encode_program(macro_mul_const(k)));
  out.push_back(encode_program(macro_swap_pair()));
  out.push_back(encode_program(macro_triangle()));
  for (int k = 0; k < 40; ++k) out.push_back(pad(prog_const(k)));
  for (int k = 0; k < 40; ++k)
    out.push_back(compose_idx(prog_succ(), prog_const(k)));
  for (int k = 0; k < 20; ++k) out.push_back(smn(prog_identity(), k));
  return out;
}

}  // namespace insep::testing
