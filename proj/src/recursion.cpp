#include "insep/recursion.hpp"

#include "insep/assembler.hpp"
#include "insep/eval.hpp"

#include <stdexcept>
#include <vector>

namespace insep {

namespace {

// Unpack the right-nested arity-k tuple in src into fresh temps.
std::vector<Nat> unpack_tuple(Asm& a, const Nat& src, int arity) {
  std::vector<Nat> coords;
  Nat rest = src;
  for (int i = 0; i + 1 < arity; ++i) {
    Nat head = a.temp(), tail = a.temp();
    a.mkproj0(head, rest);
    a.mkproj1(tail, rest);
    coords.push_back(head);
    rest = tail;
  }
  coords.push_back(rest);
  return coords;
}

Nat pack_tuple(Asm& a, const std::vector<Nat>& coords) {
  Nat acc = coords.back();
  for (std::size_t i = coords.size() - 1; i-- > 0;) {
    Nat next = a.temp();
    a.mkpair(next, coords[i], acc);
    acc = next;
  }
  return acc;
}

}  // namespace

ReRelation rel_never(int arity) { return {arity, prog_diverge()}; }

ReRelation rel_eq_coords(int arity, int i, int j) {
  Asm a;
  auto c = unpack_tuple(a, 0, arity);
  Nat t = a.temp();
  a.eq(t, c[i], c[j]);
  Asm::Label loop = a.lbl(), acc = a.lbl();
  a.jnz(t, acc);
  a.here(loop);
  a.jmp(loop);
  a.here(acc);
  return {arity, encode_program(a.assemble())};
}

ReRelation rel_member_coord(int arity, int value_coord, int index_coord) {
  Asm a;
  auto c = unpack_tuple(a, 0, arity);
  Nat v = a.temp();
  a.call(v, c[index_coord], c[value_coord]);
  return {arity, encode_program(a.assemble())};
}

ReRelation rel_or(const ReRelation& r1, const ReRelation& r2) {
  if (r1.arity != r2.arity)
    throw std::invalid_argument("rel_or: arity mismatch");
  return {r1.arity, semi_union(r1.prog, r2.prog)};
}

Index kleene_fixed_point(const Index& F) {
  // Q on <y, x>: m := smn(y, y); then run F(m) on x.
  Asm q;
  Nat y = q.temp(), x = q.temp(), m = q.temp(), fc = q.temp(), fn = q.temp(),
      v = q.temp();
  q.mkproj0(y, 0);
  q.mkproj1(x, 0);
  q.splice(m, y, y);
  q.cconst(fc, F);
  q.call(fn, fc, m);
  q.call(v, fn, x);
  q.copy(0, v);
  Index qi = encode_program(q.assemble());
  return smn(qi, qi);
}

namespace {

// Master template for the double constructions. On input <c, x> with
// c = <i, <j, <d1, d2>>> it rebuilds T1 = smn(d1, c), T2 = smn(d2, c),
// packs the arity-5 tuple (x, i, j, T1, T2) and defers to the relation.
Index sdrt_master(const Index& relation_prog) {
  Asm a;
  Nat c = a.temp(), x = a.temp();
  a.mkproj0(c, 0);
  a.mkproj1(x, 0);
  Nat i = a.temp(), r1 = a.temp();
  a.mkproj0(i, c);
  a.mkproj1(r1, c);
  Nat j = a.temp(), r2 = a.temp();
  a.mkproj0(j, r1);
  a.mkproj1(r2, r1);
  Nat d1 = a.temp(), d2 = a.temp();
  a.mkproj0(d1, r2);
  a.mkproj1(d2, r2);
  Nat t1 = a.temp(), t2 = a.temp();
  a.splice(t1, d1, c);
  a.splice(t2, d2, c);
  Nat packed = pack_tuple(a, {x, i, j, t1, t2});
  Nat rc = a.temp(), v = a.temp();
  a.cconst(rc, relation_prog);
  a.call(v, rc, packed);
  return encode_program(a.assemble());
}

// Total 2-ary program <i,j> -> smn(d_self, <i, <j, <d1, d2>>>).
Index sdrt_transformer(const Index& d_self, const Index& d1, const Index& d2) {
  Asm a;
  Nat i = a.temp(), j = a.temp();
  a.mkproj0(i, 0);
  a.mkproj1(j, 0);
  Nat c1 = a.temp(), c2 = a.temp(), c3 = a.temp();
  Nat dd1 = a.temp(), dd2 = a.temp(), ds = a.temp();
  a.cconst(dd1, d1);
  a.cconst(dd2, d2);
  a.mkpair(c1, dd1, dd2);
  a.mkpair(c2, j, c1);
  a.mkpair(c3, i, c2);
  a.cconst(ds, d_self);
  Nat out = a.temp();
  a.splice(out, ds, c3);
  a.copy(0, out);
  return encode_program(a.assemble());
}

}  // namespace

std::pair<Index, Index> sdrt(const ReRelation& r1, const ReRelation& r2) {
  if (r1.arity != 5 || r2.arity != 5)
    throw std::invalid_argument("sdrt: relations must be 5-ary");
  Index d1 = sdrt_master(r1.prog);
  Index d2 = sdrt_master(r2.prog);
  return {sdrt_transformer(d1, d1, d2), sdrt_transformer(d2, d1, d2)};
}

std::pair<Index, Index> cross_recursion(const ReRelation& m1,
                                        const ReRelation& m2) {
  if (m1.arity != 4 || m2.arity != 4)
    throw std::invalid_argument("cross_recursion: relations must be 4-ary");
  // R1(x, y1, y2, z1, z2) = M1(x, y2, z1, z2); R2 mirrors with y1.
  auto wire = [](const Index& m, bool use_second) {
    Asm a;
    auto c = unpack_tuple(a, 0, 5);  // x y1 y2 z1 z2
    Nat packed = pack_tuple(a, {c[0], use_second ? c[2] : c[1], c[3], c[4]});
    Nat mc = a.temp(), v = a.temp();
    a.cconst(mc, m);
    a.call(v, mc, packed);
    return encode_program(a.assemble());
  };
  return sdrt({5, wire(m1.prog, true)}, {5, wire(m2.prog, false)});
}

namespace {

// Parametrized master: on <c, x> with c = <y, <d1, <d2, g>>> it rebuilds
// F1, F2, evaluates g(F1, F2) and defers to the 3-ary relation on
// (x, y, g(F1,F2)).
Index param_master(const Index& relation_prog) {
  Asm a;
  Nat c = a.temp(), x = a.temp();
  a.mkproj0(c, 0);
  a.mkproj1(x, 0);
  Nat y = a.temp(), r1 = a.temp();
  a.mkproj0(y, c);
  a.mkproj1(r1, c);
  Nat d1 = a.temp(), r2 = a.temp();
  a.mkproj0(d1, r1);
  a.mkproj1(r2, r1);
  Nat d2 = a.temp(), g = a.temp();
  a.mkproj0(d2, r2);
  a.mkproj1(g, r2);
  Nat f1 = a.temp(), f2 = a.temp();
  a.splice(f1, d1, c);
  a.splice(f2, d2, c);
  Nat fp = a.temp(), gv = a.temp();
  a.mkpair(fp, f1, f2);
  a.call(gv, g, fp);
  Nat packed = pack_tuple(a, {x, y, gv});
  Nat rc = a.temp(), v = a.temp();
  a.cconst(rc, relation_prog);
  a.call(v, rc, packed);
  return encode_program(a.assemble());
}

Index param_transformer(const Index& d_self, const Index& d1, const Index& d2,
                        const Index& g) {
  Asm a;
  Nat c1 = a.temp(), c2 = a.temp(), c3 = a.temp();
  Nat dd1 = a.temp(), dd2 = a.temp(), gg = a.temp(), ds = a.temp();
  a.cconst(dd1, d1);
  a.cconst(dd2, d2);
  a.cconst(gg, g);
  a.mkpair(c1, dd2, gg);
  a.mkpair(c2, dd1, c1);
  a.mkpair(c3, 0, c2);  // y is the whole input
  a.cconst(ds, d_self);
  Nat out = a.temp();
  a.splice(out, ds, c3);
  a.copy(0, out);
  return encode_program(a.assemble());
}

}  // namespace

std::pair<Index, Index> param_recursion(const ReRelation& m1,
                                        const ReRelation& m2, const Index& g) {
  if (m1.arity != 3 || m2.arity != 3)
    throw std::invalid_argument("param_recursion: relations must be 3-ary");
  Index d1 = param_master(m1.prog);
  Index d2 = param_master(m2.prog);
  return {param_transformer(d1, d1, d2, g), param_transformer(d2, d1, d2, g)};
}

namespace {

// 3-ary relation "x in S or (y in T and x = z)" from set indices.
Index scenario_relation(const Index& s_idx, const Index& t_idx) {
  Asm a;
  auto c = unpack_tuple(a, 0, 3);  // x y z
  Nat sc = a.temp(), tc = a.temp();
  a.cconst(sc, s_idx);
  a.cconst(tc, t_idx);
  Nat eqr = a.temp();
  a.eq(eqr, c[0], c[2]);
  Asm::Label only_s = a.lbl(), acc = a.lbl(), dove = a.lbl();
  a.jz(eqr, only_s);
  // dovetail x in S with y in T
  Nat st = a.temp(), n = a.temp(), v = a.temp(), s = a.temp();
  a.here(dove);
  a.call_bounded(st, n, v, sc, c[0], s);
  a.jnz(st, acc);
  a.call_bounded(st, n, v, tc, c[1], s);
  a.jnz(st, acc);
  a.inc(s);
  a.jmp(dove);
  a.here(only_s);
  Nat w = a.temp();
  a.call(w, sc, c[0]);
  a.here(acc);
  return encode_program(a.assemble());
}

}  // namespace

std::pair<Index, Index> scenario_recursion(const ReSet& a, const ReSet& b,
                                           const ReSet& c, const ReSet& d,
                                           const Index& g) {
  ReRelation m1{3, scenario_relation(c.idx, b.idx)};
  ReRelation m2{3, scenario_relation(d.idx, a.idx)};
  return param_recursion(m1, m2, g);
}

Nat apply_total(const Index& f, const Nat& packed_arg, std::uint64_t fuel) {
  EvalOutcome out = run(f, packed_arg, Fuel{fuel});
  if (!out.halted) throw std::runtime_error("apply_total: fuel exhausted");
  return out.value;
}

}  // namespace insep
