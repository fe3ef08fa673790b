#include "insep/recursion.hpp"

#include "insep/assembler.hpp"
#include "insep/eval.hpp"
#include "insep/verify.hpp"

#include "corpus.hpp"
#include "doctest.h"

using namespace insep;
using namespace insep::testing;

namespace {

constexpr std::uint64_t kFuel = 1'000'000;

bool confirmed(const Index& set, const Nat& x, std::uint64_t fuel = kFuel) {
  return run(set, x, Fuel{fuel}).halted;
}

// index of the total map n -> smn(EQCORE, n), so W of the image is {n}
Index singleton_of_input_transformer() {
  Asm eqc;
  Nat n = eqc.temp(), x = eqc.temp(), t = eqc.temp();
  eqc.mkproj0(n, 0);
  eqc.mkproj1(x, 0);
  eqc.eq(t, n, x);
  Asm::Label loop = eqc.lbl(), acc = eqc.lbl();
  eqc.jnz(t, acc);
  eqc.here(loop);
  eqc.jmp(loop);
  eqc.here(acc);
  Index eqcore = encode_program(eqc.assemble());

  Asm f;
  Nat tc = f.temp(), out = f.temp();
  f.cconst(tc, eqcore);
  f.splice(out, tc, 0);
  f.copy(0, out);
  return encode_program(f.assemble());
}

}  // namespace

TEST_CASE("kleene fixed point: constant transformer") {
  // F = const e0 where e0 doubles; fixed point behaves like e0.
  Index e0 = encode_program(pure_double());
  Asm f;
  f.cconst(0, e0);
  Index F = encode_program(f.assemble());
  Index n = kleene_fixed_point(F);
  for (int x = 0; x < 20; ++x) {
    auto out = run(n, x, Fuel{kFuel});
    REQUIRE(out.halted);
    CHECK(out.value == 2 * x);
  }
}

TEST_CASE("kleene fixed point: identity transformer") {
  Index F = prog_identity();
  Index n = kleene_fixed_point(F);
  // run(n, x) ~ run(F(n), x) = run(n, x): vacuously true; n's behavior
  // must at least be deterministic and self-consistent.
  auto a = run(n, 3, Fuel{200000});
  auto b = run(n, 3, Fuel{400000});
  CHECK(a.halted == b.halted);
}

TEST_CASE("kleene fixed point: self singleton") {
  Index F = singleton_of_input_transformer();
  Index n = kleene_fixed_point(F);
  CHECK(confirmed(n, n));
  CHECK(!confirmed(n, n + 1));
  CHECK(!confirmed(n, 0));
}

TEST_CASE("sdrt: self singleton and silent twin") {
  auto [t1, t2] = sdrt(rel_eq_coords(5, 0, 3), rel_never(5));
  for (auto [i, j] : {std::pair<int, int>{0, 0}, {3, 7}}) {
    Index w1 = apply_total(t1, pair(i, j));
    Index w2 = apply_total(t2, pair(i, j));
    CHECK(confirmed(w1, w1));
    CHECK(!confirmed(w1, w1 + 1));
    CHECK(!confirmed(w1, 0));
    for (int x = 0; x < 50; ++x) CHECK(!confirmed(w2, x, 100000));
  }
}

TEST_CASE("sdrt: mutual quines") {
  auto [t1, t2] = sdrt(rel_eq_coords(5, 0, 4), rel_eq_coords(5, 0, 3));
  Index w1 = apply_total(t1, pair(1, 2));
  Index w2 = apply_total(t2, pair(1, 2));
  CHECK(w1 != w2);
  CHECK(confirmed(w1, w2));   // W_{t1} = {t2}
  CHECK(confirmed(w2, w1));   // W_{t2} = {t1}
  CHECK(!confirmed(w1, w1));
  CHECK(!confirmed(w2, w2));
}

TEST_CASE("sdrt: relation sees the pair parameters") {
  // R1: x in W_{y1}; membership of crafted finite W_i transfers.
  auto [t1, t2] = sdrt(rel_member_coord(5, 0, 1), rel_never(5));
  ReSet wi = finite_set_index({2, 5});
  Index w1 = apply_total(t1, pair(wi.idx, 0));
  CHECK(confirmed(w1, 2));
  CHECK(confirmed(w1, 5));
  CHECK(!confirmed(w1, 3, 200000));
}

TEST_CASE("cross recursion wires the opposite parameter") {
  // M1: x in W_y; t1 must see y2.
  auto [t1, t2] = cross_recursion(rel_member_coord(4, 0, 1), rel_never(4));
  ReSet wj = finite_set_index({2, 5});
  ReSet wi = finite_set_index({9});
  Index w1 = apply_total(t1, pair(wi.idx, wj.idx));
  CHECK(confirmed(w1, 2));
  CHECK(confirmed(w1, 5));
  CHECK(!confirmed(w1, 9, 200000));  // not the uncrossed side
}

TEST_CASE("cross recursion: both never") {
  auto [t1, t2] = cross_recursion(rel_never(4), rel_never(4));
  Index w1 = apply_total(t1, pair(3, 4));
  Index w2 = apply_total(t2, pair(3, 4));
  for (int x = 0; x < 50; ++x) {
    CHECK(!confirmed(w1, x, 20000));
    CHECK(!confirmed(w2, x, 20000));
  }
}

TEST_CASE("param recursion: W_f1(y) is the singleton of g(f1,f2)") {
  Index g = encode_program(macro_swap_pair());
  auto [f1, f2] = param_recursion(rel_eq_coords(3, 0, 2), rel_never(3), g);
  for (int y = 0; y <= 5; ++y) {
    Index w1 = apply_total(f1, y);
    Index w2 = apply_total(f2, y);
    Nat val = apply_total(g, pair(w1, w2));
    CHECK(confirmed(w1, val));
    CHECK(!confirmed(w1, val + 1));
    CHECK(!confirmed(w2, val, 100000));
  }
}

TEST_CASE("param recursion: gated by membership of y") {
  // M1: y in A and x = z, with A = {2}: exactly the reduction gadget shape.
  ReSet a_set = finite_set_index({2});
  Asm m;
  Nat rest = 0;
  Nat x = m.temp(), r1 = m.temp(), y = m.temp(), z = m.temp();
  m.mkproj0(x, rest);
  m.mkproj1(r1, rest);
  m.mkproj0(y, r1);
  m.mkproj1(z, r1);
  Nat t = m.temp(), ac = m.temp(), v = m.temp();
  m.eq(t, x, z);
  Asm::Label loop = m.lbl(), acc = m.lbl(), go = m.lbl();
  m.jnz(t, go);
  m.here(loop);
  m.jmp(loop);
  m.here(go);
  m.cconst(ac, a_set.idx);
  m.call(v, ac, y);
  m.here(acc);
  ReRelation m1{3, encode_program(m.assemble())};

  Index g = encode_program(macro_swap_pair());
  auto [f1, f2] = param_recursion(m1, rel_never(3), g);

  Index w1_in = apply_total(f1, 2);
  Index w2_in = apply_total(f2, 2);
  Nat val = apply_total(g, pair(w1_in, w2_in));
  CHECK(confirmed(w1_in, val));
  CHECK(!confirmed(w1_in, val + 1));

  Index w1_out = apply_total(f1, 3);
  for (int q = 0; q < 50; ++q) CHECK(!confirmed(w1_out, q, 50000));
}

TEST_CASE("scenario recursion: all three cases") {
  ReSet A = finite_set_index({1});
  ReSet B = finite_set_index({2});
  ReSet C = finite_set_index({10});
  ReSet D = finite_set_index({20});
  Index g = encode_program(macro_swap_pair());
  auto [f1, f2] = scenario_recursion(A, B, C, D, g);

  // y = 1 in A: W_f1 = C, W_f2 = D + {g(f1,f2)}
  Index i1 = apply_total(f1, 1), j1 = apply_total(f2, 1);
  Nat val1 = apply_total(g, pair(i1, j1));
  CHECK(confirmed(i1, 10));
  CHECK(confirmed(j1, 20));
  CHECK(confirmed(j1, val1));
  CHECK(!confirmed(i1, val1, 100000));
  CHECK(!confirmed(i1, 20, 100000));

  // y = 2 in B: mirrored
  Index i2 = apply_total(f1, 2), j2 = apply_total(f2, 2);
  Nat val2 = apply_total(g, pair(i2, j2));
  CHECK(confirmed(i2, 10));
  CHECK(confirmed(i2, val2));
  CHECK(confirmed(j2, 20));
  CHECK(!confirmed(j2, val2, 100000));

  // y = 0 outside: plain C and D on [0,50]
  Index i0 = apply_total(f1, 0), j0 = apply_total(f2, 0);
  for (int q = 0; q < 50; ++q) {
    CHECK(confirmed(i0, q, 200000) == (q == 10));
    CHECK(confirmed(j0, q, 200000) == (q == 20));
  }
}

TEST_CASE("scenario recursion: empty C and D give the bare self value") {
  ReSet A = finite_set_index({1});
  ReSet B = finite_set_index({2});
  ReSet none = finite_set_index({});
  Index g = encode_program(macro_swap_pair());
  auto [f1, f2] = scenario_recursion(A, B, none, none, g);
  Index i = apply_total(f1, 1), j = apply_total(f2, 1);
  Nat val = apply_total(g, pair(i, j));
  CHECK(confirmed(j, val));
  CHECK(!confirmed(j, val + 1, 100000));
  for (int q = 0; q < 50; ++q) CHECK(!confirmed(i, q, 50000));
}

TEST_CASE("recursion transformers are total at modest fuel") {
  auto [t1, t2] = sdrt(rel_eq_coords(5, 0, 3), rel_never(5));
  auto [f1, f2] = param_recursion(rel_eq_coords(3, 0, 2), rel_never(3),
                                  encode_program(macro_swap_pair()));
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      CHECK(run(t1, pair(i, j), Fuel{10'000'000}).halted);
      CHECK(run(t2, pair(i, j), Fuel{10'000'000}).halted);
    }
    CHECK(run(f1, i, Fuel{10'000'000}).halted);
    CHECK(run(f2, i, Fuel{10'000'000}).halted);
  }
}
