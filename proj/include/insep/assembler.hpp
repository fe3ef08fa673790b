#pragma once

// Small two-pass assembler for macro-structured register programs.
// Pure control flow idioms (jmp/jz/jnz) lean on a reserved register that
// is never written and therefore stays 0 under the input convention.

#include "insep/kernel.hpp"
#include "insep/macro.hpp"

#include <vector>

namespace insep {

class Asm {
 public:
  using Label = int;

  // Registers first_free and up are available as temporaries; the first
  // one is reserved as the never-written zero register.
  explicit Asm(Nat first_free = 1);

  Nat temp();
  Nat zreg() const { return z_; }

  Label lbl();
  void here(Label l);

  void inc(const Nat& r);
  void decjz(const Nat& r, Label l);
  void decjz_abs(const Nat& r, const Nat& target);
  void jmp(Label l);
  void jz(const Nat& r, Label l);   // jump if r == 0, r preserved
  void jnz(const Nat& r, Label l);  // jump if r > 0, r preserved
  void halt();                      // jump past the end

  void cconst(const Nat& d, const Nat& imm);
  void copy(const Nat& d, const Nat& s);
  void add(const Nat& d, const Nat& a, const Nat& b);
  void sub(const Nat& d, const Nat& a, const Nat& b);
  void mul(const Nat& d, const Nat& a, const Nat& b);
  void divmod(const Nat& q, const Nat& r, const Nat& a, const Nat& m);
  void mkpair(const Nat& d, const Nat& a, const Nat& b);
  void mkproj0(const Nat& d, const Nat& s);
  void mkproj1(const Nat& d, const Nat& s);
  void eq(const Nat& d, const Nat& a, const Nat& b);
  void lt(const Nat& d, const Nat& a, const Nat& b);
  void splice(const Nat& d, const Nat& t, const Nat& v);
  void call(const Nat& v, const Nat& e, const Nat& x);
  void call_bounded(const Nat& st, const Nat& n, const Nat& v, const Nat& e,
                    const Nat& x, const Nat& f);

  Program assemble() const;

 private:
  struct Item {
    enum Kind { PureInc, PureDecjzLabel, PureDecjzAbs, Block } kind;
    Nat reg;
    int label = -1;
    Nat abs_target;
    MacroCall call;
  };

  void block(MacroOp op, std::vector<Nat> regs, std::vector<Nat> imms = {});

  std::vector<Item> items_;
  std::vector<int> label_item_;  // label -> item position, -1 = end
  Nat z_;
  Nat next_temp_;
};

}  // namespace insep
