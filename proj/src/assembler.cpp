#include "insep/assembler.hpp"

#include <stdexcept>

namespace insep {

Asm::Asm(Nat first_free) : z_(first_free), next_temp_(first_free + 1) {}

Nat Asm::temp() { return next_temp_++; }

Asm::Label Asm::lbl() {
  label_item_.push_back(-2);  // unbound
  return static_cast<Label>(label_item_.size() - 1);
}

void Asm::here(Label l) {
  label_item_.at(l) = static_cast<int>(items_.size());
}

void Asm::inc(const Nat& r) { items_.push_back({Item::PureInc, r, -1, 0, {}}); }

void Asm::decjz(const Nat& r, Label l) {
  items_.push_back({Item::PureDecjzLabel, r, l, 0, {}});
}

void Asm::decjz_abs(const Nat& r, const Nat& target) {
  items_.push_back({Item::PureDecjzAbs, r, -1, target, {}});
}

void Asm::jmp(Label l) { decjz(z_, l); }

void Asm::jz(const Nat& r, Label l) {
  // r == 0: jump (no write); r > 0: decrement, restore, fall through.
  decjz(r, l);
  inc(r);
}

void Asm::jnz(const Nat& r, Label l) {
  Label skip = lbl();
  decjz(r, skip);
  inc(r);
  jmp(l);
  here(skip);
}

void Asm::halt() {
  Label end = lbl();
  label_item_.at(end) = -1;  // resolves to program length
  jmp(end);
}

void Asm::block(MacroOp op, std::vector<Nat> regs, std::vector<Nat> imms) {
  MacroCall c{op, std::move(regs), std::move(imms)};
  items_.push_back({Item::Block, 0, -1, 0, std::move(c)});
}

void Asm::cconst(const Nat& d, const Nat& imm) { block(MacroOp::Const, {d}, {imm}); }
void Asm::copy(const Nat& d, const Nat& s) { block(MacroOp::Copy, {d, s}); }
void Asm::add(const Nat& d, const Nat& a, const Nat& b) { block(MacroOp::Add, {d, a, b}); }
void Asm::sub(const Nat& d, const Nat& a, const Nat& b) { block(MacroOp::Sub, {d, a, b}); }
void Asm::mul(const Nat& d, const Nat& a, const Nat& b) { block(MacroOp::Mul, {d, a, b}); }
void Asm::divmod(const Nat& q, const Nat& r, const Nat& a, const Nat& m) {
  block(MacroOp::DivMod, {q, r, a, m});
}
void Asm::mkpair(const Nat& d, const Nat& a, const Nat& b) { block(MacroOp::Pair, {d, a, b}); }
void Asm::mkproj0(const Nat& d, const Nat& s) { block(MacroOp::Proj0, {d, s}); }
void Asm::mkproj1(const Nat& d, const Nat& s) { block(MacroOp::Proj1, {d, s}); }
void Asm::eq(const Nat& d, const Nat& a, const Nat& b) { block(MacroOp::Eq, {d, a, b}); }
void Asm::lt(const Nat& d, const Nat& a, const Nat& b) { block(MacroOp::Lt, {d, a, b}); }
void Asm::splice(const Nat& d, const Nat& t, const Nat& v) {
  block(MacroOp::Splice, {d, t, v});
}
void Asm::call(const Nat& v, const Nat& e, const Nat& x) {
  block(MacroOp::Run, {v, e, x});
}
void Asm::call_bounded(const Nat& st, const Nat& n, const Nat& v, const Nat& e,
                       const Nat& x, const Nat& f) {
  block(MacroOp::RunB, {st, n, v, e, x, f});
}

Program Asm::assemble() const {
  // Pass 1: item positions.
  std::vector<std::size_t> pos(items_.size() + 1, 0);
  std::size_t at = 0;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    pos[i] = at;
    at += items_[i].kind == Item::Block ? items_[i].call.block_len() : 1;
  }
  pos[items_.size()] = at;
  const std::size_t total = at;

  auto resolve = [&](int label) -> Nat {
    int item = label_item_.at(label);
    if (item == -2) throw std::logic_error("assemble: unbound label");
    if (item == -1) return total;
    return pos[static_cast<std::size_t>(item)];
  };

  // Pass 2: emit.
  Program p;
  p.instrs.reserve(total);
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const Item& it = items_[i];
    switch (it.kind) {
      case Item::PureInc:
        p.instrs.push_back(Instruction::inc(it.reg));
        break;
      case Item::PureDecjzLabel:
        p.instrs.push_back(Instruction::decjz(it.reg, resolve(it.label)));
        break;
      case Item::PureDecjzAbs:
        p.instrs.push_back(Instruction::decjz(it.reg, it.abs_target));
        break;
      case Item::Block: {
        auto instrs = emit_block(it.call, Nat(pos[i]));
        p.instrs.insert(p.instrs.end(), instrs.begin(), instrs.end());
        break;
      }
    }
  }
  return p;
}

}  // namespace insep
