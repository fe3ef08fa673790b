#include "insep/macro.hpp"

#include <stdexcept>

namespace insep {

int macro_reg_args(MacroOp op) {
  switch (op) {
    case MacroOp::Const: return 1;   // d
    case MacroOp::Copy: return 2;    // d s
    case MacroOp::Add: return 3;     // d a b
    case MacroOp::Sub: return 3;
    case MacroOp::Mul: return 3;
    case MacroOp::DivMod: return 4;  // q r a m
    case MacroOp::Pair: return 3;    // d a b
    case MacroOp::Proj0: return 2;   // d s
    case MacroOp::Proj1: return 2;
    case MacroOp::Eq: return 3;
    case MacroOp::Lt: return 3;
    case MacroOp::Splice: return 3;  // d t v
    case MacroOp::Run: return 3;     // v e x
    case MacroOp::RunB: return 6;    // st n v e x f
  }
  return -1;
}

int macro_payloads(MacroOp op) { return op == MacroOp::Const ? 1 : 0; }

bool macro_op_valid(int op) {
  return op >= static_cast<int>(MacroOp::Const) &&
         op <= static_cast<int>(MacroOp::RunB);
}

Nat block_marker(const MacroCall& call) {
  std::vector<Nat> pack;
  pack.push_back(kMacroMagic);
  pack.push_back(static_cast<int>(call.op));
  for (const auto& r : call.regs) pack.push_back(r);
  return encode_seq(pack);
}

std::vector<Instruction> emit_block(const MacroCall& call, const Nat& pc) {
  if (static_cast<int>(call.regs.size()) != macro_reg_args(call.op) ||
      static_cast<int>(call.imms.size()) != macro_payloads(call.op))
    throw std::invalid_argument("emit_block: bad call shape");
  std::vector<Instruction> out;
  out.push_back(
      Instruction::decjz(block_marker(call), pc + 1 + macro_payloads(call.op)));
  for (const auto& imm : call.imms) out.push_back(Instruction::inc(imm));
  return out;
}

std::optional<MacroCall> read_block(const Program& p, std::size_t pc) {
  if (pc >= p.instrs.size()) return std::nullopt;
  const Instruction& head = p.instrs[pc];
  if (head.kind != Instruction::Kind::Decjz) return std::nullopt;
  // Cheap screen before decoding the whole register id as a sequence.
  if (head.reg < kMacroMagic) return std::nullopt;
  std::vector<Nat> pack = decode_seq(head.reg);
  if (pack.size() < 2 || pack[0] != kMacroMagic) return std::nullopt;
  if (pack[1] > 64) return std::nullopt;
  int opn = static_cast<int>(pack[1]);
  if (!macro_op_valid(opn)) return std::nullopt;
  MacroOp op = static_cast<MacroOp>(opn);
  int nregs = macro_reg_args(op);
  int npay = macro_payloads(op);
  if (static_cast<int>(pack.size()) != 2 + nregs) return std::nullopt;
  if (head.target != Nat(pc) + 1 + npay) return std::nullopt;
  if (pc + 1 + npay > p.instrs.size()) return std::nullopt;
  MacroCall call;
  call.op = op;
  call.regs.assign(pack.begin() + 2, pack.end());
  for (int i = 0; i < npay; ++i) {
    const Instruction& carrier = p.instrs[pc + 1 + i];
    if (carrier.kind != Instruction::Kind::Inc) return std::nullopt;
    call.imms.push_back(carrier.reg);
  }
  return call;
}

}  // namespace insep
