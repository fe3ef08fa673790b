#pragma once

// Macro blocks: the gadget layer of the machine.
//
// Generated programs are stored in the flat INC/DECJZ coding, with each
// gadget occupying a small marked block:
//
//   DECJZ r_m (pc + 1 + n)     header; r_m = seq([MAGIC, op, reg args...])
//   INC r_imm                  n payload carrier instructions (data, skipped)
//
// The header register is never written, so in raw stepping the header
// jumps over the carriers and the block is inert. The official evaluator
// recognizes blocks and executes each as a single machine step applying
// the op's register transform; Run/RunB steps absorb the steps of the
// nested simulation into the outer count.

#include "insep/kernel.hpp"
#include "insep/nat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace insep {

inline const Nat kMacroMagic = 271828183;

enum class MacroOp : int {
  Const = 0,   // d := imm (one carrier)
  Copy = 1,    // d := s
  Add = 2,     // d := a + b
  Sub = 3,     // d := a - b, truncated at 0
  Mul = 4,     // d := a * b
  DivMod = 5,  // q := a div m, r := a mod m; m = 0 gives q := 0, r := a
  Pair = 6,    // d := <a, b>
  Proj0 = 7,   // d := proj0(s)
  Proj1 = 8,   // d := proj1(s)
  Eq = 9,      // d := a == b ? 1 : 0
  Lt = 10,     // d := a < b ? 1 : 0
  Splice = 11, // d := smn code: specialize template code r[t] on value r[v]
  Run = 12,    // v := output of program r[e] on input r[x]; diverges with it
  RunB = 13,   // st, n, v := bounded run of r[e] on r[x], at most r[f] steps
};

// Register-id argument count and payload carrier count per op.
int macro_reg_args(MacroOp op);
int macro_payloads(MacroOp op);
bool macro_op_valid(int op);

struct MacroCall {
  MacroOp op;
  std::vector<Nat> regs;  // register-id arguments
  std::vector<Nat> imms;  // payload immediates
  std::size_t block_len() const {
    return 1 + static_cast<std::size_t>(macro_payloads(op));
  }
};

// Flat instructions of a block at absolute position pc.
std::vector<Instruction> emit_block(const MacroCall& call, const Nat& pc);

// Marker register id for a call.
Nat block_marker(const MacroCall& call);

// Try to read a block whose header sits at position pc.
std::optional<MacroCall> read_block(const Program& p, std::size_t pc);

}  // namespace insep
