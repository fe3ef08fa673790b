#pragma once

// The model of computation: two-instruction register machines over
// unbounded naturals, their bijective numbering, fueled evaluation and
// the Kleene T predicate.
//
// Per-step semantics: INC r adds 1 to register r and advances; DECJZ r k
// jumps to k if register r is 0, else decrements and advances. The
// machine halts when the program counter leaves [0, length). Input is in
// register 0 (all others 0), output is register 0 at halt.
//
// Fuel counts steps of the outermost machine actually run. Recognized
// macro blocks (see macro.hpp) execute as single steps, and nested
// simulation performed by a block is absorbed into the outer step count.

#include "insep/nat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace insep {

struct Instruction {
  enum class Kind { Inc, Decjz };
  Kind kind = Kind::Inc;
  Nat reg = 0;
  Nat target = 0;  // jump target, Decjz only

  static Instruction inc(Nat r) { return {Kind::Inc, std::move(r), 0}; }
  static Instruction decjz(Nat r, Nat k) {
    return {Kind::Decjz, std::move(r), std::move(k)};
  }
  bool operator==(const Instruction& o) const {
    return kind == o.kind && reg == o.reg &&
           (kind == Kind::Inc || target == o.target);
  }
};

struct Program {
  std::vector<Instruction> instrs;
  bool operator==(const Program& o) const { return instrs == o.instrs; }
  std::size_t size() const { return instrs.size(); }
};

// Index <-> Program is a total bijection on the naturals.
// Instruction code: INC r -> 2r, DECJZ r k -> 2<r,k>+1.
// Sequence code: the linear-size bijection from nat.hpp.
using Index = Nat;

Nat encode_instruction(const Instruction& ins);
Instruction decode_instruction(const Nat& code);
Index encode_program(const Program& p);
Program decode_program(const Index& i);

struct Fuel {
  std::uint64_t steps = 0;
};

struct EvalOutcome {
  bool halted = false;
  Nat value = 0;           // register 0 at halt
  std::uint64_t steps = 0; // meaningful when halted
  static EvalOutcome out_of_fuel() { return {}; }
  static EvalOutcome halt(Nat v, std::uint64_t s) { return {true, std::move(v), s}; }
};

// Official fueled evaluation (macro-aware; see eval.cpp).
EvalOutcome run(const Index& e, const Nat& x, Fuel fuel);

// Reference evaluator: pure unit-cost stepping of the flat code, no block
// recognition. Agrees with run() on halting behavior and value; step
// accounting differs on macro-bearing code. Test-facing.
EvalOutcome run_pure(const Program& p, const Nat& x, std::uint64_t max_steps);

// T1(e, x, y): e on x halts at exactly step y (official accounting).
bool kleene_t(const Index& e, const Nat& x, std::uint64_t y);

// Line-oriented assembly: one instruction per line, `INC r<n>` or
// `DECJZ r<n> <k>`; `;` starts a comment; instruction indices 0-based.
std::string print_assembly(const Program& p);
Program parse_assembly(const std::string& text);  // throws std::runtime_error

}  // namespace insep
