#include "insep/kernel.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace insep {

Nat encode_instruction(const Instruction& ins) {
  if (ins.kind == Instruction::Kind::Inc) return 2 * ins.reg;
  return 2 * pair(ins.reg, ins.target) + 1;
}

Instruction decode_instruction(const Nat& code) {
  if (code % 2 == 0) return Instruction::inc(code / 2);
  Nat r, k;
  unpair((code - 1) / 2, r, k);
  return Instruction::decjz(r, k);
}

Index encode_program(const Program& p) {
  std::vector<Nat> codes;
  codes.reserve(p.instrs.size());
  for (const auto& ins : p.instrs) codes.push_back(encode_instruction(ins));
  return encode_seq(codes);
}

Program decode_program(const Index& i) {
  Program p;
  for (const auto& c : decode_seq(i)) p.instrs.push_back(decode_instruction(c));
  return p;
}

EvalOutcome run_pure(const Program& p, const Nat& x, std::uint64_t max_steps) {
  std::map<Nat, Nat> regs;
  if (x > 0) regs[0] = x;
  Nat len = p.instrs.size();
  Nat pc = 0;
  std::uint64_t steps = 0;
  while (pc < len) {
    if (steps >= max_steps) return EvalOutcome::out_of_fuel();
    const Instruction& ins = p.instrs[static_cast<std::size_t>(pc)];
    if (ins.kind == Instruction::Kind::Inc) {
      regs[ins.reg] += 1;
      ++pc;
    } else {
      auto it = regs.find(ins.reg);
      if (it == regs.end() || it->second == 0) {
        pc = ins.target;
      } else {
        it->second -= 1;
        ++pc;
      }
    }
    ++steps;
  }
  auto it = regs.find(0);
  return EvalOutcome::halt(it == regs.end() ? Nat(0) : it->second, steps);
}

bool kleene_t(const Index& e, const Nat& x, std::uint64_t y) {
  EvalOutcome out = run(e, x, Fuel{y});
  return out.halted && out.steps == y;
}

std::string print_assembly(const Program& p) {
  std::ostringstream os;
  for (const auto& ins : p.instrs) {
    if (ins.kind == Instruction::Kind::Inc) {
      os << "INC r" << ins.reg.str() << "\n";
    } else {
      os << "DECJZ r" << ins.reg.str() << " " << ins.target.str() << "\n";
    }
  }
  return os.str();
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Nat parse_nat(const std::string& tok, const char* what) {
  if (tok.empty()) throw std::runtime_error(std::string("missing ") + what);
  for (char c : tok)
    if (c < '0' || c > '9')
      throw std::runtime_error(std::string("bad ") + what + ": " + tok);
  return Nat(tok);
}

}  // namespace

Program parse_assembly(const std::string& text) {
  Program p;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::size_t sc = line.find(';');
    if (sc != std::string::npos) line = line.substr(0, sc);
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string op, rtok, ktok;
    ls >> op >> rtok;
    auto err = [&](const std::string& msg) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (rtok.size() < 2 || (rtok[0] != 'r' && rtok[0] != 'R'))
      err("expected register operand like r0");
    Nat reg = parse_nat(rtok.substr(1), "register id");
    if (op == "INC" || op == "inc") {
      if (ls >> ktok) err("trailing tokens after INC");
      p.instrs.push_back(Instruction::inc(reg));
    } else if (op == "DECJZ" || op == "decjz") {
      if (!(ls >> ktok)) err("DECJZ needs a jump target");
      std::string extra;
      if (ls >> extra) err("trailing tokens after DECJZ");
      p.instrs.push_back(Instruction::decjz(reg, parse_nat(ktok, "jump target")));
    } else {
      err("unknown opcode: " + op);
    }
  }
  return p;
}

}  // namespace insep
