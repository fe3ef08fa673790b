#include "insep/eval.hpp"

#include "insep/algebra.hpp"

#include <mutex>
#include <unordered_map>
#include <vector>

namespace insep {

namespace {

// Sparse register file; small ids are the common case.
class RegFile {
 public:
  const Nat& get(const Nat& r) const {
    if (r < kLow) {
      std::size_t i = static_cast<std::size_t>(r);
      if (i < low_.size()) return low_[i];
      return kZero;
    }
    auto it = high_.find(r);
    return it == high_.end() ? kZero : it->second;
  }

  void set(const Nat& r, Nat v) {
    if (r < kLow) {
      std::size_t i = static_cast<std::size_t>(r);
      if (i >= low_.size()) {
        if (v == 0) return;
        low_.resize(i + 1);
      }
      low_[i] = std::move(v);
      return;
    }
    if (v == 0) {
      high_.erase(r);
    } else {
      high_[r] = std::move(v);
    }
  }

  void inc(const Nat& r) {
    if (r < kLow) {
      std::size_t i = static_cast<std::size_t>(r);
      if (i >= low_.size()) low_.resize(i + 1);
      ++low_[i];
      return;
    }
    ++high_[r];
  }

  // Returns false when the register is zero; otherwise decrements.
  bool dec_if_positive(const Nat& r) {
    if (r < kLow) {
      std::size_t i = static_cast<std::size_t>(r);
      if (i >= low_.size() || low_[i] == 0) return false;
      --low_[i];
      return true;
    }
    auto it = high_.find(r);
    if (it == high_.end() || it->second == 0) return false;
    if (--it->second == 0) high_.erase(it);
    return true;
  }

 private:
  static constexpr int kLow = 4096;
  inline static const Nat kZero = 0;
  std::vector<Nat> low_;
  std::map<Nat, Nat> high_;
};

struct NatHash {
  std::size_t operator()(const Nat& n) const {
    return boost::multiprecision::hash_value(n);
  }
};

std::mutex g_cache_mutex;
std::unordered_map<Nat, std::shared_ptr<const Procedure>, NatHash> g_cache;

}  // namespace

std::shared_ptr<const Procedure> procedure_for(const Index& e) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(e);
    if (it != g_cache.end()) return it->second;
  }
  auto proc = std::make_shared<Procedure>();
  proc->flat = decode_program(e);
  for (std::size_t pc = 0; pc < proc->flat.instrs.size(); ++pc) {
    if (auto call = read_block(proc->flat, pc)) {
      std::size_t len = call->block_len();
      proc->blocks.emplace(pc, BlockAt{*call, block_marker(*call), len});
      pc += len - 1;
    }
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = g_cache.emplace(e, proc);
  return it->second;
}

void clear_procedure_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.clear();
}

EvalOutcome exec_procedure(const Procedure& proc, const Nat& input,
                           std::uint64_t budget) {
  RegFile regs;
  regs.set(0, input);
  const std::size_t len = proc.flat.instrs.size();
  Nat pc = 0;
  std::uint64_t consumed = 0;
  while (pc < len) {
    if (consumed >= budget) return EvalOutcome::out_of_fuel();
    std::size_t pci = static_cast<std::size_t>(pc);
    auto bit = proc.blocks.find(pci);
    if (bit != proc.blocks.end() && regs.get(bit->second.marker) == 0) {
      const MacroCall& c = bit->second.call;
      const auto& r = c.regs;
      switch (c.op) {
        case MacroOp::Const:
          regs.set(r[0], c.imms[0]);
          break;
        case MacroOp::Copy:
          regs.set(r[0], regs.get(r[1]));
          break;
        case MacroOp::Add:
          regs.set(r[0], regs.get(r[1]) + regs.get(r[2]));
          break;
        case MacroOp::Sub: {
          const Nat& a = regs.get(r[1]);
          const Nat& b = regs.get(r[2]);
          regs.set(r[0], a > b ? Nat(a - b) : Nat(0));
          break;
        }
        case MacroOp::Mul:
          regs.set(r[0], regs.get(r[1]) * regs.get(r[2]));
          break;
        case MacroOp::DivMod: {
          const Nat& a = regs.get(r[2]);
          const Nat& m = regs.get(r[3]);
          if (m == 0) {
            regs.set(r[0], 0);
            regs.set(r[1], a);
          } else {
            regs.set(r[0], a / m);
            regs.set(r[1], a % m);
          }
          break;
        }
        case MacroOp::Pair:
          regs.set(r[0], pair(regs.get(r[1]), regs.get(r[2])));
          break;
        case MacroOp::Proj0:
          regs.set(r[0], proj0(regs.get(r[1])));
          break;
        case MacroOp::Proj1:
          regs.set(r[0], proj1(regs.get(r[1])));
          break;
        case MacroOp::Eq:
          regs.set(r[0], regs.get(r[1]) == regs.get(r[2]) ? 1 : 0);
          break;
        case MacroOp::Lt:
          regs.set(r[0], regs.get(r[1]) < regs.get(r[2]) ? 1 : 0);
          break;
        case MacroOp::Splice:
          regs.set(r[0], smn(regs.get(r[1]), regs.get(r[2])));
          break;
        case MacroOp::Run: {
          if (budget - consumed < 1) return EvalOutcome::out_of_fuel();
          std::uint64_t inner_budget = budget - consumed - 1;
          auto inner = procedure_for(regs.get(r[1]));
          EvalOutcome out = exec_procedure(*inner, regs.get(r[2]), inner_budget);
          if (!out.halted) return EvalOutcome::out_of_fuel();
          consumed += out.steps;
          regs.set(r[0], out.value);
          break;
        }
        case MacroOp::RunB: {
          if (budget - consumed < 1) return EvalOutcome::out_of_fuel();
          std::uint64_t remaining = budget - consumed - 1;
          const Nat& f = regs.get(r[5]);
          std::uint64_t bound =
              f < remaining ? static_cast<std::uint64_t>(f) : remaining;
          auto inner = procedure_for(regs.get(r[3]));
          EvalOutcome out = exec_procedure(*inner, regs.get(r[4]), bound);
          if (out.halted) {
            consumed += out.steps;
            regs.set(r[0], 1);
            regs.set(r[1], out.steps);
            regs.set(r[2], out.value);
          } else if (Nat(bound) == f) {
            consumed += bound;
            regs.set(r[0], 0);
            regs.set(r[1], 0);
            regs.set(r[2], 0);
          } else {
            return EvalOutcome::out_of_fuel();  // bound truncated by fuel
          }
          break;
        }
      }
      ++consumed;
      pc += bit->second.len;
      continue;
    }
    const Instruction& ins = proc.flat.instrs[pci];
    if (ins.kind == Instruction::Kind::Inc) {
      regs.inc(ins.reg);
      pc += 1;
    } else if (regs.dec_if_positive(ins.reg)) {
      pc += 1;
    } else {
      pc = ins.target;
    }
    ++consumed;
  }
  return EvalOutcome::halt(regs.get(0), consumed);
}

EvalOutcome run(const Index& e, const Nat& x, Fuel fuel) {
  auto proc = procedure_for(e);
  return exec_procedure(*proc, x, fuel.steps);
}

}  // namespace insep
