#pragma once

// Official fueled evaluation: block-aware stepping with absorbed nested
// simulation. run() in kernel.hpp is implemented on top of this.

#include "insep/kernel.hpp"
#include "insep/macro.hpp"

#include <cstddef>
#include <map>
#include <memory>

namespace insep {

struct BlockAt {
  MacroCall call;
  Nat marker;
  std::size_t len;
};

struct Procedure {
  Program flat;
  std::map<std::size_t, BlockAt> blocks;  // keyed by header position
};

// Decode and scan for macro blocks.
std::shared_ptr<const Procedure> procedure_for(const Index& e);

// Evaluate a procedure on an input with a step budget.
EvalOutcome exec_procedure(const Procedure& proc, const Nat& input,
                           std::uint64_t budget);

// Drop memoized procedures (test hook).
void clear_procedure_cache();

}  // namespace insep
