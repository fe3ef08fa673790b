#pragma once

// Program-building operators: the s-m-n specializer, a universal program,
// composition, preimage transformers, padding, and RE-set builders.

#include "insep/assembler.hpp"
#include "insep/kernel.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace insep {

// An RE set given by the index of a semi-decider: W = {x : run halts}.
struct ReSet {
  Index idx;
  std::string provenance;
  // Present when the set is finite by construction; lets verification
  // refute membership by table lookup.
  std::optional<std::set<Nat>> finite;
};

// s-m-n: run(smn(e,a), x) ~ run(e, pair(a,x)); injective in (e, a).
Index smn(const Index& e, const Nat& a);

// The index UNIV with run(UNIV, pair(e,x)) ~ run(e, x).
Index universal();

// Index of a total program h with W_{h(i)} = g^{-1}[W_i] for total g.
// If g diverges somewhere, those points are silently absent.
Index preimage_transformer(const Index& g);

ReSet finite_set_index(const std::set<Nat>& s);
Index compose_idx(const Index& g, const Index& f);  // x -> g(f(x))
Index pad(const Index& e);

// Shift every jump target by delta (program embedding helper).
Program shift_targets(const Program& p, const Nat& delta);

// Common little programs.
Index prog_identity();        // empty program
Index prog_diverge();         // single self-jump on a zero register
Index prog_const(const Nat& k);
Index prog_succ();            // INC r0
Index prog_total_everywhere();  // halts on everything with value 0

// Dovetailed union/intersection of two semi-deciders.
Index semi_union(const Index& e1, const Index& e2);
Index semi_intersection(const Index& e1, const Index& e2);

// Semi-decider accepting exactly W_e shifted through a host-built finite
// table union: W = W_e ∪ S.
Index semi_union_finite(const Index& e, const std::set<Nat>& s);

}  // namespace insep
