#pragma once

// Constructive fixed points: Kleene's recursion theorem, the strong double
// recursion theorem, and its cross-wired, parametrized and scenario forms.
//
// The double constructions return indices of total 2-ary (resp. 1-ary)
// programs t1, t2 built by self-applicable specialization: each generated
// W-set program recovers its own index (and its twin's) with Splice before
// consulting the relation.

#include "insep/algebra.hpp"
#include "insep/kernel.hpp"

#include <utility>

namespace insep {

// A k-ary RE relation as a semi-decider over the right-nested tuple of its
// arguments: the relation holds iff the program halts.
struct ReRelation {
  int arity;
  Index prog;
};

// Relation builders used throughout (coordinates are 0-based positions in
// the right-nested tuple).
ReRelation rel_never(int arity);
ReRelation rel_eq_coords(int arity, int i, int j);
ReRelation rel_member_coord(int arity, int value_coord, int index_coord);
ReRelation rel_or(const ReRelation& r1, const ReRelation& r2);

// Fixed point of a total index transformer: run(n, x) ~ run(F(n), x).
Index kleene_fixed_point(const Index& F);

// Strong double recursion: returns indices t1, t2 of total 2-ary programs
// with W at t1(i,j) = {x : R1(x, i, j, t1(i,j), t2(i,j))}, and
// symmetrically for t2/R2.
std::pair<Index, Index> sdrt(const ReRelation& r1, const ReRelation& r2);

// Cross-wired form: W at t1(y1,y2) = {x : M1(x, y2, t1(..), t2(..))} and
// W at t2(y1,y2) = {x : M2(x, y1, t1(..), t2(..))}; M1, M2 are 4-ary.
std::pair<Index, Index> cross_recursion(const ReRelation& m1,
                                        const ReRelation& m2);

// Parametrized form: for total 2-ary g, W at f1(y) =
// {x : M1(x, y, g(f1(y), f2(y)))}; M1, M2 are 3-ary.
std::pair<Index, Index> param_recursion(const ReRelation& m1,
                                        const ReRelation& m2, const Index& g);

// Scenario form for disjoint (A,B) and RE (C,D) with total 2-ary g:
//   y in A:        W_f1(y) = C,                      W_f2(y) = D + {g(f1,f2)}
//   y in B:        W_f1(y) = C + {g(f1,f2)},         W_f2(y) = D
//   y outside:     W_f1(y) = C,                      W_f2(y) = D
std::pair<Index, Index> scenario_recursion(const ReSet& a, const ReSet& b,
                                           const ReSet& c, const ReSet& d,
                                           const Index& g);

// Apply an index of a total k-ary program to a packed argument, expecting
// it to halt within the fuel; throws on fuel exhaustion.
Nat apply_total(const Index& f, const Nat& packed_arg,
                std::uint64_t fuel = 50'000'000);

}  // namespace insep
