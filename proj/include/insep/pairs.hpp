#pragma once

// Disjoint RE pairs, the eleven property-witness kinds, the sigma
// separation function, and the canonical example pairs.

#include "insep/algebra.hpp"
#include "insep/kernel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace insep {

enum class PropKind {
  EI,
  CEI,
  WEI,
  DG,
  SemiDG,
  DCP,
  WDCP,
  DU,
  SemiDU,
  KP,
  SF,
};

std::string kind_name(PropKind k);
std::optional<PropKind> kind_from_name(const std::string& name);
std::vector<PropKind> all_kinds();

struct Disjointness {
  enum class Mode { ByConstruction, CheckedUpTo } mode =
      Mode::ByConstruction;
  std::string note;
  Nat bound = 0;            // CheckedUpTo
  std::uint64_t fuel = 0;   // CheckedUpTo
  static Disjointness by_construction(std::string why) {
    return {Mode::ByConstruction, std::move(why), 0, 0};
  }
  static Disjointness checked(Nat bound, std::uint64_t fuel) {
    return {Mode::CheckedUpTo, "", std::move(bound), fuel};
  }
};

struct DisjointPair {
  ReSet a;
  ReSet b;
  Disjointness disjointness;
  std::string name;
};

// A property witness. The payload is a total 2-ary program for the
// pointwise kinds, a total 3-ary separation program for SF, and a
// uniformizer mapping pair-index codes <i,j> to reduction indices for
// DU/SemiDU. SF additionally carries the uniformizer taking a packed
// relation-index pair to its h.
struct PropertyWitness {
  PropKind kind;
  Index payload;
  std::optional<Index> sf_uniformizer;
  std::vector<std::string> derivation;
  DisjointPair pair_ref;
};

// The classical pair built from stage comparison of the two halves of the
// input: n is in A when program (n)_0 halts on n strictly before (n)_1,
// and in B in the mirrored case. Comes with its Kleene witness <y,x>.
std::pair<DisjointPair, PropertyWitness> kleene_pair();

// (A_i, A_j) with A_i = {e : phi_e(e) = i}; requires i != j.
DisjointPair value_pair(const Nat& i, const Nat& j);

// (X, Y) with X = {e : phi_e(e) in A}, Y mirrored; A, B disjoint nonempty.
DisjointPair lift_pair(const ReSet& a, const ReSet& b);

// Total 2-ary separation program: on <i,j> returns an index whose W-set
// contains W_i - W_j, is disjoint from the mirrored one, and equals W_i
// when W_i, W_j are disjoint. Membership goes to the side whose program
// halts at the strictly earlier stage; stage ties go to the side with the
// smaller index.
Index sigma();

// Host fast path for the sigma-set of (i, j); agrees with running sigma().
Index sigma_set(const Index& i, const Index& j);

// Witness for the swapped pair via g(i,j) = f(j,i). Rejects DU/SemiDU/SF.
PropertyWitness swap_witness(const PropertyWitness& w);

// Swap a pair (A,B) -> (B,A).
DisjointPair swap_pair(const DisjointPair& p);

}  // namespace insep
