#pragma once

// Scenario premises and suite construction for witness checking.

#include "insep/pairs.hpp"

#include <optional>
#include <set>

namespace insep {

// Which hypothesis of the witness contract the scenario instantiates by
// construction.
enum class Premise {
  Any,                // KP: no hypothesis
  Supersets,          // A in W_i, B in W_j
  SupersetsDisjoint,  // ... and W_i, W_j disjoint
  Disjoint,           // W_i, W_j disjoint
  DcpDisjoint,        // disjoint, W_i misses A, W_j misses B
  ExactPair,          // W_i = A, W_j = B
  SelfLeft,           // W_i = A + {f(i,j)}, W_j = B
  SelfRight,          // W_i = A, W_j = B + {f(i,j)}
  EmptyBoth,          // W_i = W_j = empty
  SingletonLeft,      // W_i = {f(i,j)}, W_j = empty
  SingletonRight,     // W_i = empty, W_j = {f(i,j)}
  ReduciblePair,      // DU/SemiDU: (i,j) is the disjoint pair to reduce
  RelationPair,       // SF: (i,j) are 2-ary relation semi-deciders
};

std::string premise_name(Premise p);

}  // namespace insep
