#pragma once

// The fueled test oracle: three-valued membership, disjointness scanning,
// scenario construction, and witness-contract checking with
// machine-readable reports.

#include "insep/kernel.hpp"
#include "insep/pairs.hpp"
#include "insep/scenario.hpp"

#include <set>
#include <string>
#include <vector>

namespace insep {

enum class VerdictKind { Confirmed, Refuted, Unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::uint64_t steps = 0;  // Confirmed
  std::string evidence;     // Refuted
  static Verdict confirmed(std::uint64_t s) {
    return {VerdictKind::Confirmed, s, ""};
  }
  static Verdict refuted(std::string e) {
    return {VerdictKind::Refuted, 0, std::move(e)};
  }
  static Verdict unknown() { return {}; }
  bool is(VerdictKind k) const { return kind == k; }
};

std::string verdict_name(VerdictKind k);

// Confirmed iff the semi-decider halts within fuel; never Refuted.
Verdict member(const Index& e, const Nat& x, Fuel fuel);

// Table-aware: finite-by-construction sets refute non-members by lookup.
Verdict member(const ReSet& s, const Nat& x, Fuel fuel);

// Refuted with a witness if some x < bound is confirmed in both sides;
// otherwise Confirmed, meaning the scan below the bound came back clean.
Verdict scan_disjoint(const DisjointPair& p, const Nat& bound, Fuel fuel);

// A crafted check instance: the pair of set indices handed to a witness,
// with notes on which memberships the suite can decide by construction.
struct Scenario {
  std::string id;
  PropKind kind;
  Premise premise = Premise::Any;
  Index i;
  Index j;
  // Exact contents when the scenario's W-sets are decidable by
  // construction (finite or finite-plus-one-recursion-value).
  std::optional<std::set<Nat>> wi_exact;
  std::optional<std::set<Nat>> wj_exact;
  // Probe points for the uniformizer kinds (packed <x,y> for SF).
  std::vector<Nat> samples;
  std::string note;
};

// W_i = A ∪ extraA, W_j = B ∪ extraB; rejects extras that overlap the
// other side's by-construction contents.
Scenario build_superset_scenario(const DisjointPair& p,
                                 const std::set<Nat>& extra_a,
                                 const std::set<Nat>& extra_b);

// Self-referential scenario for the self-addition clauses: for side left,
// W_i = A ∪ {g(i,j)} and W_j = B; mirrored otherwise. Built with the
// scenario recursion on the marker pair {0}, {1}.
enum class SelfRefSide { Left, Right };
Scenario build_selfref_scenario(const ReSet& c, const ReSet& d, const Index& g,
                                SelfRefSide side);

// Self-value singleton scenarios (one W-set is exactly {f(i,j)}, the other
// empty), closed with the strong double recursion theorem.
Scenario build_singleton_scenario(const Index& payload, SelfRefSide side,
                                  PropKind kind);

// Known-member hints for suite construction over non-finite pairs.
struct SuiteHints {
  std::optional<Nat> known_a;  // a confirmed member of A
  std::optional<Nat> known_b;  // a confirmed member of B
};

// At least three scenarios exercising the witness's contract clauses.
std::vector<Scenario> scenario_suite(const PropertyWitness& w,
                                     const SuiteHints& hints);

struct ClauseReport {
  std::string name;
  std::string premise_verdict;
  std::string conclusion_verdict;
  std::uint64_t fuel = 0;
  std::string status;  // "ok" or "fail"
};

struct Report {
  std::string scenario_id;
  std::string witness_kind;
  std::vector<std::string> derivation;
  std::vector<ClauseReport> clauses;
  std::string overall;  // "pass" or "fail"
  bool passed() const { return overall == "pass"; }
};

std::string report_to_json(const Report& r);

// Evaluate the witness on the scenario and check each contract clause of
// its kind. A clause fails only when a confirmed premise meets a refuted
// conclusion, or a non-membership conclusion gets confirmed membership.
Report check_witness(const PropertyWitness& w, const DisjointPair& p,
                     const Scenario& s, Fuel fuel);

}  // namespace insep
