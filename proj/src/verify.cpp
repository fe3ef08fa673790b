#include "insep/verify.hpp"

#include "insep/assembler.hpp"
#include "insep/eval.hpp"
#include "insep/recursion.hpp"

#include "json.hpp"

#include <stdexcept>

namespace insep {

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Confirmed: return "confirmed";
    case VerdictKind::Refuted: return "refuted";
    case VerdictKind::Unknown: return "unknown";
  }
  return "?";
}

std::string premise_name(Premise p) {
  switch (p) {
    case Premise::Any: return "any";
    case Premise::Supersets: return "supersets";
    case Premise::SupersetsDisjoint: return "supersets-disjoint";
    case Premise::Disjoint: return "disjoint";
    case Premise::DcpDisjoint: return "dcp-disjoint";
    case Premise::ExactPair: return "exact-pair";
    case Premise::SelfLeft: return "self-left";
    case Premise::SelfRight: return "self-right";
    case Premise::EmptyBoth: return "empty-both";
    case Premise::SingletonLeft: return "singleton-left";
    case Premise::SingletonRight: return "singleton-right";
    case Premise::ReduciblePair: return "reducible-pair";
    case Premise::RelationPair: return "relation-pair";
  }
  return "?";
}

Verdict member(const Index& e, const Nat& x, Fuel fuel) {
  EvalOutcome out = run(e, x, fuel);
  return out.halted ? Verdict::confirmed(out.steps) : Verdict::unknown();
}

Verdict member(const ReSet& s, const Nat& x, Fuel fuel) {
  if (s.finite) {
    if (s.finite->count(x) == 0)
      return Verdict::refuted("absent from finite table");
    EvalOutcome out = run(s.idx, x, fuel);
    return Verdict::confirmed(out.halted ? out.steps : 0);
  }
  return member(s.idx, x, fuel);
}

Verdict scan_disjoint(const DisjointPair& p, const Nat& bound, Fuel fuel) {
  for (Nat x = 0; x < bound; ++x) {
    Verdict va = member(p.a, x, fuel);
    if (!va.is(VerdictKind::Confirmed)) continue;
    Verdict vb = member(p.b, x, fuel);
    if (vb.is(VerdictKind::Confirmed))
      return Verdict::refuted("both sides confirmed at " + x.str());
  }
  return Verdict::confirmed(0);
}

namespace {

// Table-aware membership for scenario W-sets.
Verdict mem_scen(const Index& idx, const std::optional<std::set<Nat>>& exact,
                 const Nat& x, Fuel fuel) {
  if (exact) {
    if (exact->count(x) == 0) return Verdict::refuted("absent from scenario table");
    EvalOutcome out = run(idx, x, fuel);
    return Verdict::confirmed(out.halted ? out.steps : 0);
  }
  return member(idx, x, fuel);
}

std::string vn(const Verdict& v) { return verdict_name(v.kind); }

struct Checker {
  const PropertyWitness& w;
  const DisjointPair& p;
  const Scenario& s;
  Fuel fuel;
  Report rep;
  bool failed = false;

  void clause(const std::string& name, const std::string& premise,
              const std::string& conclusion, bool fail) {
    rep.clauses.push_back(
        {name, premise, conclusion, fuel.steps, fail ? "fail" : "ok"});
    failed = failed || fail;
  }

  // conclusion "value not in X"
  void not_in(const std::string& name, const Verdict& m) {
    clause(name, "by-construction", vn(m), m.is(VerdictKind::Confirmed));
  }
  // conclusion "value in X"
  void is_in(const std::string& name, const Verdict& m) {
    clause(name, "by-construction", vn(m), m.is(VerdictKind::Refuted));
  }
  // "lhs iff rhs" as two definite-contradiction checks
  void iff(const std::string& name, const Verdict& l, const Verdict& r) {
    bool fail = (l.is(VerdictKind::Confirmed) && r.is(VerdictKind::Refuted)) ||
                (l.is(VerdictKind::Refuted) && r.is(VerdictKind::Confirmed));
    clause(name, vn(l), vn(r), fail);
  }
  // "premise implies conclusion-membership"
  void implies_in(const std::string& name, bool premise_true,
                  bool premise_false, const Verdict& m) {
    std::string pv = premise_true ? "confirmed" : (premise_false ? "refuted" : "unknown");
    clause(name, pv, vn(m), premise_true && m.is(VerdictKind::Refuted));
  }

  std::optional<Nat> eval(const Index& f, const Nat& x) {
    EvalOutcome out = run(f, x, fuel);
    if (!out.halted) {
      clause("witness-evaluation-total", "by-construction", "unknown", true);
      return std::nullopt;
    }
    return out.value;
  }
};

}  // namespace

Report check_witness(const PropertyWitness& w, const DisjointPair& p,
                     const Scenario& s, Fuel fuel) {
  if (s.kind != w.kind)
    throw std::invalid_argument("check_witness: scenario kind " +
                                kind_name(s.kind) + " does not match witness " +
                                kind_name(w.kind));
  Checker c{w, p, s, fuel, {}, false};
  c.rep.scenario_id = s.id;
  c.rep.witness_kind = kind_name(w.kind);
  c.rep.derivation = w.derivation;

  auto wi = [&](const Nat& x) { return mem_scen(s.i, s.wi_exact, x, fuel); };
  auto wj = [&](const Nat& x) { return mem_scen(s.j, s.wj_exact, x, fuel); };
  auto in_a = [&](const Nat& x) { return member(p.a, x, fuel); };
  auto in_b = [&](const Nat& x) { return member(p.b, x, fuel); };

  switch (w.kind) {
    case PropKind::EI: {
      auto val = c.eval(w.payload, pair(s.i, s.j));
      if (!val) break;
      c.not_in("value outside W_i", wi(*val));
      c.not_in("value outside W_j", wj(*val));
      break;
    }
    case PropKind::CEI: {
      auto val = c.eval(w.payload, pair(s.i, s.j));
      if (!val) break;
      c.iff("value in W_i iff in W_j", wi(*val), wj(*val));
      break;
    }
    case PropKind::WEI: {
      auto val = c.eval(w.payload, pair(s.i, s.j));
      if (!val) break;
      if (s.premise == Premise::ExactPair) {
        c.not_in("value outside A", in_a(*val));
        c.not_in("value outside B", in_b(*val));
      } else if (s.premise == Premise::SelfRight) {
        c.is_in("value lands in A", in_a(*val));
      } else if (s.premise == Premise::SelfLeft) {
        c.is_in("value lands in B", in_b(*val));
      } else {
        throw std::invalid_argument("WEI scenario premise unsupported");
      }
      break;
    }
    case PropKind::DG: {
      auto val = c.eval(w.payload, pair(s.i, s.j));
      if (!val) break;
      c.iff("value in A iff in W_i", in_a(*val), wi(*val));
      c.iff("value in B iff in W_j", in_b(*val), wj(*val));
      break;
    }
    case PropKind::SemiDG: {
      auto val = c.eval(w.payload, pair(s.i, s.j));
      if (!val) break;
      Verdict mi = wi(*val), mj = wj(*val);
      c.implies_in("in W_i forces A", mi.is(VerdictKind::Confirmed),
                   mi.is(VerdictKind::Refuted), in_a(*val));
      c.implies_in("in W_j forces B", mj.is(VerdictKind::Confirmed),
                   mj.is(VerdictKind::Refuted), in_b(*val));
      break;
    }
    case PropKind::DCP: {
      auto val = c.eval(w.payload, pair(s.i, s.j));
      if (!val) break;
      c.not_in("value outside A", in_a(*val));
      c.not_in("value outside B", in_b(*val));
      c.not_in("value outside W_i", wi(*val));
      c.not_in("value outside W_j", wj(*val));
      break;
    }
    case PropKind::WDCP: {
      auto val = c.eval(w.payload, pair(s.i, s.j));
      if (!val) break;
      if (s.premise == Premise::EmptyBoth) {
        c.not_in("value outside A", in_a(*val));
        c.not_in("value outside B", in_b(*val));
      } else if (s.premise == Premise::SingletonRight) {
        c.is_in("value lands in B", in_b(*val));
      } else if (s.premise == Premise::SingletonLeft) {
        c.is_in("value lands in A", in_a(*val));
      } else {
        throw std::invalid_argument("WDCP scenario premise unsupported");
      }
      break;
    }
    case PropKind::KP: {
      auto val = c.eval(w.payload, pair(s.i, s.j));
      if (!val) break;
      Verdict mi = wi(*val), mj = wj(*val);
      bool p1_true = mj.is(VerdictKind::Confirmed) && mi.is(VerdictKind::Refuted);
      bool p1_false = mj.is(VerdictKind::Refuted) || mi.is(VerdictKind::Confirmed);
      c.implies_in("in W_j minus W_i forces A", p1_true, p1_false, in_a(*val));
      bool p2_true = mi.is(VerdictKind::Confirmed) && mj.is(VerdictKind::Refuted);
      bool p2_false = mi.is(VerdictKind::Refuted) || mj.is(VerdictKind::Confirmed);
      c.implies_in("in W_i minus W_j forces B", p2_true, p2_false, in_b(*val));
      break;
    }
    case PropKind::DU:
    case PropKind::SemiDU: {
      auto red = c.eval(w.payload, pair(s.i, s.j));
      if (!red) break;
      for (const Nat& y : s.samples) {
        bool in_first = s.wi_exact && s.wi_exact->count(y) > 0;
        bool in_second = s.wj_exact && s.wj_exact->count(y) > 0;
        EvalOutcome hy = run(*red, y, fuel);
        if (!hy.halted) {
          c.clause("reduction total at " + y.str(), "by-construction",
                   "unknown", true);
          continue;
        }
        if (in_first) {
          c.is_in("maps " + y.str() + " into A", in_a(hy.value));
        } else if (in_second) {
          c.is_in("maps " + y.str() + " into B", in_b(hy.value));
        } else if (w.kind == PropKind::DU) {
          c.not_in("maps outside " + y.str() + " outside A", in_a(hy.value));
          c.not_in("maps outside " + y.str() + " outside B", in_b(hy.value));
        }
      }
      break;
    }
    case PropKind::SF: {
      if (!w.sf_uniformizer)
        throw std::invalid_argument("SF witness lacks a uniformizer");
      auto h = c.eval(*w.sf_uniformizer, pair(s.i, s.j));
      if (!h) break;
      for (const Nat& q : s.samples) {
        Nat x = proj0(q), y = proj1(q);
        bool m1 = s.wi_exact && s.wi_exact->count(q) > 0;
        bool m2 = s.wj_exact && s.wj_exact->count(q) > 0;
        auto v = c.eval(w.payload, tuple({*h, x, y}));
        if (!v) continue;
        c.implies_in("M1 minus M2 at <" + x.str() + "," + y.str() + "> forces A",
                     m1 && !m2, !m1 || m2, in_a(*v));
        c.implies_in("M2 minus M1 at <" + x.str() + "," + y.str() + "> forces B",
                     m2 && !m1, !m2 || m1, in_b(*v));
      }
      break;
    }
  }
  c.rep.overall = c.failed ? "fail" : "pass";
  return c.rep;
}

std::string report_to_json(const Report& r) {
  nlohmann::json j;
  j["scenario_id"] = r.scenario_id;
  j["witness_kind"] = r.witness_kind;
  j["derivation"] = r.derivation;
  j["clauses"] = nlohmann::json::array();
  for (const auto& cl : r.clauses) {
    j["clauses"].push_back({{"name", cl.name},
                            {"premise_verdict", cl.premise_verdict},
                            {"conclusion_verdict", cl.conclusion_verdict},
                            {"fuel", cl.fuel},
                            {"status", cl.status}});
  }
  j["overall"] = r.overall;
  return j.dump(2);
}

Scenario build_superset_scenario(const DisjointPair& p,
                                 const std::set<Nat>& extra_a,
                                 const std::set<Nat>& extra_b) {
  for (const Nat& x : extra_a)
    if (extra_b.count(x) || (p.b.finite && p.b.finite->count(x)))
      throw std::invalid_argument("superset scenario: extras collide at " +
                                  x.str());
  for (const Nat& x : extra_b)
    if (p.a.finite && p.a.finite->count(x))
      throw std::invalid_argument("superset scenario: extras collide at " +
                                  x.str());
  Scenario s;
  s.kind = PropKind::EI;
  s.premise = Premise::SupersetsDisjoint;
  s.i = extra_a.empty() ? p.a.idx : semi_union_finite(p.a.idx, extra_a);
  s.j = extra_b.empty() ? p.b.idx : semi_union_finite(p.b.idx, extra_b);
  if (p.a.finite) {
    std::set<Nat> t = *p.a.finite;
    t.insert(extra_a.begin(), extra_a.end());
    s.wi_exact = t;
  }
  if (p.b.finite) {
    std::set<Nat> t = *p.b.finite;
    t.insert(extra_b.begin(), extra_b.end());
    s.wj_exact = t;
  }
  s.note = "supersets with finite extras";
  return s;
}

Scenario build_selfref_scenario(const ReSet& cset, const ReSet& dset,
                                const Index& g, SelfRefSide side) {
  auto [f1, f2] = scenario_recursion(finite_set_index({0}), finite_set_index({1}),
                                     cset, dset, g);
  Nat y = side == SelfRefSide::Right ? 0 : 1;
  Index i = apply_total(f1, y);
  Index j = apply_total(f2, y);
  Nat val = apply_total(g, pair(i, j));
  Scenario s;
  s.kind = PropKind::WEI;
  s.premise = side == SelfRefSide::Right ? Premise::SelfRight : Premise::SelfLeft;
  s.i = i;
  s.j = j;
  if (cset.finite) {
    std::set<Nat> t = *cset.finite;
    if (side == SelfRefSide::Left) t.insert(val);
    s.wi_exact = t;
  }
  if (dset.finite) {
    std::set<Nat> t = *dset.finite;
    if (side == SelfRefSide::Right) t.insert(val);
    s.wj_exact = t;
  }
  s.note = "recursion-built self superset, added value " + val.str();
  return s;
}

Scenario build_singleton_scenario(const Index& payload, SelfRefSide side,
                                  PropKind kind) {
  // R(x, i, j, z1, z2) holds iff x = payload(z1, z2).
  Asm a;
  Nat rest = 0;
  std::vector<Nat> coords;
  for (int k = 0; k + 1 < 5; ++k) {
    Nat head = a.temp(), tail = a.temp();
    a.mkproj0(head, rest);
    a.mkproj1(tail, rest);
    coords.push_back(head);
    rest = tail;
  }
  coords.push_back(rest);
  Nat zz = a.temp(), pc = a.temp(), pv = a.temp(), t = a.temp();
  a.mkpair(zz, coords[3], coords[4]);
  a.cconst(pc, payload);
  a.call(pv, pc, zz);
  a.eq(t, coords[0], pv);
  Asm::Label loop = a.lbl(), acc = a.lbl();
  a.jnz(t, acc);
  a.here(loop);
  a.jmp(loop);
  a.here(acc);
  ReRelation self{5, encode_program(a.assemble())};
  ReRelation never = rel_never(5);

  auto [t1, t2] = side == SelfRefSide::Left ? sdrt(self, never) : sdrt(never, self);
  Index i = apply_total(t1, pair(0, 0));
  Index j = apply_total(t2, pair(0, 0));
  Nat val = apply_total(payload, pair(i, j));
  Scenario s;
  s.kind = kind;
  s.premise =
      side == SelfRefSide::Left ? Premise::SingletonLeft : Premise::SingletonRight;
  s.i = i;
  s.j = j;
  s.wi_exact = side == SelfRefSide::Left ? std::set<Nat>{val} : std::set<Nat>{};
  s.wj_exact = side == SelfRefSide::Left ? std::set<Nat>{} : std::set<Nat>{val};
  s.note = "self-value singleton, value " + val.str();
  return s;
}

namespace {

Scenario mk(PropKind kind, Premise prem, std::string id, Index i, Index j,
            std::optional<std::set<Nat>> wi, std::optional<std::set<Nat>> wj,
            std::vector<Nat> samples = {}) {
  Scenario s;
  s.kind = kind;
  s.premise = prem;
  s.id = std::move(id);
  s.i = std::move(i);
  s.j = std::move(j);
  s.wi_exact = std::move(wi);
  s.wj_exact = std::move(wj);
  s.samples = std::move(samples);
  return s;
}

}  // namespace

std::vector<Scenario> scenario_suite(const PropertyWitness& w,
                                     const SuiteHints& hints) {
  const DisjointPair& p = w.pair_ref;
  std::string kn = kind_name(w.kind);
  std::vector<Scenario> out;
  Index empty1 = finite_set_index({}).idx;
  Index empty2 = pad(empty1);
  Index every = prog_total_everywhere();

  auto extras_a = [&]() -> std::set<Nat> {
    if (p.a.finite) {
      Nat fresh = 0;
      while (p.a.finite->count(fresh) || (p.b.finite && p.b.finite->count(fresh)))
        ++fresh;
      return {fresh};
    }
    if (hints.known_a) return {*hints.known_a};
    return {};
  };
  auto extras_b = [&]() -> std::set<Nat> {
    if (p.b.finite) {
      Nat fresh = 1;
      while (p.b.finite->count(fresh) || (p.a.finite && p.a.finite->count(fresh)))
        ++fresh;
      return {fresh};
    }
    if (hints.known_b) return {*hints.known_b};
    return {};
  };

  switch (w.kind) {
    case PropKind::EI:
    case PropKind::CEI: {
      Premise prem = w.kind == PropKind::EI ? Premise::SupersetsDisjoint
                                            : Premise::Supersets;
      Scenario s1 = build_superset_scenario(p, {}, {});
      s1.kind = w.kind;
      s1.premise = prem;
      s1.id = kn + "-no-extras";
      out.push_back(s1);
      Scenario s2 = build_superset_scenario(p, extras_a(), {});
      s2.kind = w.kind;
      s2.premise = prem;
      s2.id = kn + "-extra-left";
      out.push_back(s2);
      Scenario s3 = build_superset_scenario(p, extras_a(), extras_b());
      s3.kind = w.kind;
      s3.premise = prem;
      s3.id = kn + "-extra-both";
      out.push_back(s3);
      if (w.kind == PropKind::CEI) {
        out.push_back(mk(w.kind, prem, kn + "-everything", every, pad(every),
                         std::nullopt, std::nullopt));
      }
      break;
    }
    case PropKind::WEI: {
      out.push_back(mk(w.kind, Premise::ExactPair, kn + "-exact", p.a.idx,
                       p.b.idx, p.a.finite, p.b.finite));
      Scenario r = build_selfref_scenario(p.a, p.b, w.payload, SelfRefSide::Right);
      r.id = kn + "-self-right";
      out.push_back(r);
      Scenario l = build_selfref_scenario(p.a, p.b, w.payload, SelfRefSide::Left);
      l.id = kn + "-self-left";
      out.push_back(l);
      break;
    }
    case PropKind::DG:
    case PropKind::SemiDG: {
      out.push_back(mk(w.kind, Premise::Disjoint, kn + "-own-pair", p.a.idx,
                       p.b.idx, p.a.finite, p.b.finite));
      Scenario sl = build_singleton_scenario(w.payload, SelfRefSide::Left, w.kind);
      sl.premise = Premise::Disjoint;
      sl.id = kn + "-singleton-left";
      out.push_back(sl);
      Scenario sr = build_singleton_scenario(w.payload, SelfRefSide::Right, w.kind);
      sr.premise = Premise::Disjoint;
      sr.id = kn + "-singleton-right";
      out.push_back(sr);
      out.push_back(mk(w.kind, Premise::Disjoint, kn + "-empty", empty1, empty2,
                       std::set<Nat>{}, std::set<Nat>{}));
      break;
    }
    case PropKind::DCP: {
      out.push_back(mk(w.kind, Premise::DcpDisjoint, kn + "-empty", empty1,
                       empty2, std::set<Nat>{}, std::set<Nat>{}));
      // Sides swapped: W_i = B misses A, W_j = A misses B.
      out.push_back(mk(w.kind, Premise::DcpDisjoint, kn + "-swapped-full",
                       p.b.idx, p.a.idx, p.b.finite, p.a.finite));
      std::set<Nat> fa = extras_b();  // a B-member misses A
      std::set<Nat> fb = extras_a();
      out.push_back(mk(w.kind, Premise::DcpDisjoint, kn + "-cross-singletons",
                       fa.empty() ? empty1 : finite_set_index(fa).idx,
                       fb.empty() ? empty2 : finite_set_index(fb).idx,
                       fa, fb));
      break;
    }
    case PropKind::WDCP: {
      out.push_back(mk(w.kind, Premise::EmptyBoth, kn + "-empty", empty1,
                       empty2, std::set<Nat>{}, std::set<Nat>{}));
      Scenario sl = build_singleton_scenario(w.payload, SelfRefSide::Left, w.kind);
      sl.id = kn + "-singleton-left";
      out.push_back(sl);
      Scenario sr = build_singleton_scenario(w.payload, SelfRefSide::Right, w.kind);
      sr.id = kn + "-singleton-right";
      out.push_back(sr);
      break;
    }
    case PropKind::KP: {
      out.push_back(mk(w.kind, Premise::Any, kn + "-right-only", empty1, every,
                       std::set<Nat>{}, std::nullopt));
      out.push_back(mk(w.kind, Premise::Any, kn + "-left-only", every, empty1,
                       std::nullopt, std::set<Nat>{}));
      out.push_back(mk(w.kind, Premise::Any, kn + "-both-everything", every,
                       pad(every), std::nullopt, std::nullopt));
      out.push_back(mk(w.kind, Premise::Any, kn + "-both-empty", empty1, empty2,
                       std::set<Nat>{}, std::set<Nat>{}));
      break;
    }
    case PropKind::DU:
    case PropKind::SemiDU: {
      std::set<Nat> evens, odds;
      for (int k = 0; k <= 20; ++k) (k % 2 == 0 ? evens : odds).insert(k);
      out.push_back(mk(w.kind, Premise::ReduciblePair, kn + "-evens-odds",
                       finite_set_index(evens).idx, finite_set_index(odds).idx,
                       evens, odds, {4, 3, 10, 7, 21, 25}));
      out.push_back(mk(w.kind, Premise::ReduciblePair, kn + "-singletons",
                       finite_set_index({5}).idx, finite_set_index({9}).idx,
                       std::set<Nat>{5}, std::set<Nat>{9}, {5, 9, 7}));
      out.push_back(mk(w.kind, Premise::ReduciblePair, kn + "-both-empty",
                       empty1, empty2, std::set<Nat>{}, std::set<Nat>{},
                       {0, 1, 2}));
      break;
    }
    case PropKind::SF: {
      Nat q12 = pair(1, 2), q00 = pair(0, 0), q33 = pair(3, 3);
      out.push_back(mk(w.kind, Premise::RelationPair, kn + "-m1-only",
                       finite_set_index({q12}).idx, empty1, std::set<Nat>{q12},
                       std::set<Nat>{}, {q12, q00}));
      out.push_back(mk(w.kind, Premise::RelationPair, kn + "-m2-only", empty1,
                       finite_set_index({q12}).idx, std::set<Nat>{},
                       std::set<Nat>{q12}, {q12, q00}));
      out.push_back(mk(w.kind, Premise::RelationPair, kn + "-overlap",
                       finite_set_index({q33}).idx,
                       pad(finite_set_index({q33}).idx), std::set<Nat>{q33},
                       std::set<Nat>{q33}, {q33}));
      break;
    }
  }
  return out;
}

}  // namespace insep
