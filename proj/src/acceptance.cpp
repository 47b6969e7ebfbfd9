/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

#include "omac/balance.hpp"
#include "omac/engine.hpp"
#include "omac/families.hpp"
#include "omac/model.hpp"
#include "omac/oks.hpp"
#include "omac/oracle.hpp"
#include "omac/quality.hpp"
#include "omac/random_instances.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omac::acceptance {

namespace {

struct Checker {
  long checks = 0;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& msg) {
    ++checks;
    if (!cond && failures.size() < 4) failures.push_back(msg);
    if (!cond && failures.size() >= 4) failed_beyond = true;
  }
  bool ok() const { return failures.empty() && !failed_beyond; }
  std::string summary(const std::string& on_pass) const {
    if (ok()) return on_pass;
    std::string s = failures.empty() ? "failed" : failures.front();
    if (failures.size() > 1 || failed_beyond) s += " (+ more failures)";
    return s;
  }

 private:
  bool failed_beyond = false;
};

std::string evs(const ExtendedValue& v) { return v.str(); }

AgentSet group_prefix_set(const QualityStructure& qs, const AgentSet& s, int group_index) {
  AgentSet out;
  for (AgentId i : s) {
    if (qs.group_of[static_cast<size_t>(i)] < group_index) out.push_back(i);
  }
  return out;
}

Rational group_share(const Instance& inst, const QualityStructure& qs, const AgentSet& s,
                     int group_index) {
  Rational total;
  for (AgentId i : s) {
    if (qs.group_of[static_cast<size_t>(i)] == group_index) {
      total += additive_share(inst, i).finite();
    }
  }
  return total;
}

std::vector<AgentId> canonical_members(const QualityStructure& qs, const AgentSet& s) {
  std::vector<AgentId> order(s.begin(), s.end());
  std::sort(order.begin(), order.end(), [&](AgentId a, AgentId b) {
    return qs.canonical_pos[static_cast<size_t>(a)] < qs.canonical_pos[static_cast<size_t>(b)];
  });
  return order;
}

// ---- 1. Theorem 1 exactness -------------------------------------------------

CriterionOutcome criterion_theorem1() {
  CriterionOutcome out{1, "theorem1-exactness", false, "", 0};
  std::mt19937_64 rng(1001);
  std::vector<Instance> suite;
  suite.reserve(1000);
  for (int i = 0; i < 1000; ++i) suite.push_back(random_additive_instance(rng, 1, 12));

  std::vector<char> good(suite.size(), 1);
  OracleConfig inner{22, false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < static_cast<long>(suite.size()); ++i) {
    const Instance& inst = suite[static_cast<size_t>(i)];
    ExtendedValue opt = brute_force_opt(inst, inst.size(), inner).second;
    ExtendedValue lhs = run_bp(inst).final_utility + run_max(inst).final_utility;
    if (!(opt <= lhs)) good[static_cast<size_t>(i)] = 0;
  }
  long passed = std::count(good.begin(), good.end(), 1);
  out.passed = passed == static_cast<long>(suite.size());
  out.details = std::to_string(passed) + "/" + std::to_string(suite.size()) +
                " seeded instances satisfy OPT <= g(BP)+g(MAX) exactly";
  return out;
}

// ---- 2. Half-competitiveness of the mixture ---------------------------------

CriterionOutcome criterion_half_competitive() {
  CriterionOutcome out{2, "alg-omac-half-competitive", false, "", 0};
  Checker ck;
  std::mt19937_64 rng(1001);  // same suite as criterion 1
  std::vector<Instance> suite;
  for (int i = 0; i < 1000; ++i) suite.push_back(random_additive_instance(rng, 1, 12));
  suite.push_back(gen_det_lb(Rational(1, 2)));
  suite.push_back(gen_det_lb(Rational(1, 4)));
  suite.push_back(gen_det_lb(Rational(1, 6)));
  suite.push_back(gen_det_lb(Rational(1, 10)));
  suite.push_back(gen_rand_ub(Rational(1, 4)));
  suite.push_back(gen_rand_ub(Rational(1, 10)));
  suite.push_back(gen_no_preempt(5, Rational(1, 100), Rational(1)));
  suite.push_back(gen_no_preempt(10, Rational(1, 100), Rational(1)));
  suite.push_back(gen_thm9_lb(Rational(1, 4), Rational(1, 10)));
  suite.push_back(gen_thm9_lb(Rational(1, 2), Rational(1, 10)));

  std::vector<char> good(suite.size(), 1);
  OracleConfig inner{22, false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < static_cast<long>(suite.size()); ++i) {
    const Instance& inst = suite[static_cast<size_t>(i)];
    ExtendedValue opt = brute_force_opt(inst, inst.size(), inner).second;
    Rational expected = alg_omac_expected_utility(inst).finite();
    if (!(ExtendedValue(expected * 2) >= opt)) good[static_cast<size_t>(i)] = 0;
  }
  long passed = std::count(good.begin(), good.end(), 1);
  ck.expect(passed == static_cast<long>(suite.size()),
            "expected utility fell below OPT/2 on " +
                std::to_string(static_cast<long>(suite.size()) - passed) + " instances");
  out.passed = ck.ok();
  out.details = ck.summary("E[ALG-OMAC] >= OPT/2 exactly on " + std::to_string(suite.size()) +
                           " instances (1000 random + families)");
  return out;
}

// ---- 3. Tightness of 1/2 on the randomized-upper-bound family ---------------

CriterionOutcome criterion_rand_ub_tightness() {
  CriterionOutcome out{3, "rand-ub-tightness", false, "", 0};
  Checker ck;
  std::vector<Rational> eps_list = {Rational(1, 10), Rational(1, 20), Rational(1, 100)};
  std::vector<Rational> crs;
  std::string shown;
  for (const Rational& eps : eps_list) {
    Instance inst = gen_rand_ub(eps);
    Rational opt = brute_force_opt(inst, inst.size()).second.finite();
    Rational expected = alg_omac_expected_utility(inst).finite();
    Rational cr = expected / opt;
    ck.expect(opt == eps * eps / 4, "OPT != eps^2/4 at eps=" + eps.str());
    ck.expect(cr >= Rational(1, 2), "CR below 1/2 at eps=" + eps.str());
    ck.expect(cr <= Rational(1, 2) + eps * 10, "CR above 1/2+10eps at eps=" + eps.str());
    crs.push_back(cr);
    shown += " eps=" + eps.str() + ": CR=" + cr.str() + ";";
  }
  ck.expect(crs[2] < crs[1] && crs[1] < crs[0], "CR does not shrink toward 1/2 with eps");
  out.passed = ck.ok();
  out.details = ck.summary("expected CR in [1/2, 1/2+10eps], monotone:" + shown);
  return out;
}

// ---- 4. Deterministic failure on the det-lb family --------------------------

CriterionOutcome criterion_det_lb_failure() {
  CriterionOutcome out{4, "det-lb-deterministic-failure", false, "", 0};
  Checker ck;
  std::string shown;
  for (const Rational& eps :
       {Rational(1, 10), Rational(1, 20), Rational(1, 100)}) {
    Instance inst = gen_det_lb(eps);
    Rational eps2 = eps * eps;
    ExtendedValue g1 = principal_utility(inst, AgentSet{0});
    ck.expect(g1 == ExtendedValue((Rational(1) - eps2) * eps2 * eps),
              "g({1}) != (1-eps^2)eps^3 at eps=" + eps.str());
    OracleResult opts = prefix_opts(inst);
    ck.expect(opts.per_prefix.back() == ExtendedValue(eps2 / 4),
              "OPT != eps^2/4 at eps=" + eps.str());
    Rational bound = eps * 6;
    OnlineAlgorithm bp{AlgKind::bp, true, 0, Rational()};
    OnlineAlgorithm mx{AlgKind::max, true, 0, Rational()};
    PrefixAdversaryResult abp = adaptive_prefix_adversary(bp, inst, {}, &opts.per_prefix);
    PrefixAdversaryResult amx = adaptive_prefix_adversary(mx, inst, {}, &opts.per_prefix);
    ck.expect(abp.worst_cr < ExtendedValue(bound), "BP worst-prefix CR not below 6eps");
    ck.expect(amx.worst_cr < ExtendedValue(bound), "MAX worst-prefix CR not below 6eps");
    shown += " eps=" + eps.str() + ": bp@" + std::to_string(abp.worst_prefix) + "=" +
             evs(abp.worst_cr) + ", max@" + std::to_string(amx.worst_prefix) + "=" +
             evs(amx.worst_cr) + ";";
  }
  out.passed = ck.ok();
  out.details = ck.summary("anchors exact, worst-prefix CRs below 6eps:" + shown);
  return out;
}

// ---- 5. Balance-point theory -------------------------------------------------

CriterionOutcome criterion_balance_theory() {
  CriterionOutcome out{5, "balance-point-theory", false, "", 0};
  Checker ck;
  std::mt19937_64 rng(5005);

  // Closed form vs grid scan of the auxiliary-agent utility.
  const Rational step(1, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = random_additive_instance(rng, 2, 10);
    QualityStructure qs = build_quality_structure(inst);
    AgentSet s = random_subset(rng, inst.size());
    int x = static_cast<int>(rng() % static_cast<std::uint64_t>(qs.group_count()));
    Rational aux = auxiliary_share(inst, qs, s, x);
    Rational target = aux;
    if (target < Rational(0)) target = Rational(0);
    if (target > Rational(1)) target = Rational(1);
    AgentSet prefix = group_prefix_set(qs, s, x);
    const Rational q = qs.group_quality[static_cast<size_t>(x)].finite();
    Rational best_arg;
    ExtendedValue best = ExtendedValue::neg_inf();
    for (int k = 0; k <= 1000; ++k) {
      Rational a = step * k;
      ExtendedValue v = utility_with_auxiliary(inst, prefix, q, a);
      if (v > best) {
        best = v;
        best_arg = a;
      }
    }
    Rational gap = best_arg > target ? best_arg - target : target - best_arg;
    ck.expect(gap <= step, "grid optimum more than one step from the closed form");
  }

  // Balance points fall with the group index.
  for (int trial = 0; trial < 600; ++trial) {
    Instance inst = random_additive_instance(rng, 2, 10);
    QualityStructure qs = build_quality_structure(inst);
    AgentSet s = random_subset(rng, inst.size());
    for (int x = 0; x + 1 < qs.group_count(); ++x) {
      ck.expect(balance_point(inst, qs, s, x) >= balance_point(inst, qs, s, x + 1),
                "b(S,x) < b(S,x+1)");
    }
  }

  // More shares per group can only lower balance points.
  for (int trial = 0; trial < 600; ++trial) {
    Instance inst = random_additive_instance(rng, 2, 10);
    QualityStructure qs = build_quality_structure(inst);
    AgentSet bigger = random_subset(rng, inst.size());
    AgentSet smaller;
    for (AgentId i : bigger) {
      if (rng() % 2) smaller.push_back(i);
    }
    for (int x = 0; x < qs.group_count(); ++x) {
      ck.expect(balance_point(inst, qs, smaller, x) >= balance_point(inst, qs, bigger, x),
                "nested sets reversed a balance point");
    }
  }

  // Set comparison within balance points.
  long accepted5 = 0;
  for (long trial = 0; trial < 200000 && accepted5 < 500; ++trial) {
    Instance inst = random_additive_instance(rng, 2, 9);
    QualityStructure qs = build_quality_structure(inst);
    AgentSet sprime = random_subset(rng, inst.size());
    AgentSet s;
    for (AgentId i : sprime) {
      if (rng() % 2) s.push_back(i);
    }
    bool hyp = true;
    Rational run_s, run_sp;
    for (int x = 0; x < qs.group_count() && hyp; ++x) {
      Rational gs = group_share(inst, qs, s, x);
      Rational gp = group_share(inst, qs, sprime, x);
      run_s += gs;
      run_sp += gp;
      if (!(gs <= gp)) hyp = false;
      if (hyp && !(ExtendedValue(run_sp) <= ExtendedValue(balance_point(inst, qs, sprime, x)))) {
        hyp = false;
      }
    }
    if (!hyp) continue;
    ++accepted5;
    ck.expect(principal_utility(inst, s) <= principal_utility(inst, sprime),
              "g(S) > g(S') under the comparison hypotheses");
  }
  ck.expect(accepted5 >= 500, "too few admissible samples for the set comparison");

  // Auxiliary-set comparison: cap the better set at group y and top it up
  // with the optimal hypothetical agent of the next group's quality.
  long accepted6 = 0;
  for (long trial = 0; trial < 400000 && accepted6 < 500; ++trial) {
    Instance inst = random_additive_instance(rng, 2, 9);
    QualityStructure qs = build_quality_structure(inst);
    if (qs.group_count() < 2) continue;
    int y = static_cast<int>(rng() % static_cast<std::uint64_t>(qs.group_count() - 1));
    AgentSet sprime = random_subset(rng, inst.size());
    AgentSet s;
    for (AgentId i : sprime) {
      if (rng() % 2) s.push_back(i);
    }
    bool hyp = true;
    Rational run_s, run_sp;
    for (int x = 0; x <= y && hyp; ++x) {
      Rational gs = group_share(inst, qs, s, x);
      Rational gp = group_share(inst, qs, sprime, x);
      run_s += gs;
      run_sp += gp;
      if (!(gs <= gp)) hyp = false;
      if (hyp && !(ExtendedValue(run_sp) <= ExtendedValue(balance_point(inst, qs, sprime, x)))) {
        hyp = false;
      }
    }
    if (!hyp) continue;
    Rational aux = auxiliary_share(inst, qs, sprime, y + 1);
    if (aux < Rational(0)) continue;
    ++accepted6;
    AgentSet capped = group_prefix_set(qs, sprime, y + 1);
    ExtendedValue rhs = utility_with_auxiliary(
        inst, capped, qs.group_quality[static_cast<size_t>(y) + 1].finite(), aux);
    ck.expect(principal_utility(inst, s) <= rhs,
              "g(S) > g(S'^y + r) under the auxiliary comparison hypotheses");
  }
  ck.expect(accepted6 >= 500, "too few admissible samples for the auxiliary comparison");

  // Crossing dominance: the first crossing prefix beats the whole set.
  long crossing_checks = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = random_additive_instance(rng, 4, 10);
    QualityStructure qs = build_quality_structure(inst);
    const int n = inst.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      AgentSet s;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) s.push_back(i);
      }
      AgentSet prefix;
      ExtendedValue g_full = principal_utility(inst, s);
      for (AgentId i : canonical_members(qs, s)) {
        prefix = set_with(std::move(prefix), i);
        if (crosses_balance_point(inst, qs, s, i)) {
          ++crossing_checks;
          ck.expect(principal_utility(inst, prefix) >= g_full,
                    "first crossing prefix lost to the full set");
          break;
        }
      }
    }
  }
  ck.expect(crossing_checks >= 500, "too few crossing configurations");

  out.passed = ck.ok();
  out.details =
      ck.summary("grid scan, ordering, monotonicity, comparisons, crossing dominance all exact (" +
                 std::to_string(ck.checks) + " checks)");
  return out;
}

// ---- 6. XOS impossibility ----------------------------------------------------

CriterionOutcome criterion_xos() {
  CriterionOutcome out{6, "xos-impossibility", false, "", 0};
  Checker ck;
  std::vector<Rational> ratios;
  for (const Rational& eps : {Rational(1, 10), Rational(1, 100)}) {
    Rational expected = xos_probe_strategy_expected_utility(2, 3, eps);
    Rational closed = (Rational(1) - eps * 3) * 3 / 4 + (Rational(1) - eps * 2) +
                      (Rational(1) - eps) / 4;
    ck.expect(expected == closed, "strategy expectation mismatch at eps=" + eps.str());
    Rational opt_value = (Rational(1) - eps * 3) * 3;
    for (const auto& [inst, prob] : enumerate_xos_distribution(2, 3, eps)) {
      ck.expect(brute_force_opt(inst, inst.size()).second == ExtendedValue(opt_value),
                "per-instance OPT mismatch at eps=" + eps.str());
    }
    Rational ratio = expected / opt_value;
    ck.expect(ratio >= Rational(2, 3) && ratio <= Rational(2, 3) + eps,
              "expected CR not within eps of 2/3");
    ratios.push_back(ratio);
  }
  ck.expect(ratios[1] < ratios[0], "expected CR does not approach 2/3");

  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= 12; ++m) {
      ARecurrence rec = a_recurrence(n, m);
      ck.expect(rec.closed_form_ok, "closed form failed at n=" + std::to_string(n) + ",m=" +
                                        std::to_string(m));
      ck.expect(rec.a11() <= Rational(1, n) + Rational(1, m),
                "A_1^1 > 1/n + 1/m at n=" + std::to_string(n) + ",m=" + std::to_string(m));
    }
  }
  Rational policy = xos_policy_search_expected_cr(2, 2);
  ck.expect(policy == a_recurrence(2, 2).a11(),
            "policy search (" + policy.str() + ") != A_1^1 for n=m=2");

  out.passed = ck.ok();
  out.details = ck.summary("strategy expectation, per-instance OPT, recurrence closed form, and "
                           "policy optimum all exact");
  return out;
}

// ---- 7. No-preemption impossibility -------------------------------------------

CriterionOutcome criterion_no_preemption() {
  CriterionOutcome out{7, "no-preemption-impossibility", false, "", 0};
  Checker ck;
  const Rational eps(1, 100);
  const Rational q(1);
  std::string shown;
  for (int n : {5, 10}) {
    Instance inst = gen_no_preempt(n, eps, q);
    OracleResult opts = prefix_opts(inst);
    for (int i = 0; i < n; ++i) {
      Rational u = eps.pow(static_cast<unsigned>(n - i));
      ck.expect(principal_utility(inst, AgentSet{i}) == ExtendedValue(u * (Rational(1) - u) * q),
                "singleton utility mismatch");
      for (int j = i + 1; j < n; ++j) {
        Rational pair_share = additive_share(inst, i).finite() + additive_share(inst, j).finite();
        ck.expect(pair_share > Rational(1), "two agents fit within the full reward");
      }
    }
    // All n single-hire commit policies against the uniform prefix distribution.
    Rational best(-1);
    for (int j = 0; j < n; ++j) {
      Rational total;
      for (int i = j + 1; i <= n; ++i) {
        Rational g = principal_utility(inst, AgentSet{j}).finite();
        total += g / opts.per_prefix[static_cast<size_t>(i)].finite();
      }
      Rational expected = total / n;
      if (expected > best) best = expected;
    }
    ck.expect(best <= Rational(1, n) + eps * 3,
              "best commit policy above 1/n + 3eps for n=" + std::to_string(n));
    shown += " n=" + std::to_string(n) + ": best=" + best.str() + ";";
  }
  out.passed = ck.ok();
  out.details = ck.summary("best single-hire policy within 1/n + 3eps:" + shown);
  return out;
}

// ---- 8. OKS bridge -------------------------------------------------------------

CriterionOutcome criterion_oks_bridge() {
  CriterionOutcome out{8, "oks-bridge", false, "", 0};
  Checker ck;
  std::mt19937_64 rng(8008);
  const Rational half(1, 2);

  for (int trial = 0; trial < 300; ++trial) {
    OksInstance oks = random_oks_instance(rng, /*within_budget_costs=*/true);
    Instance reduced = phi_reduction(oks);
    Rational expected = alg_omac_beta_expected(reduced, half).finite();
    ExtendedValue opt = brute_force_opt(reduced, reduced.size()).second;
    ck.expect(ExtendedValue(expected * 4) >= opt, "beta=1/2 mixture below OPT/4");
  }

  for (int trial = 0; trial < 300; ++trial) {
    OksInstance oks = random_oks_instance(rng, /*within_budget_costs=*/false);
    Instance reduced = phi_reduction(oks);
    Rational pure = oks_value(oks, oks_greedy_select(oks));
    std::optional<int> mx = oks_max_select(oks);
    if (mx) pure += oks.items[static_cast<size_t>(*mx)].value;
    AgentSet opt_set = brute_force_opt(reduced, reduced.size()).first;
    ck.expect(pure >= eval_reward(reduced, opt_set),
              "p(Greedy)+p(Max) below the optimum team's reward");
  }

  std::string shown;
  for (const Rational& beta : {Rational(1, 4), half}) {
    for (const Rational& eps : {Rational(1, 10), Rational(1, 100)}) {
      Instance reduced = gen_thm9_lb(beta, eps);
      Rational expected = alg_omac_beta_expected(reduced, beta).finite();
      Rational opt = brute_force_opt(reduced, reduced.size()).second.finite();
      Rational cr = expected / opt;
      ck.expect(cr <= Rational(1, 4) + eps * 10,
                "tightness family CR above 1/4 + 10eps (beta=" + beta.str() + ")");
      shown += " beta=" + beta.str() + ",eps=" + eps.str() + ": CR=" + cr.str() + ";";
    }
  }
  out.passed = ck.ok();
  out.details = ck.summary("quarter bound, reward 2-approximation, tightness families:" + shown);
  return out;
}

// ---- 9. Protocol invariants ----------------------------------------------------

CriterionOutcome criterion_protocol() {
  CriterionOutcome out{9, "protocol-invariants", false, "", 0};
  Checker ck;
  std::mt19937_64 rng(9009);
  long trajectories = 0;

  auto validate_all_steps_bp = [&](const Instance& inst, const Trajectory& traj) {
    QualityStructure qs = build_quality_structure(inst);
    AgentSet held;
    for (size_t i = 0; i < traj.steps.size(); ++i) {
      for (AgentId a : traj.steps[i].accepted) held = set_with(std::move(held), a);
      for (AgentId a : traj.steps[i].dismissed) held = set_without(std::move(held), a);
      ck.expect(bp_containment_ok(inst, qs, held),
                "BP team crossed a balance point at step " + std::to_string(i + 1));
    }
  };

  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = random_additive_instance(rng, 1, 12);
    Trajectory bp = run_bp(inst);
    Trajectory mx = run_max(inst);
    Trajectory no = run_noop(inst);
    check_trajectory(inst, bp);
    check_trajectory(inst, mx);
    check_trajectory(inst, no);
    trajectories += 3;
    validate_all_steps_bp(inst, bp);
    for (std::uint64_t seed : {0ull, 1ull}) {
      Trajectory t = alg_omac_sampled(inst, seed);
      check_trajectory(inst, t);
      ++trajectories;
      ck.expect(t.final_set == (seed == 0 ? bp.final_set : mx.final_set),
                "sampled mixture diverged from its coin's run");
    }
    bool shares_ok = true;
    for (AgentId i = 0; i < inst.size(); ++i) {
      ExtendedValue a = additive_share(inst, i);
      if (!a.is_finite() || a.finite() > Rational(1)) shares_ok = false;
    }
    if (shares_ok) {
      Trajectory g = run_oks_beta_greedy(inst, Rational(1, 2));
      Trajectory m2 = run_oks_beta_max(inst);
      check_trajectory(inst, g);
      check_trajectory(inst, m2);
      trajectories += 2;
    }
  }

  Instance hard = gen_det_lb(Rational(1, 10));
  Trajectory hard_bp = run_bp(hard);
  check_trajectory(hard, hard_bp);
  check_trajectory(hard, run_max(hard));
  validate_all_steps_bp(hard, hard_bp);
  trajectories += 2;

  for (const auto& [inst, prob] : enumerate_xos_distribution(2, 3, Rational(1, 10))) {
    (void)prob;
    check_trajectory(inst, run_max(inst));
    check_trajectory(inst, run_noop(inst));
    trajectories += 2;
  }

  out.passed = ck.ok();
  out.details = ck.summary(std::to_string(trajectories) +
                           " trajectories pass the independent validator; BP containment strict");
  return out;
}

}  // namespace

std::vector<CriterionOutcome> run_all(const std::string& filter) {
  using Runner = CriterionOutcome (*)();
  const std::pair<const char*, Runner> runners[] = {
      {"theorem1-exactness", criterion_theorem1},
      {"alg-omac-half-competitive", criterion_half_competitive},
      {"rand-ub-tightness", criterion_rand_ub_tightness},
      {"det-lb-deterministic-failure", criterion_det_lb_failure},
      {"balance-point-theory", criterion_balance_theory},
      {"xos-impossibility", criterion_xos},
      {"no-preemption-impossibility", criterion_no_preemption},
      {"oks-bridge", criterion_oks_bridge},
      {"protocol-invariants", criterion_protocol}};
  std::vector<CriterionOutcome> outcomes;
  for (const auto& [name, runner] : runners) {
    if (!filter.empty() && std::string(name).find(filter) == std::string::npos) continue;
    auto started = std::chrono::steady_clock::now();
    CriterionOutcome res = runner();
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    outcomes.push_back(std::move(res));
  }
  return outcomes;
}

int report(const std::vector<CriterionOutcome>& outcomes, std::ostream& os) {
  bool all = true;
  for (const CriterionOutcome& c : outcomes) {
    std::ostringstream line;
    line << (c.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << " — " << c.details
         << " (" << static_cast<long>(c.seconds * 1000) / 1000.0 << "s)";
    os << line.str() << "\n";
    all = all && c.passed;
  }
  os << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
  return all ? 0 : 1;
}

}  // namespace omac::acceptance
