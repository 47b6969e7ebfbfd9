/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "omac/oks.hpp"

namespace omac {

namespace {

void check_eps_open_unit(const Rational& eps) {
  if (!(eps > Rational(0)) || !(eps < Rational(1))) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
}

long long ceil_to_int(const Rational& r) {
  BigInt q = r.num() / r.den();
  if (q * r.den() != r.num()) q += 1;
  return q.convert_to<long long>();
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Instance gen_lb_core(const Rational& eps, const char* family_name) {
  check_eps_open_unit(eps);
  Rational eps2 = eps * eps;
  long long smalls = ceil_to_int(Rational(1) / (eps2 * 2));
  if (smalls > 2'000'000) throw std::invalid_argument("epsilon too small: instance would be huge");
  Instance inst;
  inst.label = std::string(family_name) + "(eps=" + eps.str() + ")";
  FamilyTag tag;
  tag.name = family_name;
  tag.params = {{"epsilon", eps.str()}};
  inst.family = tag;

  std::vector<Rational> weights;
  // Big agent: share 1 - eps^2 at quality eps, i.e. weight alpha*q and cost
  // alpha^2*q.
  Rational alpha1 = Rational(1) - eps2;
  weights.push_back(alpha1 * eps);
  inst.costs.push_back(alpha1 * alpha1 * eps);
  // Small agents: share eps^2 at quality eps^2.
  Rational w_small = eps2 * eps2;
  Rational c_small = eps2 * eps2 * eps2;
  for (long long i = 0; i < smalls; ++i) {
    weights.push_back(w_small);
    inst.costs.push_back(c_small);
  }
  inst.reward = RewardFunction::additive(std::move(weights));
  return inst;
}

}  // namespace

Instance gen_det_lb(const Rational& eps) { return gen_lb_core(eps, "det_lb"); }

Instance gen_rand_ub(const Rational& eps) { return gen_lb_core(eps, "rand_ub"); }

Instance gen_xos_instance(int n, int m, const Rational& eps, const std::vector<int>& sigma) {
  if (n < 1 || m < 1) throw std::invalid_argument("group size and count must be positive");
  check_eps_open_unit(eps);
  if (!(eps < Rational(1, n)) || !(eps < Rational(1, m))) {
    throw std::invalid_argument("epsilon must be below 1/n and 1/m");
  }
  if (static_cast<int>(sigma.size()) != m - 1) {
    throw std::invalid_argument("sigma needs exactly one designated agent per group but the last");
  }
  for (int s : sigma) {
    if (s < 0 || s >= n) throw std::invalid_argument("sigma entry out of group range");
  }
  const int total = n * m;
  Instance inst;
  inst.label = "xos(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",eps=" + eps.str() +
               ",sigma=" + join_ints(sigma) + ")";
  FamilyTag tag;
  tag.name = "xos_dist";
  tag.params = {{"n", std::to_string(n)},
                {"m", std::to_string(m)},
                {"epsilon", eps.str()},
                {"sigma", join_ints(sigma)}};
  inst.family = tag;
  inst.costs.assign(static_cast<size_t>(total), eps);

  std::vector<std::vector<Rational>> clauses;
  clauses.reserve(static_cast<size_t>(total));
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> clause(static_cast<size_t>(total), Rational(0));
      for (int l = 0; l < k; ++l) {
        clause[static_cast<size_t>(l * n + sigma[static_cast<size_t>(l)])] = Rational(1);
      }
      clause[static_cast<size_t>(k * n + j)] = Rational(1);
      clauses.push_back(std::move(clause));
    }
  }
  inst.reward = RewardFunction::xos(std::move(clauses));
  return inst;
}

std::vector<std::pair<Instance, Rational>> enumerate_xos_distribution(int n, int m,
                                                                      const Rational& eps,
                                                                      long cap) {
  if (n < 1 || m < 1) throw std::invalid_argument("group size and count must be positive");
  long count = 1;
  for (int l = 0; l < m - 1; ++l) {
    if (count > cap / n) throw OracleCapExceeded("sigma space exceeds the enumeration cap");
    count *= n;
  }
  Rational prob(1, count);
  std::vector<std::pair<Instance, Rational>> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<int> sigma(static_cast<size_t>(m - 1), 0);
  for (long idx = 0; idx < count; ++idx) {
    out.emplace_back(gen_xos_instance(n, m, eps, sigma), prob);
    for (int l = m - 2; l >= 0; --l) {
      if (++sigma[static_cast<size_t>(l)] < n) break;
      sigma[static_cast<size_t>(l)] = 0;
    }
  }
  return out;
}

Instance gen_example1(const Rational& eps) {
  Instance inst = gen_xos_instance(2, 3, eps, {1, 1});
  inst.label = "example1(eps=" + eps.str() + ")";
  FamilyTag tag;
  tag.name = "example1";
  tag.params = {{"epsilon", eps.str()}};
  inst.family = tag;
  return inst;
}

Instance gen_no_preempt(int n, const Rational& eps, const Rational& q) {
  if (n < 1) throw std::invalid_argument("need at least one agent");
  check_eps_open_unit(eps);
  if (!(q > Rational(0))) throw std::invalid_argument("quality must be positive");
  Instance inst;
  inst.label = "no_preempt(n=" + std::to_string(n) + ",eps=" + eps.str() + ",q=" + q.str() + ")";
  FamilyTag tag;
  tag.name = "no_preempt";
  tag.params = {{"n", std::to_string(n)}, {"epsilon", eps.str()}, {"q", q.str()}};
  inst.family = tag;
  std::vector<Rational> weights;
  for (int i = 0; i < n; ++i) {
    // Exponents run n down to 1 over 0-based arrival ids, so every share
    // stays strictly above 1/2 for eps < 1/2 and later agents are better.
    Rational alpha = Rational(1) - eps.pow(static_cast<unsigned>(n - i));
    weights.push_back(alpha * q);
    inst.costs.push_back(alpha * alpha * q);
  }
  inst.reward = RewardFunction::additive(std::move(weights));
  return inst;
}

ARecurrence a_recurrence(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("recurrence needs positive n and m");
  ARecurrence rec;
  rec.n = n;
  rec.m = m;
  // Rows up to 2m feed the h+1 lookups; only h <= m is published.
  const int hmax = 2 * m;
  std::vector<std::vector<Rational>> a(static_cast<size_t>(hmax) + 1,
                                       std::vector<Rational>(static_cast<size_t>(m) + 1));
  for (int h = 1; h <= hmax; ++h) a[static_cast<size_t>(h)][static_cast<size_t>(m)] = Rational(h, m);
  Rational inv_n(1, n);
  Rational rest(n - 1, n);
  for (int l = m - 1; l >= 1; --l) {
    for (int h = 1; h + (m - l) <= hmax; ++h) {
      a[static_cast<size_t>(h)][static_cast<size_t>(l)] =
          inv_n * a[static_cast<size_t>(h) + 1][static_cast<size_t>(l) + 1] +
          rest * a[static_cast<size_t>(h)][static_cast<size_t>(l) + 1];
    }
  }
  rec.table.assign(static_cast<size_t>(m) + 1,
                   std::vector<Rational>(static_cast<size_t>(m) + 1));
  rec.closed_form_ok = true;
  for (int h = 1; h <= m; ++h) {
    for (int l = 1; l <= m; ++l) {
      rec.table[static_cast<size_t>(h)][static_cast<size_t>(l)] =
          a[static_cast<size_t>(h)][static_cast<size_t>(l)];
      Rational closed(static_cast<long long>(h) * n + (m - l), static_cast<long long>(n) * m);
      if (rec.table[static_cast<size_t>(h)][static_cast<size_t>(l)] != closed) {
        rec.closed_form_ok = false;
      }
    }
  }
  return rec;
}

namespace {

std::vector<ExtendedValue> per_prefix_utilities(const OnlineAlgorithm& alg,
                                                const Instance& inst) {
  const int n = inst.size();
  std::vector<ExtendedValue> u(static_cast<size_t>(n) + 1, ExtendedValue(Rational(0)));
  auto fill_from = [&](const Trajectory& t) {
    for (int i = 1; i <= n; ++i) u[static_cast<size_t>(i)] = t.steps[static_cast<size_t>(i) - 1].utility;
  };
  auto fill_mixture = [&](const Trajectory& a, const Trajectory& b) {
    for (int i = 1; i <= n; ++i) {
      const ExtendedValue& ua = a.steps[static_cast<size_t>(i) - 1].utility;
      const ExtendedValue& ub = b.steps[static_cast<size_t>(i) - 1].utility;
      u[static_cast<size_t>(i)] = (ua.finite() + ub.finite()) * Rational(1, 2);
    }
  };
  switch (alg.kind) {
    case AlgKind::bp: fill_from(run_bp(inst)); break;
    case AlgKind::max: fill_from(run_max(inst)); break;
    case AlgKind::no_op: fill_from(run_noop(inst)); break;
    case AlgKind::alg_omac:
      if (!alg.analytic) {
        throw std::invalid_argument(
            "prefix adversary needs a deterministic algorithm or an analytic mixture");
      }
      fill_mixture(run_bp(inst), run_max(inst));
      break;
    case AlgKind::oks_beta:
      fill_mixture(run_oks_beta_greedy(inst, alg.beta), run_oks_beta_max(inst));
      break;
  }
  return u;
}

}  // namespace

PrefixAdversaryResult adaptive_prefix_adversary(const OnlineAlgorithm& alg, const Instance& inst,
                                                const OracleConfig& cfg,
                                                const std::vector<ExtendedValue>* opt_per_prefix) {
  const int n = inst.size();
  PrefixAdversaryResult res;
  res.per_prefix_utility = per_prefix_utilities(alg, inst);
  res.per_prefix_opt = opt_per_prefix ? *opt_per_prefix : prefix_opts(inst, cfg).per_prefix;
  res.per_prefix_cr.assign(static_cast<size_t>(n) + 1, ExtendedValue(Rational(1)));
  for (int i = 1; i <= n; ++i) {
    const ExtendedValue& opt = res.per_prefix_opt[static_cast<size_t>(i)];
    const ExtendedValue& g = res.per_prefix_utility[static_cast<size_t>(i)];
    ExtendedValue cr = Rational(1);
    if (opt == ExtendedValue(Rational(0))) {
      if (g > ExtendedValue(Rational(0))) {
        throw std::logic_error("algorithm beat a zero offline optimum");
      }
      cr = Rational(1);
    } else if (g <= ExtendedValue(Rational(0))) {
      cr = Rational(0);
    } else {
      cr = g.finite() / opt.finite();
    }
    res.per_prefix_cr[static_cast<size_t>(i)] = cr;
    if (res.worst_prefix == 0 || cr < res.worst_cr) {
      res.worst_prefix = i;
      res.worst_cr = cr;
    }
  }
  if (res.worst_prefix == 0) {
    res.worst_prefix = n;
    res.worst_cr = Rational(1);
  }
  return res;
}

ProbeRun xos_probe_strategy_run(const Instance& inst, int n, int m) {
  if (inst.size() != n * m) throw std::invalid_argument("instance does not match n*m agents");
  AgentSet known_good;
  std::optional<AgentId> probe;
  for (AgentId a = 0; a < inst.size(); ++a) {
    int k = a / n;
    if (a % n != 0) continue;  // later group members are indistinguishable from the probe
    if (k == 0) {
      probe = a;
      continue;
    }
    if (probe) {
      // The new group member reveals whether the probe contributes: with the
      // probe designated, the team's best clause gains one.
      AgentSet test = set_with(set_with(known_good, *probe), a);
      Rational f = eval_reward(inst, test);
      if (f == Rational(static_cast<long long>(known_good.size()) + 2)) {
        known_good = set_with(std::move(known_good), *probe);
      }
    }
    probe = a;
  }
  ProbeRun run;
  run.final_set = probe ? set_with(known_good, *probe) : known_good;
  run.utility = principal_utility(inst, run.final_set);
  return run;
}

Rational xos_probe_strategy_expected_utility(int n, int m, const Rational& eps) {
  Rational total;
  for (const auto& [inst, prob] : enumerate_xos_distribution(n, m, eps)) {
    ProbeRun run = xos_probe_strategy_run(inst, n, m);
    total += prob * run.utility.finite();
  }
  return total;
}

// ---- Exact policy optimum over the XOS distribution ----

namespace {

struct PolicyContext {
  int n;
  int m;
  // memo key packs (arrival, held mask, revealed sigma in base n+1)
  std::unordered_map<std::uint64_t, Rational> memo;
};

std::uint64_t policy_key(const PolicyContext& ctx, int t, std::uint32_t held,
                         const std::vector<int>& sigma) {
  std::uint64_t key = static_cast<std::uint64_t>(t);
  key = key * (std::uint64_t(1) << (ctx.n * ctx.m)) + held;
  for (int s : sigma) key = key * static_cast<std::uint64_t>(ctx.n + 1) +
                            static_cast<std::uint64_t>(s + 1);
  return key;
}

// Reward of a held set given the sigma components revealed so far. Clauses of
// groups whose designated agent is still hidden never exceed the clause of a
// held member of the newest group, so the value is knowledge-measurable.
int partial_reward(const PolicyContext& ctx, std::uint32_t held, const std::vector<int>& sigma,
                   int group_cap) {
  int best = 0;
  for (int j = 0; j <= group_cap; ++j) {
    int v = 0;
    for (int l = 0; l < j; ++l) {
      if (sigma[static_cast<size_t>(l)] < 0) throw std::logic_error("unrevealed sigma used");
      int id = l * ctx.n + sigma[static_cast<size_t>(l)];
      if (held & (std::uint32_t(1) << id)) ++v;
    }
    for (int i = 0; i < ctx.n; ++i) {
      if (held & (std::uint32_t(1) << (j * ctx.n + i))) {
        ++v;
        break;
      }
    }
    best = std::max(best, v);
  }
  return best;
}

bool team_safe(const PolicyContext& ctx, std::uint32_t held, const std::vector<int>& sigma,
               int group_cap) {
  int f = partial_reward(ctx, held, sigma, group_cap);
  for (std::uint32_t rest = held; rest;) {
    int b = __builtin_ctz(rest);
    rest &= rest - 1;
    if (partial_reward(ctx, held & ~(std::uint32_t(1) << b), sigma, group_cap) >= f) return false;
  }
  return true;
}

Rational policy_value(PolicyContext& ctx, int t, std::uint32_t held, std::vector<int>& sigma);

Rational policy_act(PolicyContext& ctx, int t, std::uint32_t held, std::vector<int>& sigma) {
  const int k = t / ctx.n;
  std::uint32_t pool = held | (std::uint32_t(1) << t);
  // Enumerate feasible next teams: subsets of the held set plus the arrival,
  // discarding any team with a zero-marginal member (arrivals may stop here).
  std::vector<int> pool_ids;
  for (std::uint32_t rest = pool; rest;) {
    pool_ids.push_back(__builtin_ctz(rest));
    rest &= rest - 1;
  }
  Rational best(-1);
  const int b = static_cast<int>(pool_ids.size());
  for (int pick = 0; pick < (1 << b); ++pick) {
    std::uint32_t next = 0;
    for (int j = 0; j < b; ++j) {
      if (pick & (1 << j)) next |= std::uint32_t(1) << pool_ids[static_cast<size_t>(j)];
    }
    if (!team_safe(ctx, next, sigma, k)) continue;
    Rational v = policy_value(ctx, t + 1, next, sigma);
    if (v > best) best = v;
  }
  return best;
}

Rational policy_value(PolicyContext& ctx, int t, std::uint32_t held, std::vector<int>& sigma) {
  if (t == ctx.n * ctx.m) {
    return Rational(partial_reward(ctx, held, sigma, ctx.m - 1), ctx.m);
  }
  std::uint64_t key = policy_key(ctx, t, held, sigma);
  auto hit = ctx.memo.find(key);
  if (hit != ctx.memo.end()) return hit->second;

  const int k = t / ctx.n;
  Rational result;
  if (t % ctx.n == 0 && k >= 1 && sigma[static_cast<size_t>(k) - 1] < 0) {
    // The first arrival of group k makes the previous group's designated
    // agent observable; it is uniform and independent of play so far.
    Rational total;
    for (int s = 0; s < ctx.n; ++s) {
      sigma[static_cast<size_t>(k) - 1] = s;
      total += policy_act(ctx, t, held, sigma);
    }
    sigma[static_cast<size_t>(k) - 1] = -1;
    result = total / Rational(ctx.n);
  } else {
    result = policy_act(ctx, t, held, sigma);
  }
  ctx.memo.emplace(key, result);
  return result;
}

}  // namespace

Rational xos_policy_search_expected_cr(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("need positive n and m");
  if (n * m > 16) throw std::invalid_argument("policy search is exhaustive; keep n*m <= 16");
  PolicyContext ctx{n, m, {}};
  std::vector<int> sigma(static_cast<size_t>(m) - 1, -1);
  return policy_value(ctx, 0, 0, sigma);
}

}  // namespace omac
