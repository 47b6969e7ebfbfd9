/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omac {

namespace {

constexpr int kMaxMaskBits = 30;

struct AdditiveProfile {
  std::vector<Rational> share;
  std::vector<Rational> weight;
  std::vector<char> inf;  // zero-weight agent at positive cost
};

AdditiveProfile additive_profile(const Instance& inst, int prefix_n) {
  AdditiveProfile p;
  p.share.reserve(static_cast<size_t>(prefix_n));
  for (AgentId i = 0; i < prefix_n; ++i) {
    ExtendedValue a = additive_share(inst, i);
    p.inf.push_back(a.is_finite() ? 0 : 1);
    p.share.push_back(a.is_finite() ? a.finite() : Rational(0));
    p.weight.push_back(inst.reward.weights[static_cast<size_t>(i)]);
  }
  return p;
}

AgentSet mask_to_set(std::uint64_t mask) {
  AgentSet s;
  while (mask) {
    int b = __builtin_ctzll(mask);
    s.push_back(b);
    mask &= mask - 1;
  }
  return s;
}

/// Running maximizer with the fixed tie order: larger value, then smaller
/// cardinality, then lexicographically smaller id list. A total order, so the
/// outcome is independent of enumeration order and of the parallel schedule.
struct Best {
  ExtendedValue value = Rational(0);
  int count = 0;
  AgentSet set;  // empty set is always feasible with value 0

  bool offer(const ExtendedValue& v, int cnt, const AgentSet& candidate_set) {
    if (v < value) return false;
    if (v == value) {
      if (cnt > count) return false;
      if (cnt == count && !std::lexicographical_compare(candidate_set.begin(),
                                                        candidate_set.end(), set.begin(),
                                                        set.end())) {
        return false;
      }
    }
    value = v;
    count = cnt;
    set = candidate_set;
    return true;
  }

  void merge(const Best& other) { offer(other.value, other.count, other.set); }
};

struct WalkResult {
  Best best;
  std::vector<ExtendedValue> highbit_best;  // best value among masks topped by bit h
};

/// Gray-code walk over ranks [k_begin, k_end): consecutive masks differ in one
/// bit, so the share/weight sums update in O(1) exact operations per subset.
WalkResult walk_additive(const AdditiveProfile& p, int n, std::uint64_t k_begin,
                         std::uint64_t k_end, bool track_highbit) {
  WalkResult r;
  if (track_highbit) r.highbit_best.assign(static_cast<size_t>(n), ExtendedValue(Rational(0)));
  std::uint64_t mask = k_begin ^ (k_begin >> 1);
  Rational share_sum, weight_sum;
  int inf_cnt = 0;
  for (std::uint64_t m = mask; m;) {
    int b = __builtin_ctzll(m);
    m &= m - 1;
    if (p.inf[static_cast<size_t>(b)]) {
      ++inf_cnt;
    } else {
      share_sum += p.share[static_cast<size_t>(b)];
      weight_sum += p.weight[static_cast<size_t>(b)];
    }
  }
  const Rational one(1);
  for (std::uint64_t k = k_begin;;) {
    if (inf_cnt == 0 && mask != 0) {
      ExtendedValue v = (one - share_sum) * weight_sum;
      int h = 63 - __builtin_clzll(mask);
      if (track_highbit && v > r.highbit_best[static_cast<size_t>(h)]) {
        r.highbit_best[static_cast<size_t>(h)] = v;
      }
      if (v >= r.best.value) r.best.offer(v, __builtin_popcountll(mask), mask_to_set(mask));
    }
    if (++k >= k_end) break;
    int b = __builtin_ctzll(k);
    std::uint64_t bit = std::uint64_t(1) << b;
    mask ^= bit;
    if (p.inf[static_cast<size_t>(b)]) {
      inf_cnt += (mask & bit) ? 1 : -1;
    } else if (mask & bit) {
      share_sum += p.share[static_cast<size_t>(b)];
      weight_sum += p.weight[static_cast<size_t>(b)];
    } else {
      share_sum -= p.share[static_cast<size_t>(b)];
      weight_sum -= p.weight[static_cast<size_t>(b)];
    }
  }
  return r;
}

WalkResult walk_xos(const Instance& inst, int n, std::uint64_t k_begin, std::uint64_t k_end,
                    bool track_highbit) {
  WalkResult r;
  if (track_highbit) r.highbit_best.assign(static_cast<size_t>(n), ExtendedValue(Rational(0)));
  for (std::uint64_t mask = k_begin; mask < k_end; ++mask) {
    if (mask == 0) continue;
    AgentSet s = mask_to_set(mask);
    ExtendedValue v = principal_utility(inst, s);
    int h = 63 - __builtin_clzll(mask);
    if (track_highbit && v > r.highbit_best[static_cast<size_t>(h)]) {
      r.highbit_best[static_cast<size_t>(h)] = v;
    }
    if (v >= r.best.value) r.best.offer(v, static_cast<int>(s.size()), s);
  }
  return r;
}

WalkResult walk_masks(const Instance& inst, int prefix_n, const OracleConfig& cfg,
                      bool track_highbit) {
  const std::uint64_t total = std::uint64_t(1) << prefix_n;
  AdditiveProfile profile;
  if (inst.additive()) profile = additive_profile(inst, prefix_n);

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    return inst.additive() ? walk_additive(profile, prefix_n, lo, hi, track_highbit)
                           : walk_xos(inst, prefix_n, lo, hi, track_highbit);
  };

#ifdef _OPENMP
  if (cfg.parallel && prefix_n >= 12) {
    int threads = omp_get_max_threads();
    std::vector<WalkResult> parts(static_cast<size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
      int t = omp_get_thread_num();
      std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(threads);
      std::uint64_t hi =
          total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(threads);
      if (lo < hi) parts[static_cast<size_t>(t)] = run_range(lo, hi);
    }
    WalkResult merged;
    if (track_highbit) {
      merged.highbit_best.assign(static_cast<size_t>(prefix_n), ExtendedValue(Rational(0)));
    }
    for (const WalkResult& part : parts) {
      merged.best.merge(part.best);
      for (size_t h = 0; h < part.highbit_best.size(); ++h) {
        if (part.highbit_best[h] > merged.highbit_best[h]) {
          merged.highbit_best[h] = part.highbit_best[h];
        }
      }
    }
    return merged;
  }
#endif
  (void)cfg;
  return run_range(0, total);
}

// ---- Interchangeable-class enumeration (additive, wide instances) ----

struct AgentClass {
  Rational share;
  Rational weight;
  std::vector<AgentId> ids;  // ascending
};

struct ClassSplit {
  std::vector<AgentClass> classes;  // agents with finite shares
  bool has_inf = false;             // infinite-share agents never join a maximizer
};

ClassSplit build_classes(const Instance& inst, int prefix_n) {
  ClassSplit cs;
  std::map<std::pair<std::string, std::string>, size_t> index;
  for (AgentId i = 0; i < prefix_n; ++i) {
    ExtendedValue a = additive_share(inst, i);
    if (!a.is_finite()) {
      cs.has_inf = true;
      continue;
    }
    const Rational& w = inst.reward.weights[static_cast<size_t>(i)];
    auto key = std::make_pair(a.finite().str(), w.str());
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, cs.classes.size());
      cs.classes.push_back({a.finite(), w, {i}});
    } else {
      cs.classes[it->second].ids.push_back(i);
    }
  }
  return cs;
}

double class_product(const ClassSplit& cs, int prefix_n) {
  double prod = 1.0;
  for (const AgentClass& c : cs.classes) {
    auto cnt = std::upper_bound(c.ids.begin(), c.ids.end(), prefix_n - 1) - c.ids.begin();
    prod *= static_cast<double>(cnt + 1);
    if (prod > 1e18) return prod;
  }
  return prod;
}

struct CountBest {
  ExtendedValue value = Rational(0);
  int count = 0;
  std::vector<int> counts;
  bool has_counts = false;
};

AgentSet materialize_counts(const ClassSplit& cs, const std::vector<int>& counts) {
  AgentSet s;
  for (size_t c = 0; c < counts.size(); ++c) {
    s.insert(s.end(), cs.classes[c].ids.begin(), cs.classes[c].ids.begin() + counts[c]);
  }
  std::sort(s.begin(), s.end());
  return s;
}

void enumerate_counts(const ClassSplit& cs, const std::vector<int>& limits, size_t c,
                      Rational share_sum, Rational weight_sum, int count,
                      std::vector<int>& counts, CountBest& best) {
  if (c == cs.classes.size()) {
    ExtendedValue v = (Rational(1) - share_sum) * weight_sum;
    if (v < best.value) return;
    if (v == best.value) {
      if (count > best.count) return;
      if (count == best.count && best.has_counts) {
        AgentSet mine = materialize_counts(cs, counts);
        AgentSet theirs = materialize_counts(cs, best.counts);
        if (!std::lexicographical_compare(mine.begin(), mine.end(), theirs.begin(),
                                          theirs.end())) {
          return;
        }
      }
    }
    best.value = v;
    best.count = count;
    best.counts = counts;
    best.has_counts = true;
    return;
  }
  Rational s = share_sum;
  Rational w = weight_sum;
  for (int k = 0; k <= limits[c]; ++k) {
    counts[c] = k;
    enumerate_counts(cs, limits, c + 1, s, w, count + k, counts, best);
    s += cs.classes[c].share;
    w += cs.classes[c].weight;
  }
  counts[c] = 0;
}

std::pair<AgentSet, ExtendedValue> class_opt(const Instance& inst, const ClassSplit& cs,
                                             int prefix_n) {
  std::vector<int> limits;
  for (const AgentClass& c : cs.classes) {
    limits.push_back(static_cast<int>(
        std::upper_bound(c.ids.begin(), c.ids.end(), prefix_n - 1) - c.ids.begin()));
  }
  CountBest best;
  std::vector<int> counts(cs.classes.size(), 0);
  enumerate_counts(cs, limits, 0, Rational(0), Rational(0), 0, counts, best);
  AgentSet set = best.has_counts ? materialize_counts(cs, best.counts) : AgentSet{};
  (void)inst;
  return {std::move(set), best.value};
}

void ensure_prefix(const Instance& inst, int prefix_n) {
  if (prefix_n < 0 || prefix_n > inst.size()) {
    throw std::invalid_argument("prefix length out of range");
  }
}

}  // namespace

std::pair<AgentSet, ExtendedValue> brute_force_opt(const Instance& inst, int prefix_n,
                                                   const OracleConfig& cfg) {
  ensure_prefix(inst, prefix_n);
  if (prefix_n == 0) return {AgentSet{}, Rational(0)};
  if (prefix_n <= cfg.cap_bits && prefix_n <= kMaxMaskBits) {
    WalkResult r = walk_masks(inst, prefix_n, cfg, /*track_highbit=*/false);
    return {std::move(r.best.set), r.best.value};
  }
  if (inst.additive()) {
    ClassSplit cs = build_classes(inst, prefix_n);
    if (class_product(cs, prefix_n) <= static_cast<double>(std::uint64_t(1) << cfg.cap_bits)) {
      return class_opt(inst, cs, prefix_n);
    }
  }
  throw OracleCapExceeded("instance exceeds the oracle enumeration cap (" +
                          std::to_string(prefix_n) + " agents, cap 2^" +
                          std::to_string(cfg.cap_bits) + ")");
}

OracleResult prefix_opts(const Instance& inst, const OracleConfig& cfg) {
  const int n = inst.size();
  OracleResult out;
  out.per_prefix.assign(static_cast<size_t>(n) + 1, ExtendedValue(Rational(0)));
  if (n == 0) {
    out.best_value = Rational(0);
    return out;
  }
  if (n <= cfg.cap_bits && n <= kMaxMaskBits) {
    WalkResult r = walk_masks(inst, n, cfg, /*track_highbit=*/true);
    for (int i = 1; i <= n; ++i) {
      ExtendedValue v = out.per_prefix[static_cast<size_t>(i) - 1];
      const ExtendedValue& h = r.highbit_best[static_cast<size_t>(i) - 1];
      out.per_prefix[static_cast<size_t>(i)] = h > v ? h : v;
    }
    out.best_set = std::move(r.best.set);
    out.best_value = r.best.value;
    return out;
  }
  if (inst.additive()) {
    ClassSplit cs = build_classes(inst, n);
    if (class_product(cs, n) <= static_cast<double>(std::uint64_t(1) << cfg.cap_bits)) {
      std::vector<ExtendedValue> vals(static_cast<size_t>(n) + 1, ExtendedValue(Rational(0)));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
#endif
      for (int i = 1; i <= n; ++i) {
        vals[static_cast<size_t>(i)] = class_opt(inst, cs, i).second;
      }
      out.per_prefix = std::move(vals);
      auto full = class_opt(inst, cs, n);
      out.best_set = std::move(full.first);
      out.best_value = full.second;
      return out;
    }
  }
  throw OracleCapExceeded("instance exceeds the oracle enumeration cap");
}

std::pair<std::optional<AgentId>, ExtendedValue> best_singleton(const Instance& inst,
                                                                int prefix_n) {
  ensure_prefix(inst, prefix_n);
  std::optional<AgentId> best;
  ExtendedValue value = Rational(0);
  for (AgentId i = 0; i < prefix_n; ++i) {
    ExtendedValue v = principal_utility(inst, AgentSet{i});
    if (v > value) {
      value = v;
      best = i;
    }
  }
  return {best, value};
}

std::pair<AgentSet, ExtendedValue> brute_force_opt_serial(const Instance& inst, int prefix_n,
                                                          int cap_bits) {
  ensure_prefix(inst, prefix_n);
  if (prefix_n == 0) return {AgentSet{}, Rational(0)};
  if (prefix_n > cap_bits || prefix_n > kMaxMaskBits) {
    throw OracleCapExceeded("serial oracle cap exceeded");
  }
  OracleConfig cfg;
  cfg.cap_bits = cap_bits;
  cfg.parallel = false;
  WalkResult r = walk_masks(inst, prefix_n, cfg, /*track_highbit=*/false);
  return {std::move(r.best.set), r.best.value};
}

}  // namespace omac
