/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_ENGINE_HPP
#define OMAC_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omac/balance.hpp"
#include "omac/model.hpp"
#include "omac/quality.hpp"

namespace omac {

enum class AlgKind { bp, max, alg_omac, oks_beta, no_op };

struct OnlineAlgorithm {
  AlgKind kind = AlgKind::no_op;
  bool analytic = true;    // alg_omac: exact mixture instead of a sampled coin
  std::uint64_t seed = 0;  // alg_omac sampled mode
  Rational beta;           // oks_beta threshold
};

const char* alg_name(AlgKind k);
std::optional<AlgKind> alg_from_name(const std::string& name);

/// One arrival: which agents entered the team (at most the arrival itself),
/// which left, and the utility of the team held afterwards.
struct StepRecord {
  AgentId arrival = -1;
  std::vector<AgentId> accepted;
  std::vector<AgentId> dismissed;
  ExtendedValue utility;
  int hired_count = 0;
};

/// Full run record. Sets are stored as per-step deltas so trajectories over
/// thousands of arrivals stay small; set_after() reconstructs any prefix.
struct Trajectory {
  std::string algorithm;
  std::vector<StepRecord> steps;
  AgentSet final_set;
  ExtendedValue final_utility;

  AgentSet set_after(int step_count) const;
};

/// One BP-STEP: rebuilds the team from the canonical-sorted candidates,
/// accepting each agent i of group x iff alpha(S_partial + i) < b(S_partial, x)
/// strictly. Dismissed agents are gone for good; callers must not offer them
/// again. Additive instances only.
AgentSet bp_step(const Instance& inst, const QualityStructure& qs, const AgentSet& hired,
                 AgentId arrival);

/// One MAX-STEP: keep whichever singleton has the larger utility; ties keep
/// the incumbent. nullopt plays the dummy agent (utility 0).
std::optional<AgentId> max_step(const Instance& inst, std::optional<AgentId> incumbent,
                                AgentId arrival);

Trajectory run_bp(const Instance& inst);
Trajectory run_max(const Instance& inst);
Trajectory run_noop(const Instance& inst);

/// Dispatcher over the algorithm kinds. alg_omac requires sampled mode here
/// (the analytic mixture has no single trajectory).
Trajectory run_online(const OnlineAlgorithm& alg, const Instance& inst);

/// Exact expected utility of the uniform BP/MAX mixture:
/// (g(BP(I)) + g(MAX(I))) / 2. No sampling involved.
ExtendedValue alg_omac_expected_utility(const Instance& inst);

/// Demonstration mode: one fair coin drawn from the seed picks BP or MAX for
/// the whole run; seeds 0 and 1 yield exactly the BP and MAX trajectories.
Trajectory alg_omac_sampled(const Instance& inst, std::uint64_t seed);

/// Independent trajectory validator: replays the deltas and re-derives every
/// utility, checking feasibility (S_i within S_{i-1} + arrival) and
/// irrevocability (no dismissed agent ever returns). Throws on violation.
void check_trajectory(const Instance& inst, const Trajectory& traj);

/// Strict balance-point containment: alpha(S^x) < b(S, x) for every group x
/// that S touches. Every set BP holds satisfies this.
bool bp_containment_ok(const Instance& inst, const QualityStructure& qs, const AgentSet& s);

}  // namespace omac

#endif  // OMAC_ENGINE_HPP
