// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "amalgam/amalgamation.hpp"
#include "amalgam/condition.hpp"
#include "amalgam/topology.hpp"
#include "amalgam/twins.hpp"

namespace amalgam::verify {

using Rng = std::mt19937_64;

struct GenParams {
    std::size_t max_points = 6;  // per side of a twin pair
    Level max_depth = 4;
    std::uint32_t universe = 64;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t min_root = 0;  // lower bound on |A0 n A1| for generated requests
};

/// Independent per-trial stream: the same (seed, trial) always yields the same draws.
Rng trial_stream(std::uint64_t seed, std::uint64_t trial);

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

/// Builds a valid condition on exactly `points` with depth n by randomized cell growth.
Condition grow_condition(Rng& rng, const PointSet& points, Level n);

Condition gen_condition(const GenParams& params, Rng& rng);

/// Twins p0, p1 on D u S0 and D u S1 with D < S0 < S1, plus xi0 in S0 and k < m < n.
AmalgamationRequest gen_twin_request(const GenParams& params, Rng& rng);

/// `count` pairwise twins on D u S_1, ..., D u S_count with increasing blocks and aligned marks.
std::vector<MarkedCondition> gen_twin_family(const GenParams& params, Rng& rng, std::size_t count);

/// Random descendant of p built from add_point, attach_point and deepen steps.
Condition gen_extension(const Condition& p, Rng& rng, std::uint32_t universe, std::size_t steps);

/// Random T0 space on `size` points: the up-sets of a random partial order.
topo::FiniteSpace gen_t0_space(Rng& rng, std::size_t size);

/// Random (not necessarily T0) space generated by a few random subsets.
topo::FiniteSpace gen_space(Rng& rng, std::size_t size);

/// Targeted edits of a trace, one per claim checker, used as negative controls.
AmalgamationHooks mutation_hooks(Claim claim);

using RequestProperty = std::function<bool(const AmalgamationRequest&)>;  // true = property fails

/// Number of points of A0 u A1.
std::size_t witness_points(const AmalgamationRequest& request);

/**
 * Greedy shrinking of a failing amalgamation request. Candidate edits remove
 * a point of p0 (and its twin), drop a level other than k and m, or drop a
 * member from a cell column; p1 is always rebuilt as the sigma-copy of p0 so
 * the twin hypotheses are preserved. Stops when no single edit keeps the
 * failure. Throws Error if the input does not fail.
 */
AmalgamationRequest shrink(const AmalgamationRequest& failing, const RequestProperty& fails);

/// Same for a single condition; candidate edits keep it valid.
Condition shrink_condition(const Condition& failing, const std::function<bool(const Condition&)>& fails);

struct FuzzFailure {
    std::size_t trial = 0;
    std::string property;
    std::string detail;
    std::vector<std::string> checks;  // names of the failing checks
    std::optional<AmalgamationRequest> input;
    std::optional<AmalgamationRequest> witness;  // shrunk input
    std::vector<Condition> conditions;          // inputs of condition-level properties
    std::size_t witness_points = 0;
};

struct FuzzReport {
    std::size_t trials = 0;
    std::string property;
    std::optional<Claim> mutation;
    std::vector<FuzzFailure> failures;
    std::chrono::milliseconds wall_time{0};
};

struct FuzzOptions {
    std::string property = "amalgamation-full";
    std::optional<Claim> mutation;   // negative control: edit traces before checking
    std::size_t shrink_limit = 16;   // failures past this are reported unshrunk
};

/// Names accepted by run_fuzz.
const std::vector<std::string>& property_names();

/// Throws Error on an unknown property name.
FuzzReport run_fuzz(const GenParams& params, const FuzzOptions& options);

}  // namespace amalgam::verify
