// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amalgam/amalgamation.hpp"
#include "amalgam/condition.hpp"
#include "amalgam/topology.hpp"
#include "amalgam/twins.hpp"

namespace amalgam::sim {

struct SimulationConfig {
    std::uint32_t universe = 1;  // points 0..universe-1
    Level depth = 1;
    std::uint64_t seed = 0;
    std::size_t budget = 10000;  // max extension steps
    bool extra_tasks = true;     // attach, amalgamation and base-repair steps
};

/// Pointwise union of a descending chain: U(alpha,i) = union of U_p(alpha,i) over members holding (alpha,i).
struct LimitStructure {
    PointSet points;
    Level depth = 0;
    CellTable U;
    std::vector<Condition> chain;
    std::size_t unmet_intersections = 0;  // base-repair obligations left open

    const PointSet& cell(Ordinal alpha, Level i) const { return U.at({alpha, i}); }
};

class BudgetExhausted : public Error {
public:
    BudgetExhausted(const std::string& what, LimitStructure partial);
    LimitStructure partial;
};

/// Input to limit_structure is not a descending chain of conditions.
class NotAChain : public Error {
public:
    using Error::Error;
};

LimitStructure run_simulation(const SimulationConfig& config);

LimitStructure limit_structure(std::span<const Condition> chain);

struct LimitVerdict {
    bool holds = true;
    std::optional<Violation> witness;

    explicit operator bool() const { return holds; }
};

LimitVerdict check_p2_global(const LimitStructure& s);
LimitVerdict check_p3_global(const LimitStructure& s);

/// Every chain member is the restriction of the limit: U_p(alpha,i) = U(alpha,i) n A_p.
bool chain_consistent(const LimitStructure& s);

/// Intersections x in U(a,i) n U(b,j) with no U(x,l) inside them.
std::size_t count_unmet_intersections(const LimitStructure& s);

/// No amalgamable pair in the family.
class NoAmalgamablePair : public Error {
public:
    using Error::Error;
};

struct KillResult {
    std::size_t first = 0;
    std::size_t second = 0;
    AmalgamationRequest request;
    AmalgamationTrace trace;
};

/// Amalgamates the least aligned twin pair with xi0 = its first mark, then re-checks
/// mark_first in U(mark_second, m) and U(mark_second, k) inside U(mark_first, k).
KillResult kill_irreducibility_attempt(std::span<const MarkedCondition> family, Level k, Level m);

struct Fragment {
    topo::FiniteSpace space;
    std::vector<PointSet> generators;
};

/// Subspace on `subset` generated by the traces U(alpha,i) n subset, alpha in subset.
Fragment export_fragment(const LimitStructure& s, const PointSet& subset);

}  // namespace amalgam::sim
