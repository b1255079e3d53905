// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include "amalgam/generic_sim.hpp"

#include <random>

namespace amalgam::sim {

BudgetExhausted::BudgetExhausted(const std::string& what, LimitStructure p) : Error(what), partial(std::move(p)) {}

LimitStructure limit_structure(std::span<const Condition> chain)
{
    for (std::size_t idx = 0; idx < chain.size(); ++idx) {
        if (auto v = validate_condition(chain[idx]); !v.ok()) {
            throw NotAChain("chain member " + std::to_string(idx) + " is invalid: " + v.violations.front().describe());
        }
        if (idx > 0) {
            if (auto verdict = check_extension(chain[idx], chain[idx - 1]); !verdict) {
                throw NotAChain("chain member " + std::to_string(idx) + " does not extend its predecessor: " +
                                verdict.describe());
            }
        }
    }
    LimitStructure out;
    out.chain.assign(chain.begin(), chain.end());
    for (const auto& p : chain) {
        out.points |= p.support();
        out.depth = std::max(out.depth, p.depth());
        for (const auto& pair : p.index_pairs()) {
            out.U[pair] |= p.cell(pair);
        }
    }
    if (!chain_consistent(out)) {
        throw NotAChain("chain members are not restrictions of their union");
    }
    out.unmet_intersections = count_unmet_intersections(out);
    return out;
}

bool chain_consistent(const LimitStructure& s)
{
    for (const auto& p : s.chain) {
        for (const auto& pair : p.index_pairs()) {
            if ((s.cell(pair.alpha, pair.i) & p.support()) != p.cell(pair)) {
                return false;
            }
        }
    }
    return true;
}

LimitVerdict check_p2_global(const LimitStructure& s)
{
    for (Ordinal alpha : s.points) {
        for (Level i = 0; i < s.depth; ++i) {
            const auto& u = s.cell(alpha, i);
            if (!u.contains(alpha) || (i > 0 && !u.subset_of(s.cell(alpha, i - 1)))) {
                return {false, Violation{Clause::p2, alpha, 0, i}};
            }
        }
    }
    return {};
}

LimitVerdict check_p3_global(const LimitStructure& s)
{
    if (s.depth == 0) {
        return {};
    }
    for (Ordinal alpha : s.points) {
        for (Ordinal beta : s.points) {
            if (beta <= alpha) {
                continue;
            }
            for (Level i = 0; i < s.depth; ++i) {
                const auto& u = s.cell(alpha, i);
                if (u.contains(beta) && u.subset_of(s.cell(beta, 0))) {
                    return {false, Violation{Clause::p3, alpha, beta, i}};
                }
            }
        }
    }
    return {};
}

std::size_t count_unmet_intersections(const LimitStructure& s)
{
    std::size_t unmet = 0;
    std::vector<PointSet> cells;
    for (const auto& [pair, cell] : s.U) {
        cells.push_back(cell);
    }
    for (std::size_t a = 0; a < cells.size(); ++a) {
        for (std::size_t b = a; b < cells.size(); ++b) {
            const PointSet meet = cells[a] & cells[b];
            for (Ordinal x : meet) {
                bool met = false;
                for (Level l = 0; l < s.depth && !met; ++l) {
                    met = s.cell(x, l).subset_of(meet);
                }
                unmet += met ? 0 : 1;
            }
        }
    }
    return unmet;
}

namespace {

class Simulation {
public:
    explicit Simulation(const SimulationConfig& config) : config_(config), rng_(config.seed) { chain_.emplace_back(); }

    LimitStructure run()
    {
        std::size_t steps = 0;
        std::size_t turn = 0;
        while (!done()) {
            if (steps >= config_.budget) {
                throw BudgetExhausted("extension budget of " + std::to_string(config_.budget) + " steps exhausted",
                                      limit_structure(chain_));
            }
            // Round robin; a task that is not admissible passes its turn on.
            bool extended = false;
            for (std::size_t tries = 0; tries < 4 && !extended; ++tries) {
                switch ((turn + tries) % 4) {
                case 0:
                    extended = add_point_task();
                    break;
                case 1:
                    extended = deepen_task();
                    break;
                case 2:
                    extended = config_.extra_tasks && amalgamation_task();
                    break;
                case 3:
                    extended = config_.extra_tasks && repair_task();
                    break;
                }
            }
            ++turn;
            ++steps;
        }
        return limit_structure(chain_);
    }

private:
    const Condition& current() const { return chain_.back(); }

    bool done() const { return current().support().size() == config_.universe && current().depth() >= config_.depth; }

    std::optional<Ordinal> least_missing() const
    {
        for (Ordinal x = 0; x < config_.universe; ++x) {
            if (!current().has(x)) {
                return x;
            }
        }
        return std::nullopt;
    }

    std::size_t pick(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }

    bool add_point_task()
    {
        auto alpha = least_missing();
        if (!alpha) {
            return false;
        }
        const auto pairs = current().index_pairs();
        if (config_.extra_tasks && !pairs.empty() && pick(2) == 0) {
            chain_.push_back(attach_point(current(), *alpha, pairs[pick(pairs.size())]));
        } else {
            chain_.push_back(add_point(current(), *alpha));
        }
        return true;
    }

    bool deepen_task()
    {
        if (current().depth() >= config_.depth) {
            return false;
        }
        chain_.push_back(deepen(current()));
        return true;
    }

    // Amalgamate the current condition with a copy of itself placed directly above it.
    bool amalgamation_task()
    {
        const Condition& p0 = current();
        const Level n = p0.depth();
        if (n < 2 || p0.support().empty()) {
            return false;
        }
        const std::size_t size = p0.support().size();
        const Ordinal start = p0.support().back() + 1;
        const std::uint64_t top = std::uint64_t{start} + size + size * 2 * n;  // copy, then the fresh block
        if (top > config_.universe) {
            return false;
        }
        OrdinalMap shift;
        for (std::size_t r = 0; r < size; ++r) {
            shift.emplace(p0.support()[r], static_cast<Ordinal>(start + r));
        }
        Condition p1 = relabel(p0, shift);
        const Ordinal xi0 = p0.support()[pick(size)];
        const Level k = static_cast<Level>(pick(n - 1));
        const Level m = k + 1 + static_cast<Level>(pick(n - 1 - k));
        auto request = make_request(p0, std::move(p1), xi0, k, m);
        chain_.push_back(amalgamate(request).p);
        return true;
    }

    // Deepening gives every point a singleton cell, which sits inside every cell meeting at it.
    bool repair_task()
    {
        if (current().depth() >= config_.depth || current().depth() == 0) {
            return false;
        }
        LimitStructure view = limit_structure(std::span<const Condition>(&chain_.back(), 1));
        if (count_unmet_intersections(view) == 0) {
            return false;
        }
        chain_.push_back(deepen(current()));
        return true;
    }

    SimulationConfig config_;
    std::mt19937_64 rng_;
    std::vector<Condition> chain_;
};

}  // namespace

LimitStructure run_simulation(const SimulationConfig& config)
{
    if (config.universe < 1 || config.depth < 1) {
        throw Error("simulation needs at least one point and depth >= 1");
    }
    return Simulation(config).run();
}

KillResult kill_irreducibility_attempt(std::span<const MarkedCondition> family, Level k, Level m)
{
    auto pair = find_amalgamable_pair(family);
    if (!pair) {
        throw NoAmalgamablePair("no two members are aligned twins with ordered supports");
    }
    const auto& lo = family[pair->first];
    const auto& hi = family[pair->second];
    KillResult out{pair->first, pair->second, make_request(lo.cond, hi.cond, lo.mark, k, m), {}};
    out.trace = amalgamate(out.request);

    const Condition& p = out.trace.p;
    if (!p.cell(hi.mark, m).contains(lo.mark) || !p.cell(hi.mark, k).subset_of(p.cell(lo.mark, k))) {
        throw Error("amalgam does not realize the required containments");
    }
    return out;
}

Fragment export_fragment(const LimitStructure& s, const PointSet& subset)
{
    if (!subset.subset_of(s.points)) {
        throw Error("subset " + to_string(subset) + " is not inside the structure's points");
    }
    Fragment out;
    for (Ordinal alpha : subset) {
        for (Level i = 0; i < s.depth; ++i) {
            out.generators.push_back(s.cell(alpha, i) & subset);
        }
    }
    out.space = topo::generate_topology(subset, out.generators);
    return out;
}

}  // namespace amalgam::sim
