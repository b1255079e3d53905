// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "amalgam/generic_sim.hpp"
#include "amalgam/verifier.hpp"

namespace amalgam::verify {

namespace {

struct Outcome {
    std::vector<std::string> checks;
    std::string detail;

    bool failed() const { return !checks.empty(); }
    void fail(std::string check, const std::string& why)
    {
        if (detail.empty()) {
            detail = check + ": " + why;
        }
        checks.push_back(std::move(check));
    }
};

Outcome evaluate_request(const AmalgamationRequest& request, const std::optional<Claim>& mutation)
{
    Outcome out;
    try {
        const AmalgamationHooks hooks = mutation ? mutation_hooks(*mutation) : AmalgamationHooks{};
        const auto trace = amalgamate(request, hooks);
        const auto report = verify_amalgamation(trace, request);
        for (const auto& result : report.results) {
            if (!result.holds) {
                out.fail(claim_name(result.claim), result.witness);
            }
        }
    } catch (const std::exception& e) {
        out.fail("exception", e.what());
    }
    return out;
}

bool contains(const std::vector<std::string>& names, const std::string& name)
{
    return std::find(names.begin(), names.end(), name) != names.end();
}

class Campaign {
public:
    Campaign(const GenParams& params, const FuzzOptions& options) : params_(params), options_(options) {}

    FuzzReport run()
    {
        const auto start = std::chrono::steady_clock::now();
        FuzzReport report;
        report.property = options_.property;
        report.mutation = options_.mutation;
        report.trials = params_.trials;
        for (std::size_t trial = 0; trial < params_.trials; ++trial) {
            Rng rng = trial_stream(params_.seed, trial);
            std::optional<FuzzFailure> failure = run_trial(rng);
            if (failure) {
                failure->trial = trial;
                failure->property = options_.property;
                report.failures.push_back(std::move(*failure));
            }
        }
        report.wall_time =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        return report;
    }

private:
    std::optional<FuzzFailure> run_trial(Rng& rng)
    {
        const std::string& name = options_.property;
        if (name == "amalgamation-full") {
            return amalgamation_trial(rng);
        }
        if (name == "order-laws") {
            return order_trial(rng);
        }
        if (name == "twin-laws") {
            return twin_trial(rng);
        }
        if (name == "killer-move") {
            return killer_trial(rng);
        }
        return topology_trial(rng);
    }

    std::optional<FuzzFailure> amalgamation_trial(Rng& rng)
    {
        AmalgamationRequest request = gen_twin_request(params_, rng);
        Outcome outcome = evaluate_request(request, options_.mutation);
        if (!outcome.failed()) {
            return std::nullopt;
        }
        FuzzFailure f;
        f.checks = outcome.checks;
        f.detail = outcome.detail;
        f.input = request;
        f.witness_points = witness_points(request);
        if (shrunk_ < options_.shrink_limit) {
            ++shrunk_;
            // Under a mutation the witness must keep the matched claim failing.
            const std::string target = options_.mutation ? claim_name(*options_.mutation) : std::string{};
            const auto mutation = options_.mutation;
            const auto fails = [&target, &mutation](const AmalgamationRequest& r) {
                const Outcome o = evaluate_request(r, mutation);
                return target.empty() ? o.failed() : contains(o.checks, target);
            };
            if (fails(request)) {
                f.witness = shrink(request, fails);
                f.witness_points = witness_points(*f.witness);
            }
        }
        return f;
    }

    static std::optional<FuzzFailure> condition_failure(std::vector<Condition> conditions, Outcome outcome)
    {
        FuzzFailure f;
        f.checks = std::move(outcome.checks);
        f.detail = std::move(outcome.detail);
        f.conditions = std::move(conditions);
        return f;
    }

    // Laws that only depend on one condition, so failures can be shrunk.
    static Outcome single_condition_laws(const Condition& p, Ordinal fresh)
    {
        Outcome out;
        if (!is_valid(p)) {
            out.fail("generator", "generated condition is invalid: " + to_string(p));
            return out;
        }
        if (auto v = check_extension(p, p); !v) {
            out.fail("reflexive", v.describe());
        }
        if (auto v = check_extension(deepen(p), p); !v) {
            out.fail("deepen-extends", v.describe());
        }
        if (auto v = check_extension(add_point(p, fresh), p); !v) {
            out.fail("add-point-extends", v.describe());
        }
        for (const auto& anchor : p.index_pairs()) {
            if (auto v = check_extension(attach_point(p, fresh, anchor), p); !v) {
                out.fail("attach-point-extends", to_string(anchor) + ": " + v.describe());
                break;
            }
        }
        return out;
    }

    std::optional<FuzzFailure> order_trial(Rng& rng)
    {
        const Condition p = gen_condition(params_, rng);
        const Ordinal fresh = params_.universe;  // outside every generated support
        Outcome outcome = single_condition_laws(p, fresh);
        if (outcome.failed()) {
            auto f = condition_failure({p}, outcome);
            if (shrunk_ < options_.shrink_limit) {
                ++shrunk_;
                const auto fails = [fresh](const Condition& c) { return single_condition_laws(c, fresh).failed(); };
                f->conditions.push_back(shrink_condition(p, fails));
            }
            return f;
        }
        const std::uint32_t universe = params_.universe;
        const Condition q = gen_extension(p, rng, universe, uniform(rng, 0, 4));
        const Condition r = gen_extension(q, rng, universe, uniform(rng, 0, 4));
        for (const auto* c : {&q, &r}) {
            if (!is_valid(*c)) {
                outcome.fail("generator", "generated extension is invalid: " + to_string(*c));
            }
        }
        if (auto v = check_extension(q, p); !v) {
            outcome.fail("chain-step", "q <= p: " + v.describe());
        }
        if (auto v = check_extension(r, q); !v) {
            outcome.fail("chain-step", "r <= q: " + v.describe());
        }
        if (!outcome.failed()) {
            if (auto v = check_extension(r, p); !v) {
                outcome.fail("transitive", v.describe());
            }
        }
        if (outcome.failed()) {
            return condition_failure({p, q, r}, outcome);
        }
        return std::nullopt;
    }

    static void twin_laws(const Condition& a, const Condition& b, Outcome& out)
    {
        const auto forward = is_twin_pair(a, b);
        const auto backward = is_twin_pair(b, a);
        if (forward.has_value() != backward.has_value()) {
            out.fail("symmetry", "is_twin_pair answers differ by argument order");
        } else if (forward && forward->inverse() != backward->sigma) {
            out.fail("symmetry", "reverse twin function is not the inverse");
        }
        if (forward != std::nullopt) {
            for (const auto& [x, y] : forward->exchange) {
                if (forward->exchange.at(y) != x) {
                    out.fail("involution", "exchange(exchange(" + std::to_string(x) + ")) != itself");
                    break;
                }
            }
        }
        const bool ordered = supports_ordered(a.support(), b.support());
        const bool direct = forward.has_value() && ordered;
        const bool through_shape = twins_by_shape(a, b) && ordered;
        if (direct != through_shape) {
            out.fail("oracle", std::string("direct check says ") + (direct ? "twins" : "not twins") +
                                   ", shape check disagrees");
        }
    }

    std::optional<FuzzFailure> twin_trial(Rng& rng)
    {
        const AmalgamationRequest request = gen_twin_request(params_, rng);
        Outcome outcome;
        twin_laws(request.p0, request.p1, outcome);
        if (!is_twin_pair(request.p0, request.p1)) {
            outcome.fail("generator", "generated pair is not a twin pair");
        }
        // Near misses: a perturbed copy and an unrelated condition.
        Condition perturbed = grow_condition(rng, request.p1.support(), request.p1.depth());
        twin_laws(request.p0, perturbed, outcome);
        const Condition unrelated = gen_condition(params_, rng);
        twin_laws(request.p0, unrelated, outcome);
        if (outcome.failed()) {
            return condition_failure({request.p0, request.p1, perturbed, unrelated}, outcome);
        }
        return std::nullopt;
    }

    std::optional<FuzzFailure> killer_trial(Rng& rng)
    {
        const std::size_t count = uniform(rng, 2, 8);
        const auto family = gen_twin_family(params_, rng, count);
        const Level n = family.front().cond.depth();
        const Level k = static_cast<Level>(uniform(rng, 0, n - 2));
        const Level m = static_cast<Level>(uniform(rng, k + 1, n - 1));
        Outcome outcome;
        try {
            const auto kill = sim::kill_irreducibility_attempt(family, k, m);
            const Ordinal lo = family[kill.first].mark;
            const Ordinal hi = family[kill.second].mark;
            const Condition& p = kill.trace.p;
            if (!p.cell(hi, m).contains(lo)) {
                outcome.fail("display-member", "first mark not in U(second mark, m)");
            }
            if (!p.cell(hi, k).subset_of(p.cell(lo, k))) {
                outcome.fail("display-inclusion", "U(second mark, k) not inside U(first mark, k)");
            }
        } catch (const std::exception& e) {
            outcome.fail("exception", e.what());
        }
        if (outcome.failed()) {
            std::vector<Condition> conditions;
            for (const auto& member : family) {
                conditions.push_back(member.cond);
            }
            return condition_failure(std::move(conditions), outcome);
        }
        return std::nullopt;
    }

    std::optional<FuzzFailure> topology_trial(Rng& rng)
    {
        const std::size_t size = uniform(rng, 0, std::min<std::size_t>(4, topo::kSearchMaxPoints));
        const topo::FiniteSpace space = uniform(rng, 0, 1) == 0 ? gen_space(rng, size) : gen_t0_space(rng, size);
        Outcome outcome;
        try {
            const auto found = topo::find_irreducible_base(space);
            if (found.has_value() != topo::is_t0(space)) {
                outcome.fail("t0-agreement", std::string("search ") + (found ? "found" : "did not find") +
                                                 " an irreducible base, T0 says otherwise");
            }
            if (found) {
                if (auto verdict = topo::check_decomposition(space, *found); !verdict) {
                    outcome.fail("decomposition", verdict.clause + ": " + verdict.detail);
                }
            }
        } catch (const std::exception& e) {
            outcome.fail("exception", e.what());
        }
        if (outcome.failed()) {
            FuzzFailure f;
            f.checks = outcome.checks;
            f.detail = outcome.detail + " on opens " + std::to_string(space.opens().size());
            return f;
        }
        return std::nullopt;
    }

    GenParams params_;
    FuzzOptions options_;
    std::size_t shrunk_ = 0;
};

}  // namespace

const std::vector<std::string>& property_names()
{
    static const std::vector<std::string> names = {"amalgamation-full", "order-laws", "twin-laws", "killer-move",
                                                   "topology-oracle"};
    return names;
}

FuzzReport run_fuzz(const GenParams& params, const FuzzOptions& options)
{
    if (!contains(property_names(), options.property)) {
        throw Error("unknown property '" + options.property + "'");
    }
    if (options.mutation && options.property != "amalgamation-full") {
        throw Error("mutations apply to the amalgamation-full property only");
    }
    return Campaign(params, options).run();
}

}  // namespace amalgam::verify
