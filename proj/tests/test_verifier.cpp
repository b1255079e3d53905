// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "amalgam/verifier.hpp"
#include "support/fixtures.hpp"

using namespace amalgam;
using namespace amalgam::verify;
using namespace fixtures;

TEST_CASE("gen_condition edge parameters")
{
    auto rng = trial_stream(1, 0);
    GenParams one;
    one.max_points = 1;
    one.max_depth = 1;
    const Condition t = gen_condition(one, rng);
    CHECK(t.support().size() == 1);
    CHECK(t.depth() == 1);
    CHECK(canonicalize(t) == canonicalize(fix_t()));

    GenParams none;
    none.max_points = 0;
    CHECK(gen_condition(none, rng) == Condition{});
}

TEST_CASE("generators are sound")
{
    GenParams params;
    params.seed = 42;
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
        auto rng = trial_stream(params.seed, trial);
        CHECK(is_valid(gen_condition(params, rng)));
        const auto request = gen_twin_request(params, rng);
        CHECK_NOTHROW(check_request(request));
        CHECK(is_twin_pair(request.p0, request.p1));
        CHECK(request.k < request.m);
        CHECK(request.m < request.depth());
    }
}

TEST_CASE("gen_twin_request shapes")
{
    GenParams minimal;
    minimal.max_points = 1;
    minimal.max_depth = 2;
    auto rng = trial_stream(3, 0);
    const auto small = gen_twin_request(minimal, rng);
    CHECK(small.p0.support().size() == 1);
    CHECK(small.cert.root.empty());
    CHECK(small.depth() == 2);
    CHECK(canonicalize(small.p0) == canonicalize(fix_pair0()));

    GenParams rooted;
    rooted.max_points = 2;
    rooted.max_depth = 2;
    rooted.min_root = 1;
    const auto r = gen_twin_request(rooted, rng);
    CHECK(r.cert.root.size() == 1);
    CHECK(r.p0.support().size() == 2);

    GenParams shallow;
    shallow.max_depth = 1;
    CHECK_THROWS_AS(gen_twin_request(shallow, rng), Error);
}

TEST_CASE("trial streams are reproducible")
{
    GenParams params;
    auto a = trial_stream(9, 4);
    auto b = trial_stream(9, 4);
    CHECK(gen_condition(params, a) == gen_condition(params, b));
}

TEST_CASE("run_fuzz basics")
{
    GenParams params;
    params.trials = 0;
    const auto empty = run_fuzz(params, {});
    CHECK(empty.trials == 0);
    CHECK(empty.failures.empty());

    params.trials = 100;
    params.seed = 7;
    CHECK(run_fuzz(params, {}).failures.empty());

    FuzzOptions unknown;
    unknown.property = "nope";
    CHECK_THROWS_AS(run_fuzz(params, unknown), Error);
}

TEST_CASE("every property passes a short campaign")
{
    GenParams params;
    params.trials = 200;
    params.seed = 8;
    for (const auto& name : property_names()) {
        CAPTURE(name);
        FuzzOptions options;
        options.property = name;
        CHECK(run_fuzz(params, options).failures.empty());
    }
}

TEST_CASE("fuzz reports are deterministic")
{
    GenParams params;
    params.trials = 50;
    params.seed = 13;
    FuzzOptions options;
    options.mutation = Claim::u2;
    const auto a = run_fuzz(params, options);
    const auto b = run_fuzz(params, options);
    REQUIRE(a.failures.size() == b.failures.size());
    for (std::size_t f = 0; f < a.failures.size(); ++f) {
        CHECK(a.failures[f].trial == b.failures[f].trial);
        CHECK(a.failures[f].checks == b.failures[f].checks);
        REQUIRE(a.failures[f].witness.has_value() == b.failures[f].witness.has_value());
        if (a.failures[f].witness) {
            CHECK(a.failures[f].witness->p0 == b.failures[f].witness->p0);
        }
    }
}

TEST_CASE("a mutation on the modification step is reported with a shrunk witness")
{
    GenParams params;
    params.trials = 10;
    FuzzOptions options;
    options.mutation = Claim::star;
    const auto report = run_fuzz(params, options);
    REQUIRE_FALSE(report.failures.empty());
    for (const auto& f : report.failures) {
        REQUIRE(f.witness);
        CHECK(f.witness_points <= 6);
        CHECK(witness_points(*f.witness) <= witness_points(*f.input));
    }
}

TEST_CASE("shrink")
{
    const RequestProperty star_breaks = [](const AmalgamationRequest& r) {
        const auto trace = amalgamate(r, mutation_hooks(Claim::star));
        return !verify_amalgamation(trace, r)[Claim::star].holds;
    };
    const auto pair = make_request(fix_pair0(), fix_pair1(), 0, 0, 1);
    // Already minimal: one point per side and two levels.
    const auto same = shrink(pair, star_breaks);
    CHECK(same.p0 == pair.p0);
    CHECK(same.p1 == pair.p1);

    const RequestProperty never = [](const AmalgamationRequest&) { return false; };
    CHECK_THROWS_AS(shrink(pair, never), Error);

    // A rooted request shrinks back to the bare pair shape.
    const auto rooted = make_request(fix_root0(), fix_root1(), 1, 0, 1);
    const auto small = shrink(rooted, star_breaks);
    CHECK(witness_points(small) == 2);
    CHECK(star_breaks(small));

    // No single further edit keeps the failure.
    CHECK(witness_points(shrink(small, star_breaks)) == witness_points(small));
}

TEST_CASE("shrink_condition")
{
    const auto has_three = [](const Condition& c) { return c.support().size() >= 3; };
    const Condition big = make({{0, {{0}, {0}}}, {1, {{0, 1}, {1}}}, {2, {{2}, {2}}}, {3, {{3}, {3}}}}, 2);
    REQUIRE(is_valid(big));
    const Condition small = shrink_condition(big, has_three);
    CHECK(small.support().size() == 3);
    CHECK(small.depth() == 0);
    CHECK_THROWS_AS(shrink_condition(fix_t(), has_three), Error);
}
