// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "amalgam/amalgamation.hpp"
#include "amalgam/verifier.hpp"
#include "support/amalgam_oracle.hpp"
#include "support/fixtures.hpp"

using namespace amalgam;
using namespace fixtures;

namespace {

AmalgamationRequest pair_request() { return make_request(fix_pair0(), fix_pair1(), 0, 0, 1); }
AmalgamationRequest root_request() { return make_request(fix_root0(), fix_root1(), 1, 0, 1); }

std::string clause_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const HypothesisError& e) {
        return e.clause();
    }
    return "none";
}

}  // namespace

TEST_CASE("fresh_block")
{
    const FreshBlock b = fresh_block(PointSet{0, 1}, 2);
    CHECK(b.points == PointSet{2, 3, 4, 5});
    CHECK(b.at({0, 0}) == 2);
    CHECK(b.at({0, 1}) == 3);
    CHECK(b.at({1, 0}) == 4);
    CHECK(b.at({1, 1}) == 5);

    const FreshBlock single = fresh_block(PointSet{7}, 1);
    CHECK(single.points == PointSet{8});
    CHECK(single.at({7, 0}) == 8);

    CHECK(fresh_block(PointSet{}, 3).points.empty());
}

TEST_CASE("compute_V")
{
    CHECK(compute_V(fix_pair0(), 0, 0) == PairSet{{0, 0}, {0, 1}});
    CHECK(compute_V(fix_root0(), 1, 0) == PairSet{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(compute_V(fix_root0(), 0, 1) == PairSet{{0, 0}, {0, 1}});
}

TEST_CASE("compute_W")
{
    const auto pair_cert = *is_twin_pair(fix_pair0(), fix_pair1());
    for (Level j = 0; j < 2; ++j) {
        CHECK(compute_W(fix_pair0(), fix_pair1(), pair_cert, Side::zero, 0, j).empty());
        CHECK(compute_W(fix_pair0(), fix_pair1(), pair_cert, Side::one, 1, j).empty());
    }
    const auto root_cert = *is_twin_pair(fix_root0(), fix_root1());
    CHECK(compute_W(fix_root0(), fix_root1(), root_cert, Side::zero, 1, 0) == PairSet{{0, 0}, {0, 1}});
    CHECK(compute_W(fix_root0(), fix_root1(), root_cert, Side::zero, 0, 0) == PairSet{{0, 0}, {0, 1}});
}

TEST_CASE("build_uprime on FIX_PAIR")
{
    const auto trace = build_uprime(pair_request());
    for (Level j = 0; j < 2; ++j) {
        CHECK(trace.uprime(0, j) == PointSet{0, 1, 2, 3});
        CHECK(trace.uprime(1, j) == PointSet{0, 1, 4, 5});
        for (Ordinal b = 2; b <= 5; ++b) {
            CHECK(trace.uprime(b, j) == PointSet{b});
        }
    }
    CHECK(trace.V[0].at({0, 0}) == PairSet{{0, 0}, {0, 1}});
    CHECK(trace.V[1].at({1, 1}) == PairSet{{1, 0}, {1, 1}});
}

TEST_CASE("amalgamate FIX_PAIR gives FIX_AMALG")
{
    const auto request = pair_request();
    const auto trace = amalgamate(request);
    CHECK(trace.astar == PointSet{0, 1});
    CHECK(trace.block.points == PointSet{2, 3, 4, 5});
    CHECK(trace.p == fix_amalg());
    CHECK(trace.ufinal(1, 1) == trace.uprime(1, 1));
    CHECK(apply_modification(build_uprime(request), request) == fix_amalg());
    CHECK(verify_amalgamation(trace, request).all_hold());
}

TEST_CASE("FIX_ROOT amalgamation, hand-computed values")
{
    const auto request = root_request();
    const auto trace = amalgamate(request);
    CHECK(trace.astar == PointSet{0, 1, 2});
    CHECK(trace.block.points == PointSet{3, 4, 5, 6, 7, 8});
    CHECK(trace.block.at({0, 0}) == 3);
    CHECK(trace.block.at({1, 1}) == 6);
    CHECK(trace.block.at({2, 0}) == 7);
    for (Level j = 0; j < 2; ++j) {
        CHECK(trace.uprime(0, j) == PointSet{0, 3, 4});
        CHECK(trace.uprime(1, j) == PointSet{0, 1, 2, 3, 4, 5, 6});
        CHECK(trace.uprime(2, j) == PointSet{0, 1, 2, 3, 4, 7, 8});
        CHECK(trace.ufinal(0, j) == PointSet{0, 3, 4});
        CHECK(trace.ufinal(1, j) == PointSet{0, 1, 2, 3, 4, 5, 6, 7, 8});
        CHECK(trace.ufinal(2, j) == PointSet{0, 1, 2, 3, 4, 7, 8});
        CHECK(trace.W[0].at({1, j}) == PairSet{{0, 0}, {0, 1}});
        CHECK(trace.W[0].at({0, j}) == PairSet{{0, 0}, {0, 1}});
        CHECK(trace.V[1].at({0, j}) == PairSet{{0, 0}, {0, 1}});
    }
    const auto report = verify_amalgamation(trace, request);
    CHECK(report.all_hold());
    CHECK(report.push2_readings.eq5);
}

TEST_CASE("hypothesis violations name their clause")
{
    CHECK(clause_of([] { make_request(fix_pair0(), fix_pair1(), 0, 1, 1); }) == "k<m");
    CHECK(clause_of([] { make_request(fix_pair0(), fix_pair1(), 0, 0, 2); }) == "m<n");
    CHECK(clause_of([] { make_request(fix_root0(), fix_root1(), 0, 0, 1); }) == "xi0");
    CHECK(clause_of([] { make_request(fix_pair1(), fix_pair0(), 1, 0, 1); }) == "support-order");
    CHECK(clause_of([] { make_request(fix_pair0(), deepen(fix_pair1()), 0, 0, 1); }) == "twins");
    CHECK(clause_of([] { make_request(fix_bad(), fix_bad(), 0, 0, 1); }) == "valid");
}

TEST_CASE("verify_amalgamation flags mutated FIX_AMALG traces")
{
    const auto request = pair_request();
    SUBCASE("0 removed from U(1,1)")
    {
        auto trace = amalgamate(request);
        PointSet cell = trace.p.cell(1, 1);
        cell.erase(0);
        trace.p.set_cell(1, 1, cell);
        const auto report = verify_amalgamation(trace, request);
        CHECK_FALSE(report[Claim::star].holds);
    }
    SUBCASE("4 removed from U(0,0)")
    {
        auto trace = amalgamate(request);
        PointSet cell = trace.p.cell(0, 0);
        cell.erase(4);
        trace.p.set_cell(0, 0, cell);
        const auto report = verify_amalgamation(trace, request);
        CHECK_FALSE(report[Claim::u2].holds);
    }
}

TEST_CASE("every mutation hook is caught by its own checker on FIX_ROOT")
{
    // The push hooks need a row with a member outside its smash image, which FIX_PAIR lacks.
    const auto request = root_request();
    for (Claim claim : kAllClaims) {
        CAPTURE(claim_name(claim));
        const auto trace = amalgamate(request, verify::mutation_hooks(claim));
        CHECK_FALSE(verify_amalgamation(trace, request)[claim].holds);
    }
}

TEST_CASE("claim names round-trip")
{
    for (Claim claim : kAllClaims) {
        CHECK(claim_from_name(claim_name(claim)) == claim);
    }
    CHECK_FALSE(claim_from_name("nope"));
}

TEST_CASE("property: construction agrees with an independent evaluation of its equations")
{
    verify::GenParams params;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        auto rng = verify::trial_stream(31, trial);
        const auto request = verify::gen_twin_request(params, rng);
        const auto trace = amalgamate(request);
        const auto expected = oracle::amalgamate(oracle::table_of(request.p0), oracle::table_of(request.p1),
                                                 request.xi0, request.k, request.m);
        REQUIRE(trace.p.support().size() == expected.astar.size() * (request.depth() + 1));
        for (const auto& pair : trace.p.index_pairs()) {
            const oracle::Cell key{pair.alpha, pair.i};
            const auto& up = trace.p_prime.cell(pair);
            const auto& fin = trace.p.cell(pair);
            CHECK(oracle::Points(up.begin(), up.end()) == expected.uprime.at(key));
            CHECK(oracle::Points(fin.begin(), fin.end()) == expected.ufinal.at(key));
        }
        for (int e = 0; e < 2; ++e) {
            for (const auto& [row, pairs] : trace.W[e]) {
                oracle::Cells got;
                for (const auto& p : pairs) {
                    got.insert({p.alpha, p.i});
                }
                CHECK(got == expected.W[e].at({row.alpha, row.i}));
            }
        }
    }
}

TEST_CASE("property: structural consequences of the construction")
{
    verify::GenParams params;
    params.min_root = 1;
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
        auto rng = verify::trial_stream(32, trial);
        const auto request = verify::gen_twin_request(params, rng);
        const auto trace = amalgamate(request);
        const Level n = request.depth();
        for (Ordinal z : trace.p.support()) {
            for (Level j = 1; j < n; ++j) {
                CHECK(trace.uprime(z, j).subset_of(trace.uprime(z, j - 1)));
                CHECK(trace.ufinal(z, j).subset_of(trace.ufinal(z, j - 1)));
            }
            if (!request.p0.has(z)) {
                for (Level j = 0; j < n; ++j) {
                    CHECK((trace.ufinal(z, j) & trace.astar) == (trace.uprime(z, j) & trace.astar));
                }
            }
        }
        for (Side eps : {Side::zero, Side::one}) {
            const Condition& side = request.side(eps);
            for (const auto& pair : side.index_pairs()) {
                CHECK((trace.p_prime.cell(pair) & side.support()) == side.cell(pair));
            }
        }
        const auto report = verify_amalgamation(trace, request);
        CHECK(report.all_hold());
        CHECK(report.push2_readings.eq5);
    }
}
