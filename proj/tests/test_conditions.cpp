// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "amalgam/condition.hpp"
#include "amalgam/verifier.hpp"
#include "support/fixtures.hpp"

using namespace amalgam;
using namespace fixtures;

TEST_CASE("point sets behave as sorted sets")
{
    const PointSet a{3, 1, 2, 1};
    CHECK(a.values() == std::vector<Ordinal>{1, 2, 3});
    CHECK(a.rank(3) == 2);
    CHECK_THROWS_AS(a.rank(7), std::out_of_range);
    CHECK(PointSet{1, 2}.subset_of(a));
    CHECK(a.subset_of(a));
    CHECK_FALSE(a.strict_subset_of(a));
    CHECK((a & PointSet{2, 9}) == PointSet{2});
    CHECK((a - PointSet{2}) == PointSet{1, 3});
    CHECK((a | PointSet{0}) == PointSet{0, 1, 2, 3});
    CHECK_FALSE(a.intersects(PointSet{4, 5}));
    CHECK(precedes(PointSet{}, PointSet{0}));
    CHECK(precedes(PointSet{0, 1}, PointSet{2}));
    CHECK_FALSE(precedes(PointSet{0, 2}, PointSet{2}));
}

TEST_CASE("structural errors are distinct from validity violations")
{
    CHECK_THROWS_AS(Condition(PointSet{0}, 1, {}), StructureError);
    CHECK_THROWS_AS(Condition(PointSet{0}, 1, {PointSet{0, 4}}), StructureError);
    CHECK_THROWS_AS(Condition::from_table(PointSet{0}, 2, {{{0, 0}, PointSet{0}}}), StructureError);
    CHECK_THROWS_AS(fix_t().cell(0, 1), std::out_of_range);
}

TEST_CASE("validate_condition on the fixtures")
{
    CHECK(validate_condition(fix_t()).ok());
    CHECK(validate_condition(Condition{}).ok());

    const auto bad = validate_condition(fix_bad());
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.violations.front() == Violation{Clause::p3, 0, 1, 0});

    Condition hollow = fix_t();
    hollow.set_cell(0, 0, PointSet{});
    const auto v = validate_condition(hollow);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations.front().clause == Clause::p2);
    CHECK(v.violations.front().alpha == 0);
    CHECK(v.violations.front().i == 0);
}

TEST_CASE("level growth breaks P2")
{
    const Condition c = make({{0, {{0}, {0, 1}}}, {1, {{1}, {1}}}}, 2);
    const auto v = validate_condition(c);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violations.front() == Violation{Clause::p2, 0, 0, 1});
}

TEST_CASE("strict inclusion changes which tables are conditions")
{
    // Equal cells are not proper subsets, so the P3 premise never fires.
    CHECK(is_valid(fix_bad(), Inclusion::strict));
    CHECK_FALSE(is_valid(fix_bad(), Inclusion::non_strict));
    // Under strict reading a constant column violates the level clause.
    CHECK_FALSE(is_valid(fix_pair0(), Inclusion::strict));
    CHECK(is_valid(fix_pair0(), Inclusion::non_strict));
}

TEST_CASE("check_extension examples")
{
    CHECK(check_extension(fix_q(), fix_t()));
    CHECK(check_extension(fix_t(), fix_t()));

    const auto verdict = check_extension(q_star(), fix_q());
    REQUIRE_FALSE(verdict);
    CHECK(verdict.clause == OrderClause::d1);
    CHECK(verdict.cells == std::vector<IndexPair>{{0, 0}, {1, 0}});

    CHECK_THROWS_AS(check_extension(fix_bad(), fix_t()), InvalidCondition);
    CHECK_THROWS_AS(check_extension(fix_t(), fix_bad()), InvalidCondition);
}

TEST_CASE("check_extension reports each clause")
{
    SUBCASE("a: a point is lost")
    {
        const auto v = check_extension(fix_t(), fix_q());
        CHECK(v.clause == OrderClause::a);
        CHECK(v.point == Ordinal{1});
    }
    SUBCASE("b: depth shrinks")
    {
        CHECK(check_extension(fix_t(), deepen(fix_t())).clause == OrderClause::b);
    }
    SUBCASE("c: restriction differs")
    {
        const Condition q = make({{0, {{0, 1}}}, {1, {{1}}}}, 1);
        CHECK(check_extension(q, fix_q()).clause == OrderClause::c);
    }
    SUBCASE("d2: inclusion is lost")
    {
        const Condition p = make({{0, {{0}}}, {1, {{0, 1}}}}, 1);
        const Condition q = make({{0, {{0, 2}}}, {1, {{0, 1}}}, {2, {{2}}}}, 1);
        REQUIRE(is_valid(p));
        REQUIRE(is_valid(q));
        const auto v = check_extension(q, p);
        CHECK(v.clause == OrderClause::d2);
        CHECK(v.cells == std::vector<IndexPair>{{0, 0}, {1, 0}});
    }
}

TEST_CASE("add_point and deepen examples")
{
    CHECK(add_point(fix_t(), 5) == make({{0, {{0}}}, {5, {{5}}}}, 1));
    CHECK(check_extension(add_point(fix_t(), 5), fix_t()));
    CHECK_THROWS_AS(add_point(fix_t(), 0), DuplicatePoint);
    const Condition lone = add_point(Condition{}, 3);
    CHECK(lone.support() == PointSet{3});
    CHECK(lone.depth() == 0);

    CHECK(deepen(fix_t()) == make({{0, {{0}, {0}}}}, 2));
    CHECK(deepen(Condition{}).depth() == 1);
    CHECK(deepen(Condition{}).support().empty());
    const Condition dq = deepen(fix_q());
    CHECK(dq.cell(0, 1) == PointSet{0});
    CHECK(dq.cell(1, 1) == PointSet{1});
    CHECK(check_extension(dq, fix_q()));
}

TEST_CASE("attach_point places the new point inside the anchor's supersets")
{
    const Condition q = attach_point(fix_root0(), 7, {1, 0});
    CHECK(q.cell(1, 0) == PointSet{0, 1, 7});
    CHECK(q.cell(0, 0) == PointSet{0});
    CHECK(q.cell(7, 0) == PointSet{7});
    CHECK(check_extension(q, fix_root0()));
}

TEST_CASE("restrict, drop_level and relabel")
{
    CHECK(restrict_support(fix_root0(), PointSet{0}) == make({{0, {{0}, {0}}}}, 2));
    CHECK(drop_level(fix_root0(), 0) == make({{0, {{0}}}, {1, {{0, 1}}}}, 1));
    CHECK(relabel(fix_root0(), {{0, 0}, {1, 2}}) == fix_root1());
}

TEST_CASE("property: generated conditions satisfy P3 as an order constraint")
{
    verify::GenParams params;
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
        auto rng = verify::trial_stream(11, trial);
        const Condition c = verify::gen_condition(params, rng);
        REQUIRE(is_valid(c));
        for (Ordinal a : c.support()) {
            for (Ordinal b : c.support()) {
                if (a >= b) {
                    continue;
                }
                for (Level i = 0; i < c.depth(); ++i) {
                    const bool blocked = c.cell(a, i).contains(b) && c.cell(a, i).subset_of(c.cell(b, 0));
                    CHECK_FALSE(blocked);
                }
            }
        }
    }
}

TEST_CASE("property: order laws on generated chains")
{
    verify::GenParams params;
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
        auto rng = verify::trial_stream(12, trial);
        const Condition p = verify::gen_condition(params, rng);
        const Condition q = verify::gen_extension(p, rng, params.universe, 3);
        const Condition r = verify::gen_extension(q, rng, params.universe, 3);
        REQUIRE(is_valid(q));
        REQUIRE(is_valid(r));
        CHECK(check_extension(p, p));
        CHECK(check_extension(q, p));
        CHECK(check_extension(r, q));
        CHECK(check_extension(r, p));
        CHECK(check_extension(deepen(p), p));
        CHECK(check_extension(add_point(p, params.universe), p));
    }
}
