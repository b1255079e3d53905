// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "amalgam/condition.hpp"

namespace fixtures {

using amalgam::Condition;
using amalgam::PointSet;

/// Builds a condition from rows given as (alpha, [U(alpha,0), U(alpha,1), ...]).
inline Condition make(std::initializer_list<std::pair<amalgam::Ordinal, std::initializer_list<PointSet>>> rows,
                      amalgam::Level n)
{
    amalgam::CellTable table;
    std::vector<amalgam::Ordinal> support;
    for (const auto& [alpha, cells] : rows) {
        support.push_back(alpha);
        amalgam::Level i = 0;
        for (const auto& cell : cells) {
            table[{alpha, i++}] = cell;
        }
    }
    return Condition::from_table(PointSet(support), n, table);
}

inline Condition fix_t() { return make({{0, {{0}}}}, 1); }
inline Condition fix_pair0() { return make({{0, {{0}, {0}}}}, 2); }
inline Condition fix_pair1() { return make({{1, {{1}, {1}}}}, 2); }
inline Condition fix_bad() { return make({{0, {{0, 1}}}, {1, {{0, 1}}}}, 1); }
inline Condition fix_q() { return make({{0, {{0}}}, {1, {{1}}}}, 1); }
inline Condition fix_root0() { return make({{0, {{0}, {0}}}, {1, {{0, 1}, {0, 1}}}}, 2); }
inline Condition fix_root1() { return make({{0, {{0}, {0}}}, {2, {{0, 2}, {0, 2}}}}, 2); }

/// FIX_Q extended by point 2 so that U(0,0) and U(1,0) meet.
inline Condition q_star() { return make({{0, {{0, 2}}}, {1, {{1, 2}}}, {2, {{2}}}}, 1); }

/// The amalgam of FIX_PAIR at xi0=0, k=0, m=1.
inline Condition fix_amalg()
{
    return make({{0, {{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}}},
                 {1, {{0, 1, 4, 5}, {0, 1, 4, 5}}},
                 {2, {{2}, {2}}},
                 {3, {{3}, {3}}},
                 {4, {{4}, {4}}},
                 {5, {{5}, {5}}}},
                2);
}

inline std::string data_path(const std::string& name) { return std::string(AMALGAM_TEST_DATA) + "/" + name; }

}  // namespace fixtures
