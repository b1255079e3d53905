// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amalgam/condition.hpp"

namespace amalgam {

using OrdinalMap = std::map<Ordinal, Ordinal>;

/// The unique order-preserving bijection a0 -> a1, if the sizes agree.
std::optional<OrdinalMap> order_iso(const PointSet& a0, const PointSet& a1);

/// Image of a set under a map defined on all of its members.
PointSet image(const OrdinalMap& map, const PointSet& set);

/**
 * Witness that p0 and p1 are twins.
 *
 * sigma is the twin function A0 -> A1, root is D = A0 n A1, smash is
 * sigma^-1 u id_A0 (projects A0 u A1 onto A0) and exchange is
 * sigma u sigma^-1 (the involution swapping the two sides, fixing D).
 */
struct TwinCertificate {
    OrdinalMap sigma;
    PointSet root;
    OrdinalMap smash;
    OrdinalMap exchange;

    OrdinalMap inverse() const;

    friend bool operator==(const TwinCertificate&, const TwinCertificate&) = default;
};

std::optional<TwinCertificate> is_twin_pair(const Condition& p0, const Condition& p1);

/// A0 n A1 < A0 \ A1 < A1 \ A0 elementwise.
bool supports_ordered(const PointSet& a0, const PointSet& a1);

/// Isomorphism type of a condition: depth, size and the table pulled back to ranks.
struct ShapeKey {
    Level depth = 0;
    std::size_t size = 0;
    std::vector<std::vector<std::uint32_t>> cells;  // row-major by (rank, level), members as ranks

    auto operator<=>(const ShapeKey&) const = default;
    std::string str() const;
};

ShapeKey canonicalize(const Condition& p);

/// Twin test through shapes: equal keys plus sigma being the identity on the common part.
bool twins_by_shape(const Condition& p0, const Condition& p1);

/// A condition with a designated point of its support.
struct MarkedCondition {
    Condition cond;
    Ordinal mark = 0;

    MarkedCondition() = default;
    MarkedCondition(Condition c, Ordinal mark);
};

struct AmalgamablePair {
    std::size_t first = 0;
    std::size_t second = 0;
    TwinCertificate cert;
};

/**
 * Least index pair (first < second) whose members are twins with aligned
 * marks, sigma(mark_first) = mark_second, the first mark outside the common
 * part, and supports ordered for amalgamation. Candidates are bucketed by
 * shape before pairwise checks.
 */
std::optional<AmalgamablePair> find_amalgamable_pair(std::span<const MarkedCondition> family);

}  // namespace amalgam
