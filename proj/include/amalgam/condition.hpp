// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/point_set.hpp"

namespace amalgam {

/// The table U is not total on A x n, or some value escapes A.
class StructureError : public Error {
public:
    using Error::Error;
};

/// An operation that requires a member of P received a table violating (P2)/(P3).
class InvalidCondition : public Error {
public:
    using Error::Error;
};

/// Tried to add a point that is already in the support.
class DuplicatePoint : public Error {
public:
    using Error::Error;
};

using CellTable = std::map<IndexPair, PointSet>;

/**
 * A finite condition <A, n, U>: a support A, a depth n and a total table
 * U : A x n -> P(A). Construction enforces the structural part (totality,
 * values inside A); membership in P is decided by validate_condition.
 *
 * Cells are stored row-major by rank of alpha in A.
 */
class Condition {
public:
    /// The empty condition <0, 0, 0>, maximum of the order.
    Condition() = default;

    Condition(PointSet support, Level depth, std::vector<PointSet> cells);

    static Condition from_table(PointSet support, Level depth, const CellTable& table);

    const PointSet& support() const { return support_; }
    Level depth() const { return depth_; }
    bool has(Ordinal alpha) const { return support_.contains(alpha); }

    /// U(alpha, i); throws std::out_of_range outside A x n.
    const PointSet& cell(Ordinal alpha, Level i) const;
    const PointSet& cell(const IndexPair& pair) const { return cell(pair.alpha, pair.i); }

    /// Replaces U(alpha, i); the value must stay inside A.
    void set_cell(Ordinal alpha, Level i, PointSet value);

    /// All pairs of A x n in lexicographic order.
    std::vector<IndexPair> index_pairs() const;
    CellTable table() const;

    friend bool operator==(const Condition&, const Condition&) = default;

private:
    std::size_t slot(Ordinal alpha, Level i) const;

    PointSet support_;
    Level depth_ = 0;
    std::vector<PointSet> cells_;
};

std::string to_string(const Condition& c);

/// Reading of the inclusion sign in (P2), (P3) and (d2).
enum class Inclusion { non_strict, strict };

bool included(const PointSet& a, const PointSet& b, Inclusion mode);

enum class Clause { p2, p3 };

const char* clause_name(Clause clause);

/// One failing instance of (P2) or (P3). For (P2) beta is unused.
struct Violation {
    Clause clause = Clause::p2;
    Ordinal alpha = 0;
    Ordinal beta = 0;
    Level i = 0;

    std::string describe() const;
    auto operator<=>(const Violation&) const = default;
};

struct Validation {
    std::vector<Violation> violations;  // sorted, least witness first

    bool ok() const { return violations.empty(); }
};

Validation validate_condition(const Condition& c, Inclusion mode = Inclusion::non_strict);
bool is_valid(const Condition& c, Inclusion mode = Inclusion::non_strict);

enum class OrderClause { a, b, c, d1, d2 };

const char* clause_name(OrderClause clause);

struct ExtensionVerdict {
    bool holds = true;
    std::optional<OrderClause> clause;
    std::optional<Ordinal> point;     // witness for (a)
    std::vector<IndexPair> cells;     // witness cells for (c), (d1), (d2)

    explicit operator bool() const { return holds; }
    std::string describe() const;
};

/// Decides q <= p clause by clause; throws InvalidCondition if either input is not in P.
ExtensionVerdict check_extension(const Condition& q, const Condition& p, Inclusion mode = Inclusion::non_strict);

/// Adds alpha with singleton cells U(alpha, i) = {alpha}.
Condition add_point(const Condition& p, Ordinal alpha);

/// Adds level n_p with singleton cells.
Condition deepen(const Condition& p);

/**
 * Adds alpha as in add_point and also puts it into every cell of p that
 * contains the anchor cell U_p(anchor). The result is always a valid
 * extension: cells gaining alpha all contain the anchor cell, so no disjoint
 * pair starts to meet and no inclusion is lost or created among old cells.
 */
Condition attach_point(const Condition& p, Ordinal alpha, const IndexPair& anchor);

/// Restricts p to a subset of its support (used when shrinking witnesses). Not necessarily valid.
Condition restrict_support(const Condition& p, const PointSet& keep);

/// Drops level `level` and renumbers the levels above it.
Condition drop_level(const Condition& p, Level level);

/// Copies p along an injective map defined on A_p.
Condition relabel(const Condition& p, const std::map<Ordinal, Ordinal>& map);

}  // namespace amalgam
