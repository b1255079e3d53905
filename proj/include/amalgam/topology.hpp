// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/point_set.hpp"

namespace amalgam::topo {

/// Subset of a space's points, bit r standing for the point of rank r.
using Mask = std::uint64_t;
using Family = std::vector<Mask>;

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NotABase : public Error {
public:
    using Error::Error;
};

inline constexpr std::size_t kMaxPoints = 64;
inline constexpr std::size_t kMaxOpens = std::size_t{1} << 16;
inline constexpr std::size_t kSearchMaxPoints = 6;
inline constexpr std::size_t kSearchMaxBase = 14;

/// A finite point set with its full lattice of open sets (sorted, including 0 and X).
class FiniteSpace {
public:
    FiniteSpace() = default;

    /// Checks closure under union and intersection; throws Error otherwise.
    FiniteSpace(PointSet points, Family opens);

    const PointSet& points() const { return points_; }
    const Family& opens() const { return opens_; }
    std::size_t size() const { return points_.size(); }
    Mask full() const;
    bool is_open(Mask set) const;

    Mask mask_of(const PointSet& set) const;
    PointSet set_of(Mask mask) const;

private:
    PointSet points_;
    Family opens_;
};

FiniteSpace generate_topology(const PointSet& points, const std::vector<PointSet>& generators);

/// Same, with generators given as masks over ranks.
FiniteSpace generate_topology(std::size_t size, const Family& generators);

/// Smallest open set around each point, indexed by rank.
Family minimal_neighborhoods(const FiniteSpace& space);

bool is_t0(const FiniteSpace& space);

bool is_base(const FiniteSpace& space, const Family& family);
bool is_neighborhood_base(const FiniteSpace& space, std::size_t x, const Family& family);

/// A base together with the owner families U_x, indexed by point rank.
struct Decomposition {
    Family base;
    std::vector<Family> owners;
};

struct DecompositionVerdict {
    bool holds = true;
    std::string clause;  // "structure", "base", "i" or "ii"
    std::optional<std::size_t> point;
    std::string detail;

    explicit operator bool() const { return holds; }
};

DecompositionVerdict check_decomposition(const FiniteSpace& space, const Decomposition& d);

/// Exhaustive owner-assignment search; throws NotABase or BudgetExceeded.
std::optional<Decomposition> find_irreducible_decomposition(const FiniteSpace& space, const Family& base);

std::optional<Decomposition> find_irreducible_base(const FiniteSpace& space);

/// Nonempty opens, i.e. the trivially valid base.
Family nonempty_opens(const FiniteSpace& space);

std::string to_string(const FiniteSpace& space, Mask mask);

}  // namespace amalgam::topo
