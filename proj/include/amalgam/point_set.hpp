// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace amalgam {

/// Finite surrogate for a countable ordinal; only the natural-number order matters.
using Ordinal = std::uint32_t;

/// Level index i < n of a condition.
using Level = std::uint32_t;

/// A pair <alpha, i> from A x n.
struct IndexPair {
    Ordinal alpha = 0;
    Level i = 0;

    auto operator<=>(const IndexPair&) const = default;
};

std::string to_string(const IndexPair& pair);
std::ostream& operator<<(std::ostream& os, const IndexPair& pair);

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Small ordered set of ordinals backed by a sorted vector.
class PointSet {
public:
    using const_iterator = std::vector<Ordinal>::const_iterator;

    PointSet() = default;
    PointSet(std::initializer_list<Ordinal> values);
    explicit PointSet(std::vector<Ordinal> values);

    template <typename It>
    PointSet(It first, It last) : PointSet(std::vector<Ordinal>(first, last)) {}

    bool contains(Ordinal x) const { return std::binary_search(items_.begin(), items_.end(), x); }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

    const_iterator begin() const { return items_.begin(); }
    const_iterator end() const { return items_.end(); }
    Ordinal front() const { return items_.front(); }
    Ordinal back() const { return items_.back(); }
    Ordinal operator[](std::size_t rank) const { return items_[rank]; }
    const std::vector<Ordinal>& values() const { return items_; }

    /// Position of x in increasing order; x must be a member.
    std::size_t rank(Ordinal x) const;

    bool subset_of(const PointSet& other) const;
    bool strict_subset_of(const PointSet& other) const { return size() < other.size() && subset_of(other); }
    bool intersects(const PointSet& other) const;

    bool insert(Ordinal x);
    bool erase(Ordinal x);

    PointSet& operator|=(const PointSet& other);
    friend PointSet operator|(const PointSet& a, const PointSet& b);
    friend PointSet operator&(const PointSet& a, const PointSet& b);
    friend PointSet operator-(const PointSet& a, const PointSet& b);

    friend bool operator==(const PointSet&, const PointSet&) = default;
    friend auto operator<=>(const PointSet& a, const PointSet& b) { return a.items_ <=> b.items_; }

private:
    std::vector<Ordinal> items_;
};

std::string to_string(const PointSet& set);
std::ostream& operator<<(std::ostream& os, const PointSet& set);

/// Every element of `lower` is strictly below every element of `upper`; vacuous on empty sets.
bool precedes(const PointSet& lower, const PointSet& upper);

}  // namespace amalgam
