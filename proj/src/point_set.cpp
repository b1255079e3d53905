// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include "amalgam/point_set.hpp"

#include <iterator>
#include <ostream>
#include <sstream>

namespace amalgam {

std::string to_string(const IndexPair& pair)
{
    return "(" + std::to_string(pair.alpha) + "," + std::to_string(pair.i) + ")";
}

std::ostream& operator<<(std::ostream& os, const IndexPair& pair) { return os << to_string(pair); }

PointSet::PointSet(std::initializer_list<Ordinal> values) : PointSet(std::vector<Ordinal>(values)) {}

PointSet::PointSet(std::vector<Ordinal> values) : items_(std::move(values))
{
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

std::size_t PointSet::rank(Ordinal x) const
{
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || *it != x) {
        throw std::out_of_range("ordinal " + std::to_string(x) + " is not a member");
    }
    return static_cast<std::size_t>(it - items_.begin());
}

bool PointSet::subset_of(const PointSet& other) const
{
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool PointSet::intersects(const PointSet& other) const
{
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            return true;
        }
    }
    return false;
}

bool PointSet::insert(Ordinal x)
{
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it != items_.end() && *it == x) {
        return false;
    }
    items_.insert(it, x);
    return true;
}

bool PointSet::erase(Ordinal x)
{
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || *it != x) {
        return false;
    }
    items_.erase(it);
    return true;
}

PointSet& PointSet::operator|=(const PointSet& other)
{
    if (other.subset_of(*this)) {
        return *this;
    }
    *this = *this | other;
    return *this;
}

PointSet operator|(const PointSet& a, const PointSet& b)
{
    PointSet out;
    out.items_.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
}

PointSet operator&(const PointSet& a, const PointSet& b)
{
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
}

PointSet operator-(const PointSet& a, const PointSet& b)
{
    PointSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
}

std::string to_string(const PointSet& set)
{
    std::ostringstream os;
    os << set;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PointSet& set)
{
    os << '{';
    for (std::size_t r = 0; r < set.size(); ++r) {
        if (r != 0) {
            os << ',';
        }
        os << set[r];
    }
    return os << '}';
}

bool precedes(const PointSet& lower, const PointSet& upper)
{
    return lower.empty() || upper.empty() || lower.back() < upper.front();
}

}  // namespace amalgam
