// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include "amalgam/topology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace amalgam::topo {

namespace {

Mask bit(std::size_t r) { return Mask{1} << r; }

Mask full_mask(std::size_t size) { return size == 64 ? ~Mask{0} : bit(size) - 1; }

bool has(Mask set, std::size_t r) { return (set & bit(r)) != 0; }

Family sorted_unique(Family f)
{
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

}  // namespace

FiniteSpace::FiniteSpace(PointSet points, Family opens) : points_(std::move(points)), opens_(sorted_unique(std::move(opens)))
{
    if (points_.size() > kMaxPoints) {
        throw BudgetExceeded("space has more than " + std::to_string(kMaxPoints) + " points");
    }
    const Mask all = full();
    if (!is_open(0) || !is_open(all)) {
        throw Error("opens must contain the empty set and the whole space");
    }
    for (Mask a : opens_) {
        if ((a & ~all) != 0) {
            throw Error("open set escapes the point set");
        }
        for (Mask b : opens_) {
            if (!is_open(a | b) || !is_open(a & b)) {
                throw Error("opens are not closed under union and intersection");
            }
        }
    }
}

Mask FiniteSpace::full() const { return full_mask(points_.size()); }

bool FiniteSpace::is_open(Mask set) const { return std::binary_search(opens_.begin(), opens_.end(), set); }

Mask FiniteSpace::mask_of(const PointSet& set) const
{
    Mask out = 0;
    for (Ordinal x : set) {
        if (!points_.contains(x)) {
            throw Error("point " + std::to_string(x) + " is not in the space");
        }
        out |= bit(points_.rank(x));
    }
    return out;
}

PointSet FiniteSpace::set_of(Mask mask) const
{
    std::vector<Ordinal> out;
    for (std::size_t r = 0; r < points_.size(); ++r) {
        if (has(mask, r)) {
            out.push_back(points_[r]);
        }
    }
    return PointSet(std::move(out));
}

FiniteSpace generate_topology(std::size_t size, const Family& generators)
{
    if (size > kMaxPoints) {
        throw BudgetExceeded("space has more than " + std::to_string(kMaxPoints) + " points");
    }
    const Mask all = full_mask(size);
    std::set<Mask> meets{all};
    for (Mask g : generators) {
        if ((g & ~all) != 0) {
            throw Error("generator is not a subset of the points");
        }
        meets.insert(g);
    }
    // Close under pairwise intersection.
    for (bool grown = true; grown;) {
        grown = false;
        std::vector<Mask> current(meets.begin(), meets.end());
        for (std::size_t a = 0; a < current.size(); ++a) {
            for (std::size_t b = a + 1; b < current.size(); ++b) {
                grown |= meets.insert(current[a] & current[b]).second;
            }
        }
        if (meets.size() > kMaxOpens) {
            throw BudgetExceeded("topology exceeds " + std::to_string(kMaxOpens) + " open sets");
        }
    }
    // Then under union.
    std::set<Mask> opens{0};
    for (Mask s : meets) {
        std::vector<Mask> current(opens.begin(), opens.end());
        for (Mask o : current) {
            opens.insert(o | s);
        }
        if (opens.size() > kMaxOpens) {
            throw BudgetExceeded("topology exceeds " + std::to_string(kMaxOpens) + " open sets");
        }
    }
    PointSet points;
    for (std::size_t r = 0; r < size; ++r) {
        points.insert(static_cast<Ordinal>(r));
    }
    return FiniteSpace(std::move(points), Family(opens.begin(), opens.end()));
}

FiniteSpace generate_topology(const PointSet& points, const std::vector<PointSet>& generators)
{
    FiniteSpace frame(points, {0, full_mask(points.size())});
    Family masks;
    for (const auto& g : generators) {
        if (!g.subset_of(points)) {
            throw Error("generator " + to_string(g) + " is not a subset of the points");
        }
        masks.push_back(frame.mask_of(g));
    }
    FiniteSpace ranked = generate_topology(points.size(), masks);
    return FiniteSpace(points, ranked.opens());
}

Family minimal_neighborhoods(const FiniteSpace& space)
{
    Family out(space.size(), space.full());
    for (Mask o : space.opens()) {
        for (std::size_t x = 0; x < space.size(); ++x) {
            if (has(o, x)) {
                out[x] &= o;
            }
        }
    }
    return out;
}

bool is_t0(const FiniteSpace& space)
{
    Family m = minimal_neighborhoods(space);
    return sorted_unique(m).size() == m.size();
}

bool is_base(const FiniteSpace& space, const Family& family)
{
    for (Mask o : space.opens()) {
        for (std::size_t x = 0; x < space.size(); ++x) {
            if (!has(o, x)) {
                continue;
            }
            bool realized = std::any_of(family.begin(), family.end(),
                                        [&](Mask v) { return has(v, x) && (v & ~o) == 0; });
            if (!realized) {
                return false;
            }
        }
    }
    return true;
}

bool is_neighborhood_base(const FiniteSpace& space, std::size_t x, const Family& family)
{
    if (!std::all_of(family.begin(), family.end(), [&](Mask v) { return has(v, x); })) {
        return false;
    }
    for (Mask o : space.opens()) {
        if (has(o, x) && std::none_of(family.begin(), family.end(), [&](Mask v) { return (v & ~o) == 0; })) {
            return false;
        }
    }
    return true;
}

DecompositionVerdict check_decomposition(const FiniteSpace& space, const Decomposition& d)
{
    DecompositionVerdict out;
    auto fail = [&out](std::string clause, std::optional<std::size_t> point, std::string detail) {
        out.holds = false;
        out.clause = std::move(clause);
        out.point = point;
        out.detail = std::move(detail);
        return out;
    };

    if (d.owners.size() != space.size()) {
        return fail("structure", std::nullopt, "owners must list one family per point");
    }
    const Family base = sorted_unique(d.base);
    for (Mask v : base) {
        if (v == 0 || !space.is_open(v)) {
            return fail("structure", std::nullopt, "base member " + to_string(space, v) + " is not a nonempty open");
        }
    }
    Family covered;
    for (std::size_t x = 0; x < space.size(); ++x) {
        for (Mask v : d.owners[x]) {
            if (!has(v, x)) {
                return fail("structure", x, "member " + to_string(space, v) + " does not contain its owner");
            }
            covered.push_back(v);
        }
    }
    if (sorted_unique(covered) != base) {
        return fail("structure", std::nullopt, "union of the owner families is not the base");
    }
    if (!is_base(space, base)) {
        return fail("base", std::nullopt, "family is not a base");
    }
    for (std::size_t x = 0; x < space.size(); ++x) {
        if (!is_neighborhood_base(space, x, d.owners[x])) {
            return fail("i", x, "U_x is not a neighbourhood base");
        }
    }
    for (std::size_t x = 0; x < space.size(); ++x) {
        Family rest;
        for (std::size_t y = 0; y < space.size(); ++y) {
            if (y != x) {
                rest.insert(rest.end(), d.owners[y].begin(), d.owners[y].end());
            }
        }
        if (is_base(space, rest)) {
            return fail("ii", x, "the other points' families still form a base");
        }
    }
    return out;
}

namespace {

// Backtracking over owner sets, one member at a time. A member V realizes a
// point z when z in V and V sits inside the minimal neighbourhood of z; only
// realizers matter for clauses (i) and (ii), so they are assigned first.
class OwnerSearch {
public:
    OwnerSearch(const FiniteSpace& space, const Family& base) : space_(space)
    {
        const Family minimal = minimal_neighborhoods(space);
        Family members = sorted_unique(base);
        members.erase(std::remove(members.begin(), members.end(), Mask{0}), members.end());
        std::vector<Mask> realizes(members.size(), 0);
        for (std::size_t v = 0; v < members.size(); ++v) {
            for (std::size_t z = 0; z < space.size(); ++z) {
                if (has(members[v], z) && (members[v] & ~minimal[z]) == 0) {
                    realizes[v] |= bit(z);
                }
            }
        }
        std::vector<std::size_t> order(members.size());
        for (std::size_t v = 0; v < order.size(); ++v) {
            order[v] = v;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return (realizes[a] != 0) > (realizes[b] != 0); });
        for (std::size_t v : order) {
            members_.push_back(members[v]);
            realizes_.push_back(realizes[v]);
        }
        owner_.assign(members_.size(), 0);
    }

    std::optional<Decomposition> run()
    {
        if (descend(0)) {
            return build();
        }
        return std::nullopt;
    }

private:
    std::vector<Mask> options(std::size_t v) const
    {
        std::vector<Mask> out;
        // (i) forces every point a member realizes to own it.
        const Mask forced = realizes_[v];
        const Mask free = members_[v] & ~forced;
        // Enumerate submasks of `free`, then order by size so lean owner sets come first.
        for (Mask s = free;; s = (s - 1) & free) {
            if ((s | forced) != 0) {
                out.push_back(s | forced);
            }
            if (s == 0) {
                break;
            }
        }
        std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
            int pa = std::popcount(a);
            int pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        return out;
    }

    // (ii) for x needs a point z all of whose realizers are owned by x alone.
    bool doomed(std::size_t assigned) const
    {
        for (std::size_t x = 0; x < space_.size(); ++x) {
            bool witness = false;
            for (std::size_t z = 0; z < space_.size() && !witness; ++z) {
                bool ok = true;
                for (std::size_t v = 0; v < assigned && ok; ++v) {
                    if (has(realizes_[v], z) && (owner_[v] & ~bit(x)) != 0) {
                        ok = false;
                    }
                }
                witness = ok;
            }
            if (!witness) {
                return true;
            }
        }
        return false;
    }

    bool descend(std::size_t v)
    {
        if (v == members_.size()) {
            return static_cast<bool>(check_decomposition(space_, build()));
        }
        for (Mask s : options(v)) {
            owner_[v] = s;
            if (!doomed(v + 1) && descend(v + 1)) {
                return true;
            }
        }
        owner_[v] = 0;
        return false;
    }

    Decomposition build() const
    {
        Decomposition d;
        d.base = sorted_unique(members_);
        d.owners.assign(space_.size(), {});
        for (std::size_t v = 0; v < members_.size(); ++v) {
            for (std::size_t x = 0; x < space_.size(); ++x) {
                if (has(owner_[v], x)) {
                    d.owners[x].push_back(members_[v]);
                }
            }
        }
        for (auto& f : d.owners) {
            f = sorted_unique(std::move(f));
        }
        return d;
    }

    const FiniteSpace& space_;
    Family members_;
    std::vector<Mask> realizes_;
    std::vector<Mask> owner_;
};

}  // namespace

std::optional<Decomposition> find_irreducible_decomposition(const FiniteSpace& space, const Family& base)
{
    if (space.size() > kSearchMaxPoints) {
        throw BudgetExceeded("owner search is capped at " + std::to_string(kSearchMaxPoints) + " points");
    }
    Family members = sorted_unique(base);
    members.erase(std::remove(members.begin(), members.end(), Mask{0}), members.end());
    if (members.size() > kSearchMaxBase) {
        throw BudgetExceeded("owner search is capped at " + std::to_string(kSearchMaxBase) + " base members");
    }
    if (!std::all_of(members.begin(), members.end(), [&](Mask v) { return space.is_open(v); }) ||
        !is_base(space, members)) {
        throw NotABase("family is not a base of the space");
    }
    return OwnerSearch(space, members).run();
}

std::optional<Decomposition> find_irreducible_base(const FiniteSpace& space)
{
    if (space.size() > kSearchMaxPoints) {
        throw BudgetExceeded("base search is capped at " + std::to_string(kSearchMaxPoints) + " points");
    }
    // A family is a base iff it contains every minimal neighbourhood, so the
    // minimal neighbourhoods form the unique smallest base and every other base
    // is a superset of it. Restricting an irreducible decomposition of a larger
    // base to this one keeps (i) and (ii), so if the smallest candidate has no
    // decomposition, no candidate does.
    Family smallest = sorted_unique(minimal_neighborhoods(space));
    if (space.size() == 0) {
        return Decomposition{};
    }
    return find_irreducible_decomposition(space, smallest);
}

Family nonempty_opens(const FiniteSpace& space)
{
    Family out;
    for (Mask o : space.opens()) {
        if (o != 0) {
            out.push_back(o);
        }
    }
    return out;
}

std::string to_string(const FiniteSpace& space, Mask mask) { return amalgam::to_string(space.set_of(mask)); }

}  // namespace amalgam::topo
