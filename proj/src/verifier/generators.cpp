// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>

#include "amalgam/verifier.hpp"

namespace amalgam::verify {

Rng trial_stream(std::uint64_t seed, std::uint64_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

namespace {

// `count` distinct ordinals below `universe`, increasing.
std::vector<Ordinal> sample_points(Rng& rng, std::size_t count, std::uint32_t universe)
{
    if (count > universe) {
        throw Error("cannot draw " + std::to_string(count) + " points from a universe of " + std::to_string(universe));
    }
    std::vector<Ordinal> pool(universe);
    std::iota(pool.begin(), pool.end(), Ordinal{0});
    for (std::size_t r = 0; r < count; ++r) {
        std::swap(pool[r], pool[uniform(rng, r, pool.size() - 1)]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

OrdinalMap by_rank(const std::vector<Ordinal>& labels)
{
    OrdinalMap out;
    for (std::size_t r = 0; r < labels.size(); ++r) {
        out.emplace(static_cast<Ordinal>(r), labels[r]);
    }
    return out;
}

PointSet ranks(std::size_t count)
{
    std::vector<Ordinal> out(count);
    std::iota(out.begin(), out.end(), Ordinal{0});
    return PointSet(std::move(out));
}

}  // namespace

Condition grow_condition(Rng& rng, const PointSet& points, Level n)
{
    Condition c;
    for (Ordinal alpha : points) {
        c = add_point(c, alpha);
    }
    for (Level i = 0; i < n; ++i) {
        c = deepen(c);
    }
    if (points.empty() || n == 0) {
        return c;
    }
    const auto pairs = c.index_pairs();
    const std::size_t steps = uniform(rng, 0, 2 * pairs.size());
    for (std::size_t step = 0; step < steps; ++step) {
        const IndexPair target = pairs[uniform(rng, 0, pairs.size() - 1)];
        PointSet gain;
        if (uniform(rng, 0, 1) == 0) {
            gain.insert(points[uniform(rng, 0, points.size() - 1)]);
        } else {
            gain = c.cell(pairs[uniform(rng, 0, pairs.size() - 1)]);
        }
        // Growing every level up to the target keeps (P2); (P3) is re-checked before committing.
        Condition next = c;
        for (Level i = 0; i <= target.i; ++i) {
            next.set_cell(target.alpha, i, next.cell(target.alpha, i) | gain);
        }
        if (is_valid(next)) {
            c = std::move(next);
        }
    }
    return c;
}

Condition gen_condition(const GenParams& params, Rng& rng)
{
    const std::size_t count = uniform(rng, std::min<std::size_t>(1, params.max_points), params.max_points);
    if (count == 0) {
        return Condition{};
    }
    const Level n = static_cast<Level>(uniform(rng, 1, std::max<Level>(1, params.max_depth)));
    auto labels = sample_points(rng, count, params.universe);
    return grow_condition(rng, PointSet(labels), n);
}

AmalgamationRequest gen_twin_request(const GenParams& params, Rng& rng)
{
    if (params.max_depth < 2) {
        throw Error("amalgamation requests need depth >= 2");
    }
    if (params.max_points < params.min_root + 1) {
        throw Error("max_points must leave room for one point outside the root");
    }
    const Level n = static_cast<Level>(uniform(rng, 2, params.max_depth));
    std::size_t root = uniform(rng, params.min_root, params.max_points - 1);
    std::size_t side = uniform(rng, 1, params.max_points - root);
    while (root + 2 * side > params.universe && side > 1) {
        --side;
    }
    while (root + 2 * side > params.universe && root > params.min_root) {
        --root;
    }
    const auto labels = sample_points(rng, root + 2 * side, params.universe);
    const Condition shape = grow_condition(rng, ranks(root + side), n);

    std::vector<Ordinal> left(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(root + side));
    std::vector<Ordinal> right(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(root));
    right.insert(right.end(), labels.end() - static_cast<std::ptrdiff_t>(side), labels.end());

    Condition p0 = relabel(shape, by_rank(left));
    Condition p1 = relabel(shape, by_rank(right));
    const Ordinal xi0 = left[root + uniform(rng, 0, side - 1)];
    const Level k = static_cast<Level>(uniform(rng, 0, n - 2));
    const Level m = static_cast<Level>(uniform(rng, k + 1, n - 1));
    return make_request(std::move(p0), std::move(p1), xi0, k, m);
}

std::vector<MarkedCondition> gen_twin_family(const GenParams& params, Rng& rng, std::size_t count)
{
    if (count == 0) {
        return {};
    }
    const Level n = static_cast<Level>(uniform(rng, 2, std::max<Level>(2, params.max_depth)));
    std::size_t root = uniform(rng, params.min_root, std::max(params.min_root, params.max_points - 1));
    std::size_t side = uniform(rng, 1, std::max<std::size_t>(1, params.max_points - root));
    while (root + count * side > params.universe && side > 1) {
        --side;
    }
    while (root + count * side > params.universe && root > 0) {
        --root;
    }
    const auto labels = sample_points(rng, root + count * side, params.universe);
    const Condition shape = grow_condition(rng, ranks(root + side), n);
    const std::size_t mark_rank = root + uniform(rng, 0, side - 1);

    std::vector<MarkedCondition> family;
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<Ordinal> support(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(root));
        auto block = labels.begin() + static_cast<std::ptrdiff_t>(root + c * side);
        support.insert(support.end(), block, block + static_cast<std::ptrdiff_t>(side));
        family.emplace_back(relabel(shape, by_rank(support)), support[mark_rank]);
    }
    return family;
}

Condition gen_extension(const Condition& p, Rng& rng, std::uint32_t universe, std::size_t steps)
{
    Condition q = p;
    for (std::size_t step = 0; step < steps; ++step) {
        std::vector<Ordinal> missing;
        for (Ordinal x = 0; x < universe; ++x) {
            if (!q.has(x)) {
                missing.push_back(x);
            }
        }
        const std::size_t kind = uniform(rng, 0, 2);
        if (kind == 2 || missing.empty()) {
            if (q.depth() < p.depth() + 2) {
                q = deepen(q);
            }
            continue;
        }
        const Ordinal alpha = missing[uniform(rng, 0, missing.size() - 1)];
        const auto pairs = q.index_pairs();
        if (kind == 1 && !pairs.empty()) {
            q = attach_point(q, alpha, pairs[uniform(rng, 0, pairs.size() - 1)]);
        } else {
            q = add_point(q, alpha);
        }
    }
    return q;
}

topo::FiniteSpace gen_t0_space(Rng& rng, std::size_t size)
{
    // Random partial order: edges only go forward in a random permutation, then close transitively.
    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<topo::Mask> up(size, 0);
    for (std::size_t a = 0; a < size; ++a) {
        up[order[a]] |= topo::Mask{1} << order[a];
        for (std::size_t b = a + 1; b < size; ++b) {
            if (uniform(rng, 0, 1) == 1) {
                up[order[a]] |= topo::Mask{1} << order[b];
            }
        }
    }
    for (bool grown = true; grown;) {
        grown = false;
        for (std::size_t x = 0; x < size; ++x) {
            topo::Mask closure = up[x];
            for (std::size_t y = 0; y < size; ++y) {
                if ((up[x] >> y) & 1U) {
                    closure |= up[y];
                }
            }
            grown |= closure != up[x];
            up[x] = closure;
        }
    }
    return topo::generate_topology(size, up);
}

topo::FiniteSpace gen_space(Rng& rng, std::size_t size)
{
    topo::Family generators;
    if (size > 0) {
        const topo::Mask all = (topo::Mask{1} << size) - 1;
        const std::size_t count = uniform(rng, 0, size + 1);
        for (std::size_t g = 0; g < count; ++g) {
            generators.push_back(static_cast<topo::Mask>(uniform(rng, 1, all)));
        }
    }
    return topo::generate_topology(size, generators);
}

}  // namespace amalgam::verify
