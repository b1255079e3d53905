// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include "amalgam/verifier.hpp"

namespace amalgam::verify {

namespace {

// Single-step simplifications of a condition, each kept only if it stays in P.
std::vector<Condition> condition_edits(const Condition& c, const PointSet& pinned)
{
    std::vector<Condition> out;
    auto keep_valid = [&out](Condition candidate) {
        if (is_valid(candidate)) {
            out.push_back(std::move(candidate));
        }
    };
    for (Ordinal alpha : c.support()) {
        if (!pinned.contains(alpha)) {
            keep_valid(restrict_support(c, c.support() - PointSet{alpha}));
        }
    }
    for (Level level = 0; level < c.depth(); ++level) {
        keep_valid(drop_level(c, level));
    }
    for (const auto& pair : c.index_pairs()) {
        for (Ordinal x : c.cell(pair)) {
            if (x == pair.alpha) {
                continue;
            }
            Condition candidate = c;
            for (Level i = pair.i; i < c.depth(); ++i) {
                PointSet cell = candidate.cell(pair.alpha, i);
                cell.erase(x);
                candidate.set_cell(pair.alpha, i, std::move(cell));
            }
            keep_valid(std::move(candidate));
        }
    }
    return out;
}

std::optional<AmalgamationRequest> rebuild(const AmalgamationRequest& base, Condition p0, Level k, Level m)
{
    OrdinalMap sigma;
    for (Ordinal alpha : p0.support()) {
        sigma.emplace(alpha, base.cert.sigma.at(alpha));
    }
    try {
        Condition p1 = relabel(p0, sigma);
        return make_request(std::move(p0), std::move(p1), base.xi0, k, m);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::vector<AmalgamationRequest> request_edits(const AmalgamationRequest& r)
{
    std::vector<AmalgamationRequest> out;
    const Condition& p0 = r.p0;
    auto push = [&out](std::optional<AmalgamationRequest> candidate) {
        if (candidate) {
            out.push_back(std::move(*candidate));
        }
    };
    for (Ordinal alpha : p0.support()) {
        if (alpha == r.xi0) {
            continue;
        }
        Condition smaller = restrict_support(p0, p0.support() - PointSet{alpha});
        if (is_valid(smaller)) {
            push(rebuild(r, std::move(smaller), r.k, r.m));
        }
    }
    for (Level level = 0; level < p0.depth(); ++level) {
        if (level == r.k || level == r.m) {
            continue;
        }
        Condition thinner = drop_level(p0, level);
        if (is_valid(thinner)) {
            const Level k = r.k - (level < r.k ? 1 : 0);
            const Level m = r.m - (level < r.m ? 1 : 0);
            push(rebuild(r, std::move(thinner), k, m));
        }
    }
    for (const auto& pair : p0.index_pairs()) {
        for (Ordinal x : p0.cell(pair)) {
            if (x == pair.alpha) {
                continue;
            }
            Condition candidate = p0;
            for (Level i = pair.i; i < p0.depth(); ++i) {
                PointSet cell = candidate.cell(pair.alpha, i);
                cell.erase(x);
                candidate.set_cell(pair.alpha, i, std::move(cell));
            }
            if (is_valid(candidate)) {
                push(rebuild(r, std::move(candidate), r.k, r.m));
            }
        }
    }
    return out;
}

}  // namespace

std::size_t witness_points(const AmalgamationRequest& request)
{
    return (request.p0.support() | request.p1.support()).size();
}

AmalgamationRequest shrink(const AmalgamationRequest& failing, const RequestProperty& fails)
{
    if (!fails(failing)) {
        throw Error("shrink: the input does not fail the property");
    }
    AmalgamationRequest current = failing;
    for (bool progress = true; progress;) {
        progress = false;
        for (auto& candidate : request_edits(current)) {
            if (fails(candidate)) {
                current = std::move(candidate);
                progress = true;
                break;
            }
        }
    }
    return current;
}

Condition shrink_condition(const Condition& failing, const std::function<bool(const Condition&)>& fails)
{
    if (!fails(failing)) {
        throw Error("shrink: the input does not fail the property");
    }
    Condition current = failing;
    for (bool progress = true; progress;) {
        progress = false;
        for (auto& candidate : condition_edits(current, {})) {
            if (fails(candidate)) {
                current = std::move(candidate);
                progress = true;
                break;
            }
        }
    }
    return current;
}

}  // namespace amalgam::verify
