// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include "amalgam/amalgamation.hpp"

namespace amalgam {

HypothesisError::HypothesisError(std::string clause, const std::string& what)
    : Error("hypothesis " + clause + " violated: " + what), clause_(std::move(clause))
{
}

WellDefinednessError::WellDefinednessError(Ordinal d, Level level, PointSet s0, PointSet s1)
    : Error("U'(" + std::to_string(d) + "," + std::to_string(level) + ") differs between sides: " + to_string(s0) +
            " vs " + to_string(s1)),
      delta(d),
      j(level),
      from_side0(std::move(s0)),
      from_side1(std::move(s1))
{
}

namespace {

void check_levels_and_point(const Condition& p0, const Condition& p1, Ordinal xi0, Level k, Level m)
{
    if (!(k < m)) {
        throw HypothesisError("k<m", "k=" + std::to_string(k) + " m=" + std::to_string(m));
    }
    if (!(m < p0.depth())) {
        throw HypothesisError("m<n", "m=" + std::to_string(m) + " n=" + std::to_string(p0.depth()));
    }
    if (!p0.has(xi0) || p1.has(xi0)) {
        throw HypothesisError("xi0", "xi0=" + std::to_string(xi0) + " is not in A0 \\ A1");
    }
}

}  // namespace

AmalgamationRequest make_request(Condition p0, Condition p1, Ordinal xi0, Level k, Level m)
{
    for (const Condition* c : {&p0, &p1}) {
        if (auto v = validate_condition(*c); !v.ok()) {
            throw HypothesisError("valid", (c == &p0 ? "p0: " : "p1: ") + v.violations.front().describe());
        }
    }
    auto cert = is_twin_pair(p0, p1);
    if (!cert) {
        throw HypothesisError("twins", "p0 and p1 are not twins");
    }
    if (!supports_ordered(p0.support(), p1.support())) {
        throw HypothesisError("support-order", "A0 n A1 < A0 \\ A1 < A1 \\ A0 fails");
    }
    check_levels_and_point(p0, p1, xi0, k, m);
    return AmalgamationRequest{std::move(p0), std::move(p1), std::move(*cert), xi0, k, m};
}

void check_request(const AmalgamationRequest& request)
{
    auto rebuilt = make_request(request.p0, request.p1, request.xi0, request.k, request.m);
    if (!(rebuilt.cert == request.cert)) {
        throw HypothesisError("twins", "certificate does not match the twin function");
    }
}

PointSet FreshBlock::embed(const std::set<IndexPair>& pairs) const
{
    std::vector<Ordinal> out;
    out.reserve(pairs.size());
    for (const auto& pair : pairs) {
        out.push_back(rho.at(pair));
    }
    return PointSet(std::move(out));
}

FreshBlock fresh_block(const PointSet& astar, Level n)
{
    FreshBlock block;
    if (astar.empty()) {
        return block;
    }
    Ordinal next = astar.back() + 1;
    std::vector<Ordinal> points;
    for (Ordinal alpha : astar) {
        for (Level i = 0; i < n; ++i) {
            block.rho.emplace(IndexPair{alpha, i}, next);
            points.push_back(next++);
        }
    }
    block.points = PointSet(std::move(points));
    return block;
}

PairSet compute_V(const Condition& p, Ordinal beta, Level j)
{
    PairSet out;
    const PointSet& target = p.cell(beta, j);
    for (const auto& pair : p.index_pairs()) {
        if (p.cell(pair).subset_of(target)) {
            out.insert(pair);
        }
    }
    return out;
}

PairSet compute_W(const Condition& p0, const Condition& p1, const TwinCertificate& cert, Side eps, Ordinal beta,
                  Level j)
{
    const Condition& same = eps == Side::zero ? p0 : p1;
    const Condition& opposite = eps == Side::zero ? p1 : p0;
    const Level n = same.depth();
    const PointSet& target = same.cell(beta, j);

    // Root cells <gamma,l> with U_eps(gamma,l) inside U_eps(beta,j).
    std::vector<IndexPair> gates;
    for (Ordinal gamma : cert.root) {
        for (Level l = 0; l < n; ++l) {
            if (same.cell(gamma, l).subset_of(target)) {
                gates.push_back({gamma, l});
            }
        }
    }
    PairSet out;
    if (gates.empty()) {
        return out;
    }
    for (const auto& pair : opposite.index_pairs()) {
        for (const auto& gate : gates) {
            if (opposite.cell(pair).subset_of(opposite.cell(gate))) {
                out.insert(pair);
                break;
            }
        }
    }
    return out;
}

AmalgamationTrace build_uprime(const AmalgamationRequest& request)
{
    const Level n = request.depth();
    const auto& cert = request.cert;

    AmalgamationTrace trace;
    trace.astar = request.p0.support() | request.p1.support();
    trace.block = fresh_block(trace.astar, n);

    for (Side eps : {Side::zero, Side::one}) {
        const Condition& p = request.side(eps);
        for (const auto& pair : p.index_pairs()) {
            trace.V[index(eps)][pair] = compute_V(p, pair.alpha, pair.i);
            trace.W[index(eps)][pair] = compute_W(request.p0, request.p1, cert, eps, pair.alpha, pair.i);
        }
    }

    auto row = [&](Side eps, Ordinal beta, Level j) {
        PointSet out = request.side(eps).cell(beta, j);
        out |= request.side(other(eps)).cell(cert.exchange.at(beta), j);
        out |= trace.block.embed(trace.V[index(eps)].at({beta, j}));
        out |= trace.block.embed(trace.W[index(eps)].at({beta, j}));
        return out;
    };

    const PointSet support = trace.astar | trace.block.points;
    std::vector<PointSet> cells;
    cells.reserve(support.size() * n);
    for (Ordinal z : support) {
        for (Level j = 0; j < n; ++j) {
            if (trace.block.points.contains(z)) {
                cells.push_back(PointSet{z});
            } else if (cert.root.contains(z)) {
                PointSet from0 = row(Side::zero, z, j);
                PointSet from1 = row(Side::one, z, j);
                if (from0 != from1) {
                    throw WellDefinednessError(z, j, std::move(from0), std::move(from1));
                }
                cells.push_back(std::move(from0));
            } else {
                cells.push_back(row(request.p0.has(z) ? Side::zero : Side::one, z, j));
            }
        }
    }
    trace.p_prime = Condition(support, n, std::move(cells));
    trace.p = trace.p_prime;
    return trace;
}

Condition apply_modification(const AmalgamationTrace& trace, const AmalgamationRequest& request)
{
    const Condition& p0 = request.p0;
    const PointSet& guard = p0.cell(request.xi0, request.k);
    const PointSet& addition = trace.p_prime.cell(request.xi1(), request.k);

    Condition out = trace.p_prime;
    for (Ordinal z : p0.support()) {
        for (Level j = 0; j < p0.depth(); ++j) {
            if (guard.subset_of(p0.cell(z, j))) {
                out.set_cell(z, j, trace.p_prime.cell(z, j) | addition);
            }
        }
    }
    return out;
}

AmalgamationTrace amalgamate(const AmalgamationRequest& request, const AmalgamationHooks& hooks)
{
    check_request(request);
    AmalgamationTrace trace = build_uprime(request);
    if (hooks.after_uprime) {
        hooks.after_uprime(trace, request);
    }
    trace.p = apply_modification(trace, request);
    if (hooks.after_modification) {
        hooks.after_modification(trace, request);
    }
    return trace;
}

}  // namespace amalgam
