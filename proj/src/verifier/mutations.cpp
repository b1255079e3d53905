// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

// One targeted trace edit per claim checker. Each edit breaks exactly the
// statement its checker quantifies over when a suitable cell exists, and
// leaves the trace alone otherwise.

#include "amalgam/verifier.hpp"

namespace amalgam::verify {

namespace {

void insert_point(Condition& c, Ordinal z, Level j, Ordinal x)
{
    PointSet cell = c.cell(z, j);
    cell.insert(x);
    c.set_cell(z, j, std::move(cell));
}

void erase_point(Condition& c, Ordinal z, Level j, Ordinal x)
{
    PointSet cell = c.cell(z, j);
    cell.erase(x);
    c.set_cell(z, j, std::move(cell));
}

// Put into some row a member whose smash image escapes the matching p0 row.
void break_push(Condition& table, const AmalgamationTrace& t, const AmalgamationRequest& r, bool block_point)
{
    const auto& smash = r.cert.smash;
    for (Ordinal beta : t.astar) {
        for (Level j = 0; j < r.depth(); ++j) {
            const PointSet& target = r.p0.cell(smash.at(beta), j);
            for (Ordinal alpha : t.astar) {
                if (target.contains(smash.at(alpha))) {
                    continue;
                }
                const Ordinal x = block_point ? t.block.at({alpha, 0}) : alpha;
                if (!table.cell(beta, j).contains(x)) {
                    insert_point(table, beta, j, x);
                    return;
                }
            }
        }
    }
}

// Break (d2): an inclusion of p0 cells that the table no longer respects.
void break_inclusion(Condition& table, const AmalgamationRequest& r)
{
    const auto pairs = r.p0.index_pairs();
    for (const auto& x : pairs) {
        for (const auto& y : pairs) {
            if (x == y || !r.p0.cell(x).subset_of(r.p0.cell(y))) {
                continue;
            }
            const PointSet outside = table.support() - table.cell(y);
            for (Ordinal extra : outside) {
                if (!table.cell(x).contains(extra)) {
                    insert_point(table, x.alpha, x.i, extra);
                    return;
                }
            }
        }
    }
}

}  // namespace

AmalgamationHooks mutation_hooks(Claim claim)
{
    using Trace = AmalgamationTrace;
    using Request = AmalgamationRequest;
    AmalgamationHooks hooks;
    switch (claim) {
    case Claim::push:
        hooks.after_uprime = [](Trace& t, const Request& r) { break_push(t.p_prime, t, r, false); };
        break;
    case Claim::push2:
        hooks.after_uprime = [](Trace& t, const Request& r) { break_push(t.p_prime, t, r, true); };
        break;
    case Claim::push3:
        hooks.after_modification = [](Trace& t, const Request& r) { break_push(t.p, t, r, true); };
        break;
    case Claim::p_prime_valid:
        hooks.after_uprime = [](Trace& t, const Request& r) { erase_point(t.p_prime, r.xi0, r.depth() - 1, r.xi0); };
        break;
    case Claim::p_prime_extends:
        hooks.after_uprime = [](Trace& t, const Request& r) { break_inclusion(t.p_prime, r); };
        break;
    case Claim::p_valid:
        hooks.after_modification = [](Trace& t, const Request& r) {
            erase_point(t.p, r.xi1(), r.depth() - 1, r.xi1());
        };
        break;
    case Claim::p_extends:
        hooks.after_modification = [](Trace& t, const Request& r) { break_inclusion(t.p, r); };
        break;
    case Claim::star:
        hooks.after_modification = [](Trace& t, const Request& r) { erase_point(t.p, r.xi1(), r.m, r.xi0); };
        break;
    case Claim::u_minus_uprime:
        hooks.after_modification = [](Trace& t, const Request& r) {
            insert_point(t.p, t.block.at({r.xi1(), 0}), 0, t.block.at({r.xi0, 0}));
        };
        break;
    case Claim::u2:
        hooks.after_modification = [](Trace& t, const Request& r) {
            erase_point(t.p, r.xi0, r.k, t.block.at({r.xi1(), r.k}));
        };
        break;
    }
    return hooks;
}

}  // namespace amalgam::verify
