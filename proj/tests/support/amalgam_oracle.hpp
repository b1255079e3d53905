// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

// Naive re-derivation of the twin amalgamation from its defining equations,
// written with std::set and plain loops. It reads conditions only through
// their public accessors and recomputes sigma, the fresh block and every
// table on its own.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "amalgam/condition.hpp"

namespace oracle {

using Points = std::set<unsigned>;
using Cell = std::pair<unsigned, unsigned>;  // (alpha, i)
using Cells = std::set<Cell>;

struct Table {
    Points A;
    unsigned n = 0;
    std::map<Cell, Points> U;
};

inline Table table_of(const amalgam::Condition& c)
{
    Table t;
    t.n = c.depth();
    for (unsigned a : c.support()) {
        t.A.insert(a);
        for (unsigned i = 0; i < t.n; ++i) {
            const auto& cell = c.cell(a, i);
            t.U[{a, i}] = Points(cell.begin(), cell.end());
        }
    }
    return t;
}

inline bool sub(const Points& a, const Points& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

struct Result {
    Points astar;
    std::map<Cell, unsigned> rho;
    std::map<Cell, Cells> V[2];
    std::map<Cell, Cells> W[2];
    std::map<Cell, Points> uprime;  // on (A* u B) x n
    std::map<Cell, Points> ufinal;
};

inline Result amalgamate(const Table& p0, const Table& p1, unsigned xi0, unsigned k, unsigned m)
{
    (void)m;  // m only enters the conclusion
    const Table* side[2] = {&p0, &p1};
    const unsigned n = p0.n;
    std::map<unsigned, unsigned> sigma;
    std::map<unsigned, unsigned> inverse;
    {
        std::vector<unsigned> a0(p0.A.begin(), p0.A.end());
        std::vector<unsigned> a1(p1.A.begin(), p1.A.end());
        for (std::size_t r = 0; r < a0.size(); ++r) {
            sigma[a0[r]] = a1[r];
            inverse[a1[r]] = a0[r];
        }
    }
    Points root;
    for (unsigned a : p0.A) {
        if (p1.A.count(a)) {
            root.insert(a);
        }
    }
    auto exchange = [&](unsigned x) { return p0.A.count(x) ? sigma.at(x) : inverse.at(x); };

    Result r;
    r.astar = p0.A;
    r.astar.insert(p1.A.begin(), p1.A.end());
    unsigned next = r.astar.empty() ? 0 : *r.astar.rbegin() + 1;
    for (unsigned a : r.astar) {
        for (unsigned i = 0; i < n; ++i) {
            r.rho[{a, i}] = next++;
        }
    }
    auto embed = [&](const Cells& cells) {
        Points out;
        for (const auto& c : cells) {
            out.insert(r.rho.at(c));
        }
        return out;
    };

    for (int e = 0; e < 2; ++e) {
        const Table& own = *side[e];
        const Table& far = *side[1 - e];
        for (unsigned beta : own.A) {
            for (unsigned j = 0; j < n; ++j) {
                Cells v;
                Cells w;
                for (unsigned a : own.A) {
                    for (unsigned i = 0; i < n; ++i) {
                        if (sub(own.U.at({a, i}), own.U.at({beta, j}))) {
                            v.insert({a, i});
                        }
                    }
                }
                for (unsigned a : far.A) {
                    for (unsigned i = 0; i < n; ++i) {
                        for (unsigned g : root) {
                            for (unsigned l = 0; l < n; ++l) {
                                if (sub(far.U.at({a, i}), far.U.at({g, l})) &&
                                    sub(own.U.at({g, l}), own.U.at({beta, j}))) {
                                    w.insert({a, i});
                                }
                            }
                        }
                    }
                }
                r.V[e][{beta, j}] = v;
                r.W[e][{beta, j}] = w;
            }
        }
    }

    for (unsigned beta : r.astar) {
        for (unsigned j = 0; j < n; ++j) {
            std::vector<Points> readings;
            for (int e = 0; e < 2; ++e) {
                if (!side[e]->A.count(beta)) {
                    continue;
                }
                Points u = side[e]->U.at({beta, j});
                const Points& across = side[1 - e]->U.at({exchange(beta), j});
                u.insert(across.begin(), across.end());
                for (const auto* extra : {&r.V[e][{beta, j}], &r.W[e][{beta, j}]}) {
                    const Points pts = embed(*extra);
                    u.insert(pts.begin(), pts.end());
                }
                readings.push_back(u);
            }
            if (readings.size() == 2 && readings[0] != readings[1]) {
                throw std::logic_error("the two readings disagree");
            }
            r.uprime[{beta, j}] = readings.front();
        }
    }
    for (const auto& [cell, b] : r.rho) {
        for (unsigned j = 0; j < n; ++j) {
            r.uprime[{b, j}] = Points{b};
        }
    }

    r.ufinal = r.uprime;
    const unsigned xi1 = sigma.at(xi0);
    for (unsigned z : p0.A) {
        for (unsigned j = 0; j < n; ++j) {
            if (sub(p0.U.at({xi0, k}), p0.U.at({z, j}))) {
                const Points& gain = r.uprime.at({xi1, k});
                r.ufinal[{z, j}].insert(gain.begin(), gain.end());
            }
        }
    }
    return r;
}

}  // namespace oracle
