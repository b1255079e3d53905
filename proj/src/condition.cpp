// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include "amalgam/condition.hpp"

#include <algorithm>
#include <sstream>

namespace amalgam {

Condition::Condition(PointSet support, Level depth, std::vector<PointSet> cells)
    : support_(std::move(support)), depth_(depth), cells_(std::move(cells))
{
    if (cells_.size() != support_.size() * depth_) {
        throw StructureError("U has " + std::to_string(cells_.size()) + " cells, expected |A|*n = " +
                             std::to_string(support_.size() * depth_));
    }
    for (std::size_t s = 0; s < cells_.size(); ++s) {
        if (!cells_[s].subset_of(support_)) {
            IndexPair pair{support_[s / depth_], static_cast<Level>(s % depth_)};
            throw StructureError("U" + to_string(pair) + " = " + to_string(cells_[s]) + " is not a subset of A");
        }
    }
}

Condition Condition::from_table(PointSet support, Level depth, const CellTable& table)
{
    std::vector<PointSet> cells;
    cells.reserve(support.size() * depth);
    for (Ordinal alpha : support) {
        for (Level i = 0; i < depth; ++i) {
            auto it = table.find({alpha, i});
            if (it == table.end()) {
                throw StructureError("U" + to_string(IndexPair{alpha, i}) + " is missing");
            }
            cells.push_back(it->second);
        }
    }
    for (const auto& [pair, value] : table) {
        if (!support.contains(pair.alpha) || pair.i >= depth) {
            throw StructureError("U" + to_string(pair) + " lies outside A x n");
        }
    }
    return Condition(std::move(support), depth, std::move(cells));
}

std::size_t Condition::slot(Ordinal alpha, Level i) const
{
    if (i >= depth_) {
        throw std::out_of_range("level " + std::to_string(i) + " >= n = " + std::to_string(depth_));
    }
    return support_.rank(alpha) * depth_ + i;
}

const PointSet& Condition::cell(Ordinal alpha, Level i) const { return cells_[slot(alpha, i)]; }

void Condition::set_cell(Ordinal alpha, Level i, PointSet value)
{
    if (!value.subset_of(support_)) {
        throw StructureError("U" + to_string(IndexPair{alpha, i}) + " = " + to_string(value) +
                             " is not a subset of A");
    }
    cells_[slot(alpha, i)] = std::move(value);
}

std::vector<IndexPair> Condition::index_pairs() const
{
    std::vector<IndexPair> out;
    out.reserve(cells_.size());
    for (Ordinal alpha : support_) {
        for (Level i = 0; i < depth_; ++i) {
            out.push_back({alpha, i});
        }
    }
    return out;
}

CellTable Condition::table() const
{
    CellTable out;
    for (const auto& pair : index_pairs()) {
        out.emplace(pair, cell(pair));
    }
    return out;
}

std::string to_string(const Condition& c)
{
    std::ostringstream os;
    os << "<A=" << c.support() << ", n=" << c.depth() << ", U:";
    for (const auto& pair : c.index_pairs()) {
        os << ' ' << pair << "=" << c.cell(pair);
    }
    os << '>';
    return os.str();
}

bool included(const PointSet& a, const PointSet& b, Inclusion mode)
{
    return mode == Inclusion::strict ? a.strict_subset_of(b) : a.subset_of(b);
}

const char* clause_name(Clause clause)
{
    switch (clause) {
    case Clause::p2:
        return "P2";
    case Clause::p3:
        return "P3";
    }
    return "?";
}

std::string Violation::describe() const
{
    std::ostringstream os;
    os << clause_name(clause) << ": ";
    if (clause == Clause::p2) {
        os << "alpha=" << alpha << " i=" << i;
    } else {
        os << "alpha=" << alpha << " beta=" << beta << " i=" << i;
    }
    return os.str();
}

Validation validate_condition(const Condition& c, Inclusion mode)
{
    Validation out;
    const auto& A = c.support();
    const Level n = c.depth();
    for (Ordinal alpha : A) {
        for (Level i = 0; i < n; ++i) {
            const auto& u = c.cell(alpha, i);
            bool bad = !u.contains(alpha) || (i > 0 && !included(u, c.cell(alpha, i - 1), mode));
            if (bad) {
                out.violations.push_back({Clause::p2, alpha, 0, i});
            }
        }
    }
    if (n > 0) {
        for (Ordinal alpha : A) {
            for (Ordinal beta : A) {
                if (beta <= alpha) {
                    continue;
                }
                for (Level i = 0; i < n; ++i) {
                    const auto& u = c.cell(alpha, i);
                    if (u.contains(beta) && included(u, c.cell(beta, 0), mode)) {
                        out.violations.push_back({Clause::p3, alpha, beta, i});
                    }
                }
            }
        }
    }
    std::sort(out.violations.begin(), out.violations.end());
    return out;
}

bool is_valid(const Condition& c, Inclusion mode) { return validate_condition(c, mode).ok(); }

const char* clause_name(OrderClause clause)
{
    switch (clause) {
    case OrderClause::a:
        return "a";
    case OrderClause::b:
        return "b";
    case OrderClause::c:
        return "c";
    case OrderClause::d1:
        return "d1";
    case OrderClause::d2:
        return "d2";
    }
    return "?";
}

std::string ExtensionVerdict::describe() const
{
    if (holds) {
        return "holds";
    }
    std::ostringstream os;
    os << "fails (" << clause_name(*clause) << ")";
    if (point) {
        os << " point " << *point;
    }
    for (const auto& pair : cells) {
        os << ' ' << pair;
    }
    return os.str();
}

ExtensionVerdict check_extension(const Condition& q, const Condition& p, Inclusion mode)
{
    if (auto v = validate_condition(q, mode); !v.ok()) {
        throw InvalidCondition("q is not a condition: " + v.violations.front().describe());
    }
    if (auto v = validate_condition(p, mode); !v.ok()) {
        throw InvalidCondition("p is not a condition: " + v.violations.front().describe());
    }
    ExtensionVerdict out;
    auto fail = [&out](OrderClause clause) {
        out.holds = false;
        out.clause = clause;
        return out;
    };

    for (Ordinal alpha : p.support()) {
        if (!q.has(alpha)) {
            out.point = alpha;
            return fail(OrderClause::a);
        }
    }
    if (p.depth() > q.depth()) {
        return fail(OrderClause::b);
    }
    const auto pairs = p.index_pairs();
    for (const auto& pair : pairs) {
        if (p.cell(pair) != (q.cell(pair) & p.support())) {
            out.cells = {pair};
            return fail(OrderClause::c);
        }
    }
    for (const auto& x : pairs) {
        for (const auto& y : pairs) {
            if (!p.cell(x).intersects(p.cell(y)) && q.cell(x).intersects(q.cell(y))) {
                out.cells = {x, y};
                return fail(OrderClause::d1);
            }
        }
    }
    for (const auto& x : pairs) {
        for (const auto& y : pairs) {
            if (included(p.cell(x), p.cell(y), mode) && !included(q.cell(x), q.cell(y), mode)) {
                out.cells = {x, y};
                return fail(OrderClause::d2);
            }
        }
    }
    return out;
}

Condition add_point(const Condition& p, Ordinal alpha)
{
    if (p.has(alpha)) {
        throw DuplicatePoint("point " + std::to_string(alpha) + " is already in A");
    }
    PointSet support = p.support();
    support.insert(alpha);
    CellTable table = p.table();
    for (Level i = 0; i < p.depth(); ++i) {
        table[{alpha, i}] = PointSet{alpha};
    }
    return Condition::from_table(std::move(support), p.depth(), table);
}

Condition deepen(const Condition& p)
{
    CellTable table = p.table();
    for (Ordinal alpha : p.support()) {
        table[{alpha, p.depth()}] = PointSet{alpha};
    }
    return Condition::from_table(p.support(), p.depth() + 1, table);
}

Condition attach_point(const Condition& p, Ordinal alpha, const IndexPair& anchor)
{
    const PointSet& core = p.cell(anchor);
    Condition q = add_point(p, alpha);
    for (const auto& pair : p.index_pairs()) {
        if (core.subset_of(p.cell(pair))) {
            PointSet grown = q.cell(pair);
            grown.insert(alpha);
            q.set_cell(pair.alpha, pair.i, std::move(grown));
        }
    }
    return q;
}

Condition restrict_support(const Condition& p, const PointSet& keep)
{
    PointSet support = p.support() & keep;
    std::vector<PointSet> cells;
    cells.reserve(support.size() * p.depth());
    for (Ordinal alpha : support) {
        for (Level i = 0; i < p.depth(); ++i) {
            cells.push_back(p.cell(alpha, i) & support);
        }
    }
    return Condition(std::move(support), p.depth(), std::move(cells));
}

Condition drop_level(const Condition& p, Level level)
{
    if (level >= p.depth()) {
        throw std::out_of_range("level " + std::to_string(level) + " >= n");
    }
    std::vector<PointSet> cells;
    for (Ordinal alpha : p.support()) {
        for (Level i = 0; i < p.depth(); ++i) {
            if (i != level) {
                cells.push_back(p.cell(alpha, i));
            }
        }
    }
    return Condition(p.support(), p.depth() - 1, std::move(cells));
}

Condition relabel(const Condition& p, const std::map<Ordinal, Ordinal>& map)
{
    auto image = [&map](const PointSet& s) {
        std::vector<Ordinal> out;
        out.reserve(s.size());
        for (Ordinal x : s) {
            out.push_back(map.at(x));
        }
        return PointSet(std::move(out));
    };
    PointSet support = image(p.support());
    if (support.size() != p.support().size()) {
        throw Error("relabel: map is not injective on A");
    }
    CellTable table;
    for (const auto& pair : p.index_pairs()) {
        table[{map.at(pair.alpha), pair.i}] = image(p.cell(pair));
    }
    return Condition::from_table(std::move(support), p.depth(), table);
}

}  // namespace amalgam
