// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include "amalgam/twins.hpp"

#include <sstream>

namespace amalgam {

std::optional<OrdinalMap> order_iso(const PointSet& a0, const PointSet& a1)
{
    if (a0.size() != a1.size()) {
        return std::nullopt;
    }
    OrdinalMap out;
    for (std::size_t r = 0; r < a0.size(); ++r) {
        out.emplace(a0[r], a1[r]);
    }
    return out;
}

PointSet image(const OrdinalMap& map, const PointSet& set)
{
    std::vector<Ordinal> out;
    out.reserve(set.size());
    for (Ordinal x : set) {
        out.push_back(map.at(x));
    }
    return PointSet(std::move(out));
}

OrdinalMap TwinCertificate::inverse() const
{
    OrdinalMap out;
    for (auto [from, to] : sigma) {
        out.emplace(to, from);
    }
    return out;
}

std::optional<TwinCertificate> is_twin_pair(const Condition& p0, const Condition& p1)
{
    if (p0.depth() != p1.depth()) {
        return std::nullopt;
    }
    auto sigma = order_iso(p0.support(), p1.support());
    if (!sigma) {
        return std::nullopt;
    }
    TwinCertificate cert;
    cert.root = p0.support() & p1.support();
    for (Ordinal d : cert.root) {
        if (sigma->at(d) != d) {  // I1
            return std::nullopt;
        }
    }
    for (Ordinal alpha : p0.support()) {  // I2
        for (Level i = 0; i < p0.depth(); ++i) {
            if (p1.cell(sigma->at(alpha), i) != image(*sigma, p0.cell(alpha, i))) {
                return std::nullopt;
            }
        }
    }
    cert.sigma = std::move(*sigma);
    for (auto [from, to] : cert.sigma) {
        cert.smash[from] = from;
        cert.smash[to] = from;
        cert.exchange[from] = to;
        cert.exchange[to] = from;
    }
    return cert;
}

bool supports_ordered(const PointSet& a0, const PointSet& a1)
{
    const PointSet root = a0 & a1;
    const PointSet left = a0 - a1;
    const PointSet right = a1 - a0;
    return precedes(root, left) && precedes(left, right) && precedes(root, right);
}

std::string ShapeKey::str() const
{
    std::ostringstream os;
    os << "n=" << depth << " |A|=" << size << " U:";
    for (std::size_t s = 0; s < cells.size(); ++s) {
        os << " (" << (depth ? s / depth : 0) << ',' << (depth ? s % depth : 0) << ")={";
        for (std::size_t k = 0; k < cells[s].size(); ++k) {
            os << (k ? "," : "") << cells[s][k];
        }
        os << '}';
    }
    return os.str();
}

ShapeKey canonicalize(const Condition& p)
{
    ShapeKey key;
    key.depth = p.depth();
    key.size = p.support().size();
    key.cells.reserve(key.size * key.depth);
    for (const auto& pair : p.index_pairs()) {
        std::vector<std::uint32_t> ranks;
        for (Ordinal x : p.cell(pair)) {
            ranks.push_back(static_cast<std::uint32_t>(p.support().rank(x)));
        }
        key.cells.push_back(std::move(ranks));
    }
    return key;
}

bool twins_by_shape(const Condition& p0, const Condition& p1)
{
    if (canonicalize(p0) != canonicalize(p1)) {
        return false;
    }
    const PointSet root = p0.support() & p1.support();
    for (Ordinal d : root) {
        if (p0.support().rank(d) != p1.support().rank(d)) {
            return false;
        }
    }
    return true;
}

MarkedCondition::MarkedCondition(Condition c, Ordinal m) : cond(std::move(c)), mark(m)
{
    if (!cond.has(mark)) {
        throw Error("mark " + std::to_string(mark) + " is not in the support");
    }
}

std::optional<AmalgamablePair> find_amalgamable_pair(std::span<const MarkedCondition> family)
{
    std::map<ShapeKey, std::vector<std::size_t>> buckets;
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
        buckets[canonicalize(family[idx].cond)].push_back(idx);
    }
    std::optional<AmalgamablePair> best;
    for (const auto& [key, members] : buckets) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const std::size_t xi = members[a];
                const std::size_t eta = members[b];
                if (best && std::pair(xi, eta) >= std::pair(best->first, best->second)) {
                    break;  // members are increasing, later b only get larger
                }
                const auto& lo = family[xi];
                const auto& hi = family[eta];
                if (hi.cond.has(lo.mark) || !supports_ordered(lo.cond.support(), hi.cond.support())) {
                    continue;
                }
                auto cert = is_twin_pair(lo.cond, hi.cond);
                if (cert && cert->sigma.at(lo.mark) == hi.mark) {
                    best = AmalgamablePair{xi, eta, std::move(*cert)};
                }
            }
        }
    }
    return best;
}

}  // namespace amalgam
