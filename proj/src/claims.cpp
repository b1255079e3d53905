// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

// Exhaustive checks of the claims behind the amalgamation construction. Every
// check quantifies over the finite domains of the trace and reports the first
// counterexample in lexicographic order.

#include <sstream>

#include "amalgam/amalgamation.hpp"

namespace amalgam {

const char* claim_name(Claim claim)
{
    switch (claim) {
    case Claim::push:
        return "push";
    case Claim::push2:
        return "push2";
    case Claim::push3:
        return "push3";
    case Claim::p_prime_valid:
        return "p-prime-valid";
    case Claim::p_prime_extends:
        return "p-prime-extends";
    case Claim::p_valid:
        return "p-valid";
    case Claim::p_extends:
        return "p-extends";
    case Claim::star:
        return "star";
    case Claim::u_minus_uprime:
        return "u-minus-uprime";
    case Claim::u2:
        return "u2";
    }
    return "?";
}

std::optional<Claim> claim_from_name(const std::string& name)
{
    for (Claim c : kAllClaims) {
        if (name == claim_name(c)) {
            return c;
        }
    }
    return std::nullopt;
}

bool ClaimReport::all_hold() const
{
    for (const auto& r : results) {
        if (!r.holds) {
            return false;
        }
    }
    return true;
}

const ClaimResult& ClaimReport::operator[](Claim claim) const
{
    for (const auto& r : results) {
        if (r.claim == claim) {
            return r;
        }
    }
    throw std::out_of_range(std::string("claim not in report: ") + claim_name(claim));
}

std::vector<Claim> ClaimReport::failing() const
{
    std::vector<Claim> out;
    for (const auto& r : results) {
        if (!r.holds) {
            out.push_back(r.claim);
        }
    }
    return out;
}

namespace {

class Checker {
public:
    Checker(const AmalgamationTrace& trace, const AmalgamationRequest& request) : t_(trace), r_(request)
    {
        for (const auto& [pair, b] : t_.block.rho) {
            pair_of_.emplace(b, pair);
        }
    }

    ClaimResult run(Claim claim) const
    {
        ClaimResult out{claim, true, {}};
        try {
            out.witness = find_counterexample(claim);
        } catch (const std::exception& e) {
            out.witness = std::string("malformed trace: ") + e.what();
        }
        out.holds = out.witness.empty();
        return out;
    }

    Push2Readings readings() const
    {
        Push2Readings out;
        const auto& x = r_.cert.exchange;
        for (Side eps : {Side::zero, Side::one}) {
            const Condition& same = r_.side(eps);
            for (const auto& pair : same.index_pairs()) {
                const PointSet& target = same.cell(pair);
                for (const auto& w : compute_W(r_.p0, r_.p1, r_.cert, eps, pair.alpha, pair.i)) {
                    if (!target.contains(x.at(w.alpha))) {
                        out.eq5 = false;
                    }
                }
                if (!r_.cert.root.contains(pair.alpha)) {
                    ++out.text_undefined_rows;
                    continue;
                }
                ++out.text_defined_rows;
                for (const auto& w : compute_W(r_.p0, r_.p1, r_.cert, other(eps), pair.alpha, pair.i)) {
                    if (!target.contains(w.alpha)) {
                        out.text = false;
                    }
                }
            }
        }
        return out;
    }

private:
    Ordinal smash(Ordinal x) const { return r_.cert.smash.at(x); }

    // sigma-smash pushes membership down into p0: alpha in T(beta,j) => smash(alpha) in U0(smash(beta),j).
    std::string push_over(const Condition& table, bool block_points) const
    {
        for (Ordinal beta : t_.astar) {
            for (Level j = 0; j < r_.depth(); ++j) {
                for (Ordinal x : table.cell(beta, j)) {
                    Ordinal alpha = x;
                    if (block_points) {
                        auto it = pair_of_.find(x);
                        if (it == pair_of_.end()) {
                            continue;
                        }
                        alpha = it->second.alpha;
                    } else if (!t_.astar.contains(x)) {
                        continue;
                    }
                    if (!r_.p0.cell(smash(beta), j).contains(smash(alpha))) {
                        std::ostringstream os;
                        os << "member " << x << " of row (" << beta << "," << j << "): smash(" << alpha
                           << ")=" << smash(alpha) << " not in U0(" << smash(beta) << "," << j << ")";
                        return os.str();
                    }
                }
            }
        }
        return {};
    }

    static std::string valid(const Condition& c, const char* name)
    {
        auto v = validate_condition(c);
        return v.ok() ? std::string{} : std::string(name) + " " + v.violations.front().describe();
    }

    std::string extends(const Condition& c, const char* name) const
    {
        if (!is_valid(c)) {
            return std::string(name) + " is not a condition";
        }
        for (Side eps : {Side::zero, Side::one}) {
            auto verdict = check_extension(c, r_.side(eps));
            if (!verdict) {
                return std::string(name) + " <= p" + std::to_string(index(eps)) + " " + verdict.describe();
            }
        }
        return {};
    }

    std::string star() const
    {
        const Ordinal xi0 = r_.xi0;
        const Ordinal xi1 = r_.xi1();
        const auto& p = t_.p;
        if (!p.cell(xi1, r_.m).contains(xi0)) {
            return "xi0 not in U(xi1,m)";
        }
        if (!p.cell(xi1, r_.m).subset_of(p.cell(xi1, r_.k))) {
            return "U(xi1,m) not inside U(xi1,k)";
        }
        if (!p.cell(xi1, r_.k).subset_of(p.cell(xi0, r_.k))) {
            return "U(xi1,k) not inside U(xi0,k)";
        }
        return {};
    }

    std::pair<PointSet, PointSet> guard_and_gain() const
    {
        PointSet gain = t_.block.embed(compute_V(r_.p1, r_.xi1(), r_.k));
        return {r_.p0.cell(r_.xi0, r_.k), std::move(gain)};
    }

    std::string u_minus_uprime() const
    {
        const PointSet gain = guard_and_gain().second;
        for (const auto& pair : t_.p.index_pairs()) {
            PointSet extra = t_.p.cell(pair) - t_.p_prime.cell(pair);
            if (!extra.subset_of(gain)) {
                return "row " + to_string(pair) + " gained " + to_string(extra - gain) + " outside rho[V1(xi1,k)]";
            }
        }
        return {};
    }

    std::string u2() const
    {
        const auto [guard, gain] = guard_and_gain();
        for (const auto& pair : t_.p.index_pairs()) {
            const bool modified = r_.p0.has(pair.alpha) && guard.subset_of(r_.p0.cell(pair));
            PointSet expected = modified ? (t_.p_prime.cell(pair) | gain) : t_.p_prime.cell(pair);
            if (expected != t_.p.cell(pair)) {
                return "row " + to_string(pair) + ": U=" + to_string(t_.p.cell(pair)) +
                       " but the V1(xi1,k) form gives " + to_string(expected);
            }
        }
        return {};
    }

    std::string find_counterexample(Claim claim) const
    {
        switch (claim) {
        case Claim::push:
            return push_over(t_.p_prime, false);
        case Claim::push2:
            return push_over(t_.p_prime, true);
        case Claim::push3:
            return push_over(t_.p, true);
        case Claim::p_prime_valid:
            return valid(t_.p_prime, "p'");
        case Claim::p_prime_extends:
            return extends(t_.p_prime, "p'");
        case Claim::p_valid:
            return valid(t_.p, "p");
        case Claim::p_extends:
            return extends(t_.p, "p");
        case Claim::star:
            return star();
        case Claim::u_minus_uprime:
            return u_minus_uprime();
        case Claim::u2:
            return u2();
        }
        return "unknown claim";
    }

    const AmalgamationTrace& t_;
    const AmalgamationRequest& r_;
    std::map<Ordinal, IndexPair> pair_of_;
};

}  // namespace

ClaimReport verify_amalgamation(const AmalgamationTrace& trace, const AmalgamationRequest& request)
{
    Checker checker(trace, request);
    ClaimReport report;
    for (Claim c : kAllClaims) {
        report.results.push_back(checker.run(c));
    }
    report.push2_readings = checker.readings();
    return report;
}

}  // namespace amalgam
