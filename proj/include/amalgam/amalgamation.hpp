// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "amalgam/condition.hpp"
#include "amalgam/twins.hpp"

namespace amalgam {

/// The request breaks one of the amalgamation hypotheses; `clause()` names which.
class HypothesisError : public Error {
public:
    HypothesisError(std::string clause, const std::string& what);
    const std::string& clause() const { return clause_; }

private:
    std::string clause_;
};

/// The two one-sided readings of U'(delta, j) disagree at a common point.
class WellDefinednessError : public Error {
public:
    WellDefinednessError(Ordinal delta, Level j, PointSet from_side0, PointSet from_side1);

    Ordinal delta;
    Level j;
    PointSet from_side0;
    PointSet from_side1;
};

enum class Side { zero = 0, one = 1 };

inline Side other(Side s) { return s == Side::zero ? Side::one : Side::zero; }
inline int index(Side s) { return static_cast<int>(s); }

struct AmalgamationRequest {
    Condition p0;
    Condition p1;
    TwinCertificate cert;
    Ordinal xi0 = 0;
    Level k = 0;
    Level m = 0;

    const Condition& side(Side s) const { return s == Side::zero ? p0 : p1; }
    Ordinal xi1() const { return cert.sigma.at(xi0); }
    Level depth() const { return p0.depth(); }
};

/// Builds a request, deriving the twin certificate; throws HypothesisError.
AmalgamationRequest make_request(Condition p0, Condition p1, Ordinal xi0, Level k, Level m);

/// Re-checks every hypothesis of a hand-assembled request; throws HypothesisError.
void check_request(const AmalgamationRequest& request);

struct FreshBlock {
    PointSet points;
    std::map<IndexPair, Ordinal> rho;

    Ordinal at(const IndexPair& pair) const { return rho.at(pair); }
    PointSet embed(const std::set<IndexPair>& pairs) const;
};

/// The |A*|*n least naturals above max(A*), numbered lexicographically by (rank of alpha, i).
FreshBlock fresh_block(const PointSet& astar, Level n);

using PairSet = std::set<IndexPair>;
using PairTable = std::map<IndexPair, PairSet>;

/// V_eps(beta, j): pairs of A_eps x n whose cell lies inside U_eps(beta, j).
PairSet compute_V(const Condition& p, Ordinal beta, Level j);

/// W_eps(beta, j): pairs of A_{1-eps} x n routed into U_eps(beta, j) through a root cell.
PairSet compute_W(const Condition& p0, const Condition& p1, const TwinCertificate& cert, Side eps, Ordinal beta,
                  Level j);

/**
 * Every intermediate object of the construction.
 *
 * p_prime is <A* u B, n, U'> (the minimal amalgam) and p is the final
 * condition <A* u B, n, U> after the modification step.
 */
struct AmalgamationTrace {
    PointSet astar;
    FreshBlock block;
    std::array<PairTable, 2> V;
    std::array<PairTable, 2> W;
    Condition p_prime;
    Condition p;

    const PointSet& uprime(Ordinal z, Level j) const { return p_prime.cell(z, j); }
    const PointSet& ufinal(Ordinal z, Level j) const { return p.cell(z, j); }
};

/// Stages U' and the final table; p is left equal to p_prime.
AmalgamationTrace build_uprime(const AmalgamationRequest& request);

/// Final table: rows z in A0 with U0(xi0,k) inside U0(z,j) absorb U'(xi1,k).
Condition apply_modification(const AmalgamationTrace& trace, const AmalgamationRequest& request);

/// Injection points for negative controls; each hook may edit the trace in place.
struct AmalgamationHooks {
    std::function<void(AmalgamationTrace&, const AmalgamationRequest&)> after_uprime;
    std::function<void(AmalgamationTrace&, const AmalgamationRequest&)> after_modification;
};

AmalgamationTrace amalgamate(const AmalgamationRequest& request, const AmalgamationHooks& hooks = {});

enum class Claim {
    push,
    push2,
    push3,
    p_prime_valid,
    p_prime_extends,
    p_valid,
    p_extends,
    star,
    u_minus_uprime,
    u2,
};

inline constexpr std::array<Claim, 10> kAllClaims = {
    Claim::push,    Claim::push2,     Claim::push3, Claim::p_prime_valid,  Claim::p_prime_extends,
    Claim::p_valid, Claim::p_extends, Claim::star,  Claim::u_minus_uprime, Claim::u2,
};

const char* claim_name(Claim claim);
std::optional<Claim> claim_from_name(const std::string& name);

struct ClaimResult {
    Claim claim = Claim::push;
    bool holds = true;
    std::string witness;  // first counterexample, empty when the claim holds
};

/**
 * Two readings of the W-step inside the push2 argument. `eq5` follows the
 * construction: members <alpha,i> of W_eps(beta,j) have exchange(alpha) in
 * U_eps(beta,j). `text` is the literal wording with W_{1-eps}(beta,j): it is
 * only defined at rows beta of the root and there asks for alpha in U_eps(beta,j).
 */
struct Push2Readings {
    bool eq5 = true;
    bool text = true;
    std::size_t text_defined_rows = 0;
    std::size_t text_undefined_rows = 0;
};

struct ClaimReport {
    std::vector<ClaimResult> results;
    Push2Readings push2_readings;

    bool all_hold() const;
    const ClaimResult& operator[](Claim claim) const;
    std::vector<Claim> failing() const;
};

/// Exhaustively checks every claim of the construction on a (possibly mutated) trace.
ClaimReport verify_amalgamation(const AmalgamationTrace& trace, const AmalgamationRequest& request);

}  // namespace amalgam
