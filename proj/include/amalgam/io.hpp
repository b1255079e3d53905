// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "amalgam/amalgamation.hpp"
#include "amalgam/condition.hpp"
#include "amalgam/generic_sim.hpp"
#include "amalgam/topology.hpp"
#include "amalgam/verifier.hpp"

namespace amalgam::io {

using Json = nlohmann::ordered_json;

/// Malformed document; the message names the first offending field.
class DocumentError : public Error {
public:
    using Error::Error;
};

Json encode(const PointSet& set);
Json encode(const Condition& c);
Json encode(const AmalgamationRequest& request);
Json encode(const AmalgamationTrace& trace, const AmalgamationRequest& request);
Json encode(const ClaimReport& report);
Json encode(const ExtensionVerdict& verdict);
Json encode(const Validation& validation);
Json encode(const sim::LimitStructure& s);
Json encode(const verify::FuzzReport& report);
Json encode_space(const PointSet& points, const std::vector<PointSet>& generators);
Json encode(const topo::FiniteSpace& space, const std::optional<topo::Decomposition>& found);

/// {"A": [...], "n": N, "U": {"alpha,i": [...]}}; structural checks only, (P2)/(P3) are not enforced.
Condition decode_condition(const Json& doc);

struct SpaceDocument {
    PointSet points;
    std::vector<PointSet> generators;
};

/// {"points": [...], "generators": [[...], ...]}
SpaceDocument decode_space(const Json& doc);

/// Parses JSON text; DocumentError on syntax errors.
Json parse(const std::string& text);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& doc);

/// "alpha,i"
std::string pair_key(const IndexPair& pair);

}  // namespace amalgam::io
