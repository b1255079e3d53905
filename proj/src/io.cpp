// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include "amalgam/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace amalgam::io {

namespace {

Json pairs_doc(const PairSet& pairs)
{
    Json out = Json::array();
    for (const auto& pair : pairs) {
        out.push_back(Json::array({pair.alpha, pair.i}));
    }
    return out;
}

Json pair_table_doc(const PairTable& table)
{
    Json out = Json::object();
    for (const auto& [row, pairs] : table) {
        out[pair_key(row)] = pairs_doc(pairs);
    }
    return out;
}

Json cells_doc(const Condition& c)
{
    Json out = Json::object();
    for (const auto& pair : c.index_pairs()) {
        out[pair_key(pair)] = encode(c.cell(pair));
    }
    return out;
}

Ordinal natural(const Json& value, const std::string& field)
{
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() > std::numeric_limits<Ordinal>::max()) {
        throw DocumentError(field + ": expected a natural number, got " + value.dump());
    }
    return value.get<Ordinal>();
}

PointSet natural_set(const Json& value, const std::string& field)
{
    if (!value.is_array()) {
        throw DocumentError(field + ": expected an array of naturals, got " + value.dump());
    }
    std::vector<Ordinal> items;
    for (std::size_t idx = 0; idx < value.size(); ++idx) {
        items.push_back(natural(value[idx], field + "[" + std::to_string(idx) + "]"));
    }
    PointSet out(items);
    if (out.size() != items.size()) {
        throw DocumentError(field + ": repeated member");
    }
    return out;
}

const Json& member(const Json& doc, const char* key)
{
    if (!doc.is_object()) {
        throw DocumentError("document: expected an object");
    }
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw DocumentError(std::string(key) + ": missing");
    }
    return *it;
}

IndexPair parse_key(const std::string& key)
{
    const auto comma = key.find(',');
    IndexPair out;
    auto read = [&key](std::size_t from, std::size_t to, std::uint32_t& value) {
        const char* first = key.data() + from;
        const char* last = key.data() + to;
        auto [end, ec] = std::from_chars(first, last, value);
        return first != last && ec == std::errc{} && end == last;
    };
    if (comma == std::string::npos || !read(0, comma, out.alpha) || !read(comma + 1, key.size(), out.i)) {
        throw DocumentError("U: key \"" + key + "\" is not of the form \"alpha,i\"");
    }
    return out;
}

}  // namespace

std::string pair_key(const IndexPair& pair) { return std::to_string(pair.alpha) + "," + std::to_string(pair.i); }

Json encode(const PointSet& set) { return Json(set.values()); }

Json encode(const Condition& c)
{
    Json out = Json::object();
    out["A"] = encode(c.support());
    out["n"] = c.depth();
    out["U"] = cells_doc(c);
    return out;
}

Json encode(const AmalgamationRequest& request)
{
    Json out = Json::object();
    out["xi0"] = request.xi0;
    out["xi1"] = request.xi1();
    out["k"] = request.k;
    out["m"] = request.m;
    out["n"] = request.depth();
    out["root"] = encode(request.cert.root);
    return out;
}

Json encode(const AmalgamationTrace& trace, const AmalgamationRequest& request)
{
    Json out = Json::object();
    out["request"] = encode(request);
    out["Astar"] = encode(trace.astar);
    out["B"] = encode(trace.block.points);
    Json rho = Json::object();
    for (const auto& [pair, point] : trace.block.rho) {
        rho[pair_key(pair)] = point;
    }
    out["rho"] = std::move(rho);
    for (const char* name : {"V", "W"}) {
        const auto& tables = name[0] == 'V' ? trace.V : trace.W;
        Json sides = Json::object();
        sides["0"] = pair_table_doc(tables[0]);
        sides["1"] = pair_table_doc(tables[1]);
        out[name] = std::move(sides);
    }
    out["Uprime"] = cells_doc(trace.p_prime);
    out["p"] = encode(trace.p);
    return out;
}

Json encode(const ClaimReport& report)
{
    Json out = Json::object();
    out["all_hold"] = report.all_hold();
    Json claims = Json::object();
    for (const auto& result : report.results) {
        Json entry = Json::object();
        entry["holds"] = result.holds;
        if (!result.holds) {
            entry["witness"] = result.witness;
        }
        claims[claim_name(result.claim)] = std::move(entry);
    }
    out["claims"] = std::move(claims);
    Json readings = Json::object();
    readings["construction"] = report.push2_readings.eq5;
    readings["literal"] = report.push2_readings.text;
    readings["literal_defined_rows"] = report.push2_readings.text_defined_rows;
    readings["literal_undefined_rows"] = report.push2_readings.text_undefined_rows;
    out["push2_readings"] = std::move(readings);
    return out;
}

Json encode(const ExtensionVerdict& verdict)
{
    Json out = Json::object();
    out["holds"] = verdict.holds;
    if (!verdict.holds) {
        out["clause"] = verdict.clause ? clause_name(*verdict.clause) : "";
        if (verdict.point) {
            out["point"] = *verdict.point;
        }
        Json cells = Json::array();
        for (const auto& pair : verdict.cells) {
            cells.push_back(pair_key(pair));
        }
        out["cells"] = std::move(cells);
        out["detail"] = verdict.describe();
    }
    return out;
}

Json encode(const Validation& validation)
{
    Json out = Json::object();
    out["valid"] = validation.ok();
    Json violations = Json::array();
    for (const auto& v : validation.violations) {
        Json entry = Json::object();
        entry["clause"] = clause_name(v.clause);
        entry["alpha"] = v.alpha;
        if (v.clause == Clause::p3) {
            entry["beta"] = v.beta;
        }
        entry["i"] = v.i;
        entry["detail"] = v.describe();
        violations.push_back(std::move(entry));
    }
    out["violations"] = std::move(violations);
    return out;
}

Json encode(const sim::LimitStructure& s)
{
    Json out = Json::object();
    out["points"] = encode(s.points);
    out["n"] = s.depth;
    Json cells = Json::object();
    for (const auto& [pair, cell] : s.U) {
        cells[pair_key(pair)] = encode(cell);
    }
    out["U"] = std::move(cells);
    out["chain_length"] = s.chain.size();
    out["unmet_intersections"] = s.unmet_intersections;
    return out;
}

Json encode(const verify::FuzzReport& report)
{
    Json out = Json::object();
    out["property"] = report.property;
    if (report.mutation) {
        out["mutation"] = claim_name(*report.mutation);
    }
    out["trials"] = report.trials;
    out["wall_time_ms"] = report.wall_time.count();
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json entry = Json::object();
        entry["trial"] = f.trial;
        entry["checks"] = f.checks;
        entry["detail"] = f.detail;
        if (f.input) {
            entry["input"] = {{"p0", encode(f.input->p0)}, {"p1", encode(f.input->p1)}, {"request", encode(*f.input)}};
        }
        if (f.witness) {
            entry["witness"] = {
                {"p0", encode(f.witness->p0)}, {"p1", encode(f.witness->p1)}, {"request", encode(*f.witness)}};
        }
        if (!f.conditions.empty()) {
            Json conds = Json::array();
            for (const auto& c : f.conditions) {
                conds.push_back(encode(c));
            }
            entry["conditions"] = std::move(conds);
        }
        entry["witness_points"] = f.witness_points;
        failures.push_back(std::move(entry));
    }
    out["failures"] = std::move(failures);
    return out;
}

Json encode_space(const PointSet& points, const std::vector<PointSet>& generators)
{
    Json out = Json::object();
    out["points"] = encode(points);
    Json gens = Json::array();
    for (const auto& g : generators) {
        gens.push_back(encode(g));
    }
    out["generators"] = std::move(gens);
    return out;
}

Json encode(const topo::FiniteSpace& space, const std::optional<topo::Decomposition>& found)
{
    Json out = Json::object();
    out["points"] = encode(space.points());
    Json opens = Json::array();
    for (topo::Mask open : space.opens()) {
        opens.push_back(encode(space.set_of(open)));
    }
    out["opens"] = std::move(opens);
    out["t0"] = topo::is_t0(space);
    out["irreducible_base"] = found.has_value();
    if (found) {
        Json base = Json::array();
        for (topo::Mask b : found->base) {
            base.push_back(encode(space.set_of(b)));
        }
        out["base"] = std::move(base);
        Json owners = Json::object();
        for (std::size_t r = 0; r < found->owners.size(); ++r) {
            Json sets = Json::array();
            for (topo::Mask b : found->owners[r]) {
                sets.push_back(encode(space.set_of(b)));
            }
            owners[std::to_string(space.points()[r])] = std::move(sets);
        }
        out["owners"] = std::move(owners);
    }
    return out;
}

Condition decode_condition(const Json& doc)
{
    const PointSet support = natural_set(member(doc, "A"), "A");
    const Level depth = natural(member(doc, "n"), "n");
    const Json& cells = member(doc, "U");
    if (!cells.is_object()) {
        throw DocumentError("U: expected an object keyed by \"alpha,i\"");
    }
    CellTable table;
    for (const auto& [key, value] : cells.items()) {
        const IndexPair pair = parse_key(key);
        if (!support.contains(pair.alpha) || pair.i >= depth) {
            throw DocumentError("U[\"" + key + "\"]: index lies outside A x n");
        }
        PointSet cell = natural_set(value, "U[\"" + key + "\"]");
        if (!cell.subset_of(support)) {
            throw DocumentError("U[\"" + key + "\"]: members " + to_string(cell - support) + " are not in A");
        }
        table.emplace(pair, std::move(cell));
    }
    for (Ordinal alpha : support) {
        for (Level i = 0; i < depth; ++i) {
            if (!table.contains({alpha, i})) {
                throw DocumentError("U[\"" + pair_key({alpha, i}) + "\"]: missing");
            }
        }
    }
    return Condition::from_table(support, depth, table);
}

SpaceDocument decode_space(const Json& doc)
{
    SpaceDocument out;
    out.points = natural_set(member(doc, "points"), "points");
    const Json& gens = member(doc, "generators");
    if (!gens.is_array()) {
        throw DocumentError("generators: expected an array of arrays");
    }
    for (std::size_t idx = 0; idx < gens.size(); ++idx) {
        const std::string field = "generators[" + std::to_string(idx) + "]";
        PointSet g = natural_set(gens[idx], field);
        if (!g.subset_of(out.points)) {
            throw DocumentError(field + ": members " + to_string(g - out.points) + " are not points");
        }
        out.generators.push_back(std::move(g));
    }
    if (out.points.size() > topo::kMaxPoints) {
        throw DocumentError("points: at most " + std::to_string(topo::kMaxPoints) + " points are supported");
    }
    return out;
}

Json parse(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DocumentError(std::string("document: ") + e.what());
    }
}

Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DocumentError(path + ": cannot open");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse(buffer.str());
    } catch (const DocumentError& e) {
        throw DocumentError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const Json& doc)
{
    std::ofstream out(path);
    if (!out) {
        throw Error(path + ": cannot write");
    }
    out << doc.dump(2) << '\n';
}

}  // namespace amalgam::io
