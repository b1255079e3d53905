// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#include "amalgam/cli.hpp"

#include <CLI11.hpp>

#include "amalgam/io.hpp"

namespace amalgam::cli {

namespace {

using io::Json;

struct Options {
    std::string format = "text";
    bool strict = false;

    std::vector<std::string> files;

    Ordinal xi0 = 0;
    Level k = 0;
    Level m = 0;
    std::string trace_out;

    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::size_t max_a = 6;
    Level max_n = 4;
    std::uint32_t universe = 64;
    std::string property = "amalgamation-full";
    std::string mutation;

    std::uint32_t points = 0;
    Level depth = 0;
    std::size_t budget = 10000;
    bool no_extra = false;
    std::string out_file;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    bool json() const { return o_.format == "json"; }

    int emit(const Json& doc, const std::string& text, int code)
    {
        if (json()) {
            out_ << doc.dump(2) << '\n';
        } else {
            out_ << text;
        }
        return code;
    }

    Inclusion mode() const { return o_.strict ? Inclusion::strict : Inclusion::non_strict; }

    // Decodes a condition and rejects tables that are not members of P.
    Condition load_valid(const std::string& path)
    {
        Condition c = io::decode_condition(io::read_file(path));
        if (auto v = validate_condition(c, mode()); !v.ok()) {
            throw InvalidCondition(path + ": not a condition: " + v.violations.front().describe());
        }
        return c;
    }

    int validate()
    {
        const Condition c = io::decode_condition(io::read_file(o_.files[0]));
        const Validation v = validate_condition(c, mode());
        std::string text = v.ok() ? "valid\n" : "";
        for (const auto& violation : v.violations) {
            text += "violation: " + violation.describe() + "\n";
        }
        return emit(io::encode(v), text, v.ok() ? kOk : kNegative);
    }

    int leq()
    {
        const Condition q = load_valid(o_.files[0]);
        const Condition p = load_valid(o_.files[1]);
        const ExtensionVerdict verdict = check_extension(q, p, mode());
        return emit(io::encode(verdict), verdict ? "q <= p\n" : "q is not below p: " + verdict.describe() + "\n",
                    verdict ? kOk : kNegative);
    }

    int twins()
    {
        const Condition p0 = load_valid(o_.files[0]);
        const Condition p1 = load_valid(o_.files[1]);
        const auto cert = is_twin_pair(p0, p1);
        Json doc = Json::object();
        doc["twins"] = cert.has_value();
        doc["ordered"] = supports_ordered(p0.support(), p1.support());
        std::string text = cert ? "twins\n" : "not twins\n";
        if (cert) {
            Json sigma = Json::object();
            text += "sigma:";
            for (const auto& [from, to] : cert->sigma) {
                sigma[std::to_string(from)] = to;
                text += " " + std::to_string(from) + "->" + std::to_string(to);
            }
            text += "\nroot: " + to_string(cert->root) + "\n";
            doc["sigma"] = std::move(sigma);
            doc["root"] = io::encode(cert->root);
        }
        return emit(doc, text, cert ? kOk : kNegative);
    }

    int amalgamate_cmd()
    {
        const Condition p0 = load_valid(o_.files[0]);
        const Condition p1 = load_valid(o_.files[1]);
        const AmalgamationRequest request = make_request(p0, p1, o_.xi0, o_.k, o_.m);
        const AmalgamationTrace trace = amalgamate(request);
        const ClaimReport report = verify_amalgamation(trace, request);
        const Json trace_doc = io::encode(trace, request);
        if (!o_.trace_out.empty()) {
            io::write_file(o_.trace_out, trace_doc);
        }
        Json doc = Json::object();
        doc["p"] = io::encode(trace.p);
        doc["claims"] = io::encode(report);
        std::string text = "amalgam: " + to_string(trace.p) + "\n";
        for (const auto& result : report.results) {
            text += std::string(claim_name(result.claim)) + ": " + (result.holds ? "holds" : "FAILS " + result.witness) +
                    "\n";
        }
        return emit(doc, text, report.all_hold() ? kOk : kNegative);
    }

    int fuzz()
    {
        verify::GenParams params;
        params.trials = o_.trials;
        params.seed = o_.seed;
        params.max_points = o_.max_a;
        params.max_depth = o_.max_n;
        params.universe = o_.universe;
        verify::FuzzOptions options;
        options.property = o_.property;
        if (!o_.mutation.empty()) {
            options.mutation = claim_from_name(o_.mutation);
            if (!options.mutation) {
                throw CLI::ValidationError("--mutation", "unknown claim '" + o_.mutation + "'");
            }
        }
        const verify::FuzzReport report = verify::run_fuzz(params, options);
        std::string text = o_.property + ": " + std::to_string(report.trials) + " trials, " +
                           std::to_string(report.failures.size()) + " failures, " +
                           std::to_string(report.wall_time.count()) + " ms\n";
        for (const auto& f : report.failures) {
            text += "  trial " + std::to_string(f.trial) + ": " + f.detail;
            if (f.witness) {
                text += " (shrunk to " + std::to_string(f.witness_points) + " points)";
            }
            text += "\n";
        }
        return emit(io::encode(report), text, report.failures.empty() ? kOk : kNegative);
    }

    int simulate()
    {
        sim::SimulationConfig config;
        config.universe = o_.points;
        config.depth = o_.depth;
        config.seed = o_.seed;
        config.budget = o_.budget;
        config.extra_tasks = !o_.no_extra;
        sim::LimitStructure s;
        try {
            s = sim::run_simulation(config);
        } catch (const sim::BudgetExhausted& e) {
            Json doc = io::encode(e.partial);
            doc["error"] = e.what();
            return emit(doc, std::string("budget exhausted: ") + e.what() + "\n", kNegative);
        }
        const auto p2 = sim::check_p2_global(s);
        const auto p3 = sim::check_p3_global(s);
        const bool consistent = sim::chain_consistent(s);
        if (!o_.out_file.empty()) {
            io::write_file(o_.out_file, io::encode(s));
        }
        Json doc = io::encode(s);
        doc["p2"] = p2.holds;
        doc["p3"] = p3.holds;
        doc["chain_consistent"] = consistent;
        std::string text = "limit structure: " + std::to_string(s.points.size()) + " points, depth " +
                           std::to_string(s.depth) + ", chain of " + std::to_string(s.chain.size()) + "\n";
        text += std::string("P2: ") + (p2 ? "ok" : p2.witness->describe()) + "\n";
        text += std::string("P3: ") + (p3 ? "ok" : p3.witness->describe()) + "\n";
        text += std::string("chain consistency: ") + (consistent ? "ok" : "broken") + "\n";
        text += "unmet intersections: " + std::to_string(s.unmet_intersections) + "\n";
        return emit(doc, text, p2 && p3 && consistent ? kOk : kNegative);
    }

    int irreducible()
    {
        const auto doc = io::decode_space(io::read_file(o_.files[0]));
        const topo::FiniteSpace space = topo::generate_topology(doc.points, doc.generators);
        const auto found = topo::find_irreducible_base(space);
        std::string text = found ? "irreducible base found:\n" : "no irreducible base\n";
        if (found) {
            for (std::size_t r = 0; r < found->owners.size(); ++r) {
                text += "  " + std::to_string(space.points()[r]) + ":";
                for (topo::Mask b : found->owners[r]) {
                    text += " " + topo::to_string(space, b);
                }
                text += "\n";
            }
        }
        return emit(io::encode(space, found), text, found ? kOk : kNegative);
    }

private:
    const Options& o_;
    std::ostream& out_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Finite conditions, twin amalgamation and finite base checks", "amalgam"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--strict", o.strict, "Read the inclusion sign as proper inclusion");

    auto* validate = app.add_subcommand("validate", "Check (P2) and (P3) of a condition");
    validate->add_option("file", o.files, "Condition document")->required()->expected(1);

    auto* leq = app.add_subcommand("leq", "Check that Q extends P");
    leq->add_option("files", o.files, "Q and P documents")->required()->expected(2);

    auto* twins = app.add_subcommand("twins", "Check that two conditions are twins");
    twins->add_option("files", o.files, "Two condition documents")->required()->expected(2);

    auto* amalg = app.add_subcommand("amalgamate", "Amalgamate a twin pair and verify the claims");
    amalg->add_option("files", o.files, "p0 and p1 documents")->required()->expected(2);
    amalg->add_option("--xi0", o.xi0, "Point of A0 outside A1")->required();
    amalg->add_option("--k", o.k, "Lower level")->required();
    amalg->add_option("--m", o.m, "Upper level")->required();
    amalg->add_option("--trace", o.trace_out, "Write the full trace here");

    auto* fuzz = app.add_subcommand("fuzz", "Randomized property campaign");
    fuzz->add_option("--trials", o.trials, "Number of trials");
    fuzz->add_option("--seed", o.seed, "Random seed")->required();
    fuzz->add_option("--max-a", o.max_a, "Maximum points per side")->check(CLI::Range(1, 32));
    fuzz->add_option("--max-n", o.max_n, "Maximum depth")->check(CLI::Range(2, 16));
    fuzz->add_option("--universe", o.universe, "Points are drawn below this bound")->check(CLI::Range(2, 4096));
    fuzz->add_option("--property", o.property, "Property to check")->check(CLI::IsMember(verify::property_names()));
    fuzz->add_option("--mutation", o.mutation, "Corrupt traces to exercise one claim checker");

    auto* simulate = app.add_subcommand("simulate", "Build a chain of extensions and its limit structure");
    simulate->add_option("--points", o.points, "Number of points")->required()->check(CLI::Range(1, 4096));
    simulate->add_option("--depth", o.depth, "Target depth")->required()->check(CLI::Range(1, 64));
    simulate->add_option("--seed", o.seed, "Random seed")->required();
    simulate->add_option("--budget", o.budget, "Maximum number of extension steps");
    simulate->add_flag("--no-extra-tasks", o.no_extra, "Only add points and deepen");
    simulate->add_option("--out", o.out_file, "Write the limit structure here");

    auto* irreducible = app.add_subcommand("irreducible", "Search a finite space for an irreducible base");
    irreducible->add_option("file", o.files, "Space document")->required()->expected(1);

    std::vector<const char*> argv{"amalgam"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Runner runner(o, out);
    try {
        if (*validate) {
            return runner.validate();
        }
        if (*leq) {
            return runner.leq();
        }
        if (*twins) {
            return runner.twins();
        }
        if (*amalg) {
            return runner.amalgamate_cmd();
        }
        if (*fuzz) {
            return runner.fuzz();
        }
        if (*simulate) {
            return runner.simulate();
        }
        return runner.irreducible();
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const WellDefinednessError& e) {
        // The construction itself broke down: a negative verdict, not an input problem.
        err << "amalgamation failed: " << e.what() << '\n';
        return kNegative;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace amalgam::cli
