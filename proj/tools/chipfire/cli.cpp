#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <future>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "chipfire/edge_list.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/random_graphs.hpp"
#include "chipfire/sandpile.hpp"
#include "chipfire/theorems.hpp"

namespace chipfire::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string format = "json";
    std::optional<std::size_t> cone;
    std::optional<std::size_t> remove_vertex;
    std::uint64_t seed = 1;
};

/// One command's output: emitted as a single JSON line or as a table.
struct OutputRecord {
    std::string command;
    std::string input_summary;
    Json result = Json::object();
};

/// Outcome of processing one input; the record is emitted only on success.
struct Outcome {
    int code = kSuccess;
    std::optional<OutputRecord> record;
    std::string diagnostic;
};

Json integer_json(const BigInt& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json factors_json(const CriticalGroup& g) {
    Json arr = Json::array();
    for (const BigInt& d : g.invariant_factors()) arr.push_back(integer_json(d));
    return arr;
}

void add_group(Json& result, const std::string& prefix, const CriticalGroup& g) {
    result[prefix + "invariant_factors"] = factors_json(g);
    result[prefix + "order"] = g.order().get_str();
}

std::string render_value(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + render_value(v[i]);
        return out + "]";
    }
    return v.dump();
}

void emit(std::ostream& out, const OutputRecord& rec, const Options& opts) {
    if (opts.format == "json") {
        Json doc;
        doc["command"] = rec.command;
        doc["input_summary"] = rec.input_summary;
        doc["result"] = rec.result;
        out << doc.dump() << '\n';
        return;
    }
    std::size_t width = std::string("command").size();
    for (const auto& [key, _] : rec.result.items()) width = std::max(width, key.size());
    out << std::left << std::setw(static_cast<int>(width)) << "command" << "  " << rec.command << '\n';
    out << std::setw(static_cast<int>(width)) << "input" << "  " << rec.input_summary << '\n';
    for (const auto& [key, value] : rec.result.items())
        out << std::setw(static_cast<int>(width)) << key << "  " << render_value(value) << '\n';
    out << '\n';
}

/// Reads a file and applies --cone. Parse errors surface as InputError.
Graph load(const std::string& file, const Options& opts) {
    Graph g = read_edge_list(file);
    if (opts.cone) g = cone(g, *opts.cone);
    return g;
}

std::string describe(const std::string& file, const Options& opts) {
    return opts.cone ? "cone(" + file + ", " + std::to_string(*opts.cone) + ")" : file;
}

/// --remove-vertex must name a vertex of the graph being reduced.
Graph validated(Graph g, const Options& opts) {
    if (opts.remove_vertex && *opts.remove_vertex >= g.vertex_count())
        throw InputError("--remove-vertex " + std::to_string(*opts.remove_vertex) + " is out of range for " +
                         std::to_string(g.vertex_count()) + " vertices");
    return g;
}

Json group_payload(const Graph& g, const Options& opts) {
    const Vertex remove = opts.remove_vertex.value_or(0);
    if (!is_connected(g)) throw NotConnectedError("graph is not connected");
    Json r;
    r["vertices"] = g.vertex_count();
    r["edges"] = g.edge_count();
    r["removed_vertex"] = remove;
    add_group(r, "", critical_group(g, remove));
    r["spanning_trees"] = spanning_tree_count(g).get_str();
    const IntPoly p = char_poly_restricted(g);
    r["char_poly"] = p.to_string();
    Json coeffs = Json::array();
    for (const BigInt& c : p.coefficients()) coeffs.push_back(c.get_str());
    r["char_poly_coefficients"] = coeffs;
    return r;
}

/// Runs `body`, mapping library exceptions to exit codes. Errors raised
/// while loading inputs are input errors; errors raised by the computation
/// itself are precondition errors.
template <typename Load, typename Body>
Outcome guarded(Load&& load_inputs, Body&& body) {
    Outcome o;
    try {
        auto inputs = load_inputs();
        try {
            o.record = body(inputs);
        } catch (const InputError& e) {
            o.code = kPreconditionError;
            o.diagnostic = e.what();
        } catch (const NotConnectedError& e) {
            o.code = kPreconditionError;
            o.diagnostic = e.what();
        } catch (const SizeError& e) {
            o.code = kPreconditionError;
            o.diagnostic = e.what();
        }
    } catch (const InputError& e) {
        o.code = kInputError;
        o.diagnostic = e.what();
    }
    return o;
}

Outcome cmd_group(const std::string& file, const Options& opts, const std::string& command,
                  const std::string& summary) {
    return guarded([&] { return validated(load(file, opts), opts); },
                   [&](const Graph& g) {
                       Json payload = group_payload(g, opts);
                       return OutputRecord{command, summary, std::move(payload)};
                   });
}

Outcome cmd_join(const std::vector<std::string>& files, const Options& opts) {
    std::string summary = "join(";
    for (std::size_t i = 0; i < files.size(); ++i) summary += (i ? ", " : "") + describe(files[i], opts);
    summary += ")";
    return guarded(
        [&] {
            Graph joined = load(files.front(), opts);
            for (std::size_t i = 1; i < files.size(); ++i) joined = join(joined, load(files[i], opts));
            return validated(std::move(joined), opts);
        },
        [&](const Graph& joined) {
            Json payload = group_payload(joined, opts);
            return OutputRecord{"join", summary, std::move(payload)};
        });
}

Json cone_report_json(const ConeSequenceReport& r) {
    Json j;
    j["base_vertices"] = r.base_vertices;
    j["cone_size"] = r.cone_size;
    add_group(j, "pic0_", r.pic0);
    add_group(j, "subgroup_", r.subgroup);
    add_group(j, "quotient_h_", r.quotient_h);
    j["p_at_minus_n"] = r.p_at_minus_n.get_str();
    j["order_formula_holds"] = r.order_formula_holds;
    j["subgroup_is_expected"] = r.subgroup_is_expected;
    j["splits"] = r.splits;
    j["h_generator_count"] = r.h_generator_count;
    j["holds"] = r.holds();
    return j;
}

Outcome verify_one(const std::string& file, std::size_t n, const std::string& which, const Options& opts) {
    return guarded([&] { return load(file, opts); },
                   [&](const Graph& g) {
                       OutputRecord rec{"verify " + which, describe(file, opts) + ", n=" + std::to_string(n), {}};
                       if (which == "cone") {
                           rec.result = cone_report_json(verify_cone_theorem(g, n));
                       } else if (which == "tree") {
                           const auto r = verify_tree_bound(g, n);
                           rec.result["leaf_count"] = r.leaf_count;
                           rec.result["h_generators"] = r.h_generators;
                           rec.result["holds"] = r.holds;
                       } else {
                           rec.result["holds"] = verify_eigenvectors(g, n);
                       }
                       return rec;
                   });
}

Outcome verify_join(const std::vector<std::string>& files, const Options& opts) {
    std::string summary;
    for (std::size_t i = 0; i < files.size(); ++i) summary += (i ? ", " : "") + describe(files[i], opts);
    return guarded(
        [&] {
            std::vector<Graph> gs;
            for (const auto& f : files) gs.push_back(load(f, opts));
            return gs;
        },
        [&](const std::vector<Graph>& gs) {
            const auto r = verify_join_theorem(gs);
            OutputRecord rec{"verify join", summary, {}};
            Json counts = Json::array();
            for (std::size_t c : r.factor_vertex_counts) counts.push_back(c);
            rec.result["factor_vertex_counts"] = counts;
            rec.result["total_vertices"] = r.total_vertices;
            rec.result["lhs"] = r.lhs.get_str();
            rec.result["rhs"] = r.rhs.get_str();
            rec.result["holds"] = r.holds;
            return rec;
        });
}

Outcome run_sample(std::size_t count, std::size_t max_vertices, std::size_t n, const Options& opts) {
    Outcome o;
    Rng rng(opts.seed);
    std::uniform_int_distribution<std::size_t> size(1, max_vertices);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    std::size_t holding = 0;
    std::size_t splitting = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const Graph g = random_connected_graph(size(rng), density(rng), rng);
        const auto r = verify_cone_theorem(g, n);
        holding += r.holds() ? 1 : 0;
        splitting += r.splits ? 1 : 0;
    }
    OutputRecord rec{"sample", "seed=" + std::to_string(opts.seed), {}};
    rec.result["instances"] = count;
    rec.result["max_vertices"] = max_vertices;
    rec.result["cone_size"] = n;
    rec.result["holding"] = holding;
    rec.result["splitting"] = splitting;
    rec.result["holds"] = holding == count;
    o.record = std::move(rec);
    return o;
}

bool record_holds(const OutputRecord& rec) {
    const auto it = rec.result.find("holds");
    return it == rec.result.end() || it->get<bool>();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Chip-firing groups of graphs, joins, and iterated cones"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--cone", opts.cone, "Replace every input graph by its N-th cone")
        ->check(CLI::PositiveNumber);
    app.add_option("--remove-vertex", opts.remove_vertex, "Vertex deleted from the Laplacian (group commands)");
    app.add_option("--seed", opts.seed, "Seed for sample-based verification");

    std::string file;
    std::vector<std::string> files;
    std::size_t n = 1;
    std::string which;
    std::size_t count = 50;
    std::size_t max_vertices = 7;

    auto* group = app.add_subcommand("group", "Critical group of a graph");
    group->add_option("file", file, "Edge-list file")->required();

    auto* cone_cmd = app.add_subcommand("cone", "Critical group of the N-th cone over a graph");
    cone_cmd->add_option("file", file, "Edge-list file")->required();
    cone_cmd->add_option("n", n, "Cone size")->required()->check(CLI::PositiveNumber);

    auto* join_cmd = app.add_subcommand("join", "Critical group of the join of graphs");
    join_cmd->add_option("files", files, "Edge-list files")->required()->expected(2, std::numeric_limits<int>::max());

    auto* verify = app.add_subcommand("verify", "Check a structural theorem on inputs");
    verify->add_option("--which", which, "Theorem to check")
        ->required()
        ->check(CLI::IsMember({"cone", "tree", "join", "eigen"}));
    verify->add_option("-n", n, "Cone size")->check(CLI::PositiveNumber);
    verify->add_option("files", files, "Edge-list files")->required();

    auto* sample = app.add_subcommand("sample", "Check the cone theorem on random connected graphs");
    sample->add_option("--count", count, "Number of random graphs")->check(CLI::PositiveNumber);
    sample->add_option("--max-vertices", max_vertices, "Largest base graph")->check(CLI::Range(1, 12));
    sample->add_option("-n", n, "Cone size")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    std::vector<Outcome> outcomes;
    if (*group) {
        outcomes.push_back(cmd_group(file, opts, "group", describe(file, opts)));
    } else if (*cone_cmd) {
        Options coned = opts;
        coned.cone = opts.cone.value_or(0) + n;
        outcomes.push_back(cmd_group(file, coned, "cone", describe(file, opts) + ", n=" + std::to_string(n)));
    } else if (*join_cmd) {
        outcomes.push_back(cmd_join(files, opts));
    } else if (*verify) {
        if (which == "join") {
            if (files.size() < 2) {
                err << "error: verify --which join needs at least two files\n";
                return kInputError;
            }
            outcomes.push_back(verify_join(files, opts));
        } else {
            // Files are independent; buffer per file and emit in input order.
            std::vector<std::future<Outcome>> pending;
            for (const auto& f : files)
                pending.push_back(std::async(std::launch::async, [&, f] { return verify_one(f, n, which, opts); }));
            for (auto& p : pending) outcomes.push_back(p.get());
        }
    } else if (*sample) {
        outcomes.push_back(run_sample(count, max_vertices, n, opts));
    }

    int code = kSuccess;
    for (const auto& o : outcomes) {
        if (o.record) {
            emit(out, *o.record, opts);
            if (!record_holds(*o.record)) code = std::max(code, int{kVerificationFailed});
        } else {
            err << "error: " << o.diagnostic << '\n';
            code = std::max(code, o.code);
        }
    }
    return code;
}

}  // namespace chipfire::cli
