#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apexhom/bignat.hpp"
#include "apexhom/bipartite.hpp"
#include "apexhom/drc.hpp"
#include "apexhom/errors.hpp"
#include "apexhom/graph.hpp"
#include "apexhom/hom.hpp"
#include "apexhom/hypergraph.hpp"
#include "apexhom/io.hpp"
#include "apexhom/lemmas.hpp"
#include "apexhom/random_graph.hpp"
#include "apexhom/rational.hpp"
#include "apexhom/report.hpp"
#include "apexhom/sidorenko.hpp"
#include "apexhom/version.hpp"

namespace {

using apexhom::BigNat;
using apexhom::ExactRational;
using apexhom::Graph;
using apexhom::HomGuard;
using nlohmann::json;

struct Options {
    std::string command;
    std::string h_graph6;
    std::string g_graph6;
    std::string h_file;
    std::string g_file;
    std::string random_spec;
    std::string out_path;
    std::string format = "json";
    int n = 0;
    int k = 0;
    int r = 1;
    int max_vertices = 4;
    std::uint64_t seed = 1;
    std::uint64_t guard_evals = HomGuard::default_max_map_evals;
    bool strict = false;
    bool no_timestamp = false;
};

struct NamedGraph {
    std::string id;
    Graph graph;
};

std::string graph_id(const Graph& g, const std::string& source, std::size_t index) {
    if (g.vertex_count() <= 62)
        return apexhom::emit_graph6(g);
    return source + "#" + std::to_string(index);
}

// A file holds either newline-separated graph6 strings or a single
// edge-list graph. Valid graph6 bytes never include digits, so a first
// meaningful line starting with a digit settles the format.
std::vector<NamedGraph> load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw apexhom::io_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();

    bool edge_list = false;
    std::istringstream scan(content);
    std::string line;
    while (std::getline(scan, line)) {
        std::size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos || line[at] == '#')
            continue;
        edge_list = std::isdigit(static_cast<unsigned char>(line[at])) != 0;
        break;
    }

    std::vector<NamedGraph> out;
    std::istringstream parse_in(content);
    if (edge_list) {
        Graph g = apexhom::parse_edge_list(parse_in);
        out.push_back({graph_id(g, path, 0), std::move(g)});
    } else {
        auto graphs = apexhom::parse_graph6_stream(parse_in);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            out.push_back({graph_id(graphs[i], path, i), std::move(graphs[i])});
    }
    return out;
}

// "N,P_NUM/P_DEN,COUNT"; sample i uses seed + i
std::vector<NamedGraph> sample_random_graphs(const std::string& spec, std::uint64_t seed) {
    const std::size_t comma1 = spec.find(',');
    const std::size_t comma2 = spec.find(',', comma1 == std::string::npos ? 0 : comma1 + 1);
    const std::size_t slash = spec.find('/');
    if (comma1 == std::string::npos || comma2 == std::string::npos ||
        slash == std::string::npos || slash < comma1 || slash > comma2)
        throw apexhom::invalid_argument_error("random spec must be N,P_NUM/P_DEN,COUNT: " +
                                              spec);
    int n = 0;
    unsigned long long num = 0, den = 0, count = 0;
    try {
        n = std::stoi(spec.substr(0, comma1));
        num = std::stoull(spec.substr(comma1 + 1, slash - comma1 - 1));
        den = std::stoull(spec.substr(slash + 1, comma2 - slash - 1));
        count = std::stoull(spec.substr(comma2 + 1));
    } catch (const std::exception&) {
        throw apexhom::invalid_argument_error("random spec must be N,P_NUM/P_DEN,COUNT: " +
                                              spec);
    }
    const ExactRational p{BigNat{num}, BigNat{den}};
    std::vector<NamedGraph> out;
    for (unsigned long long i = 0; i < count; ++i) {
        Graph g = apexhom::random_graph(n, p, seed + i);
        out.push_back({graph_id(g, "random", i), std::move(g)});
    }
    return out;
}

std::vector<NamedGraph> load_side(const std::string& graph6, const std::string& file,
                                  const std::string& random_spec, std::uint64_t seed,
                                  const char* side) {
    std::vector<NamedGraph> out;
    if (!graph6.empty()) {
        Graph g = apexhom::parse_graph6(graph6);
        out.push_back({graph_id(g, graph6, 0), std::move(g)});
    }
    if (!file.empty())
        for (auto& named : load_graph_file(file))
            out.push_back(std::move(named));
    if (!random_spec.empty())
        for (auto& named : sample_random_graphs(random_spec, seed))
            out.push_back(std::move(named));
    if (out.empty())
        throw apexhom::invalid_argument_error(std::string("no ") + side +
                                              " graphs given (flag, file, or random spec)");
    return out;
}

json rational_fields(const ExactRational& value, const char* prefix) {
    const ExactRational reduced = value.reduced();
    json out;
    out[std::string(prefix) + "_num"] = reduced.num().to_string();
    out[std::string(prefix) + "_den"] = reduced.den().to_string();
    out[std::string(prefix) + "_approx"] = value.approx();
    return out;
}

json config_echo(const Options& opt) {
    return json{{"command", opt.command},
                {"h_graph6", opt.h_graph6},
                {"h_file", opt.h_file},
                {"g_graph6", opt.g_graph6},
                {"g_file", opt.g_file},
                {"random", opt.random_spec},
                {"seed", opt.seed},
                {"n", opt.n},
                {"k", opt.k},
                {"r", opt.r},
                {"max_vertices", opt.max_vertices},
                {"guard", opt.guard_evals},
                {"format", opt.format},
                {"strict", opt.strict},
                {"no_timestamp", opt.no_timestamp}};
}

void write_report(const Options& opt, const apexhom::ReportEnvelope& env) {
    std::string text;
    if (opt.format == "csv")
        text = env.to_csv();
    else
        text = env.to_json(!opt.no_timestamp).dump(2) + "\n";
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
        throw apexhom::io_error("cannot write " + opt.out_path);
    out << text;
}

struct Run {
    Options& opt;
    HomGuard guard;
    apexhom::ReportEnvelope env;
    int violations = 0;
    bool stop = false;

    explicit Run(Options& options)
        : opt(options), guard{options.guard_evals}, env(config_echo(options)) {}

    void note_violation() {
        ++violations;
        if (opt.strict)
            stop = true;
    }

    int finish() {
        write_report(opt, env);
        return violations > 0 ? 4 : 0;
    }
};

template <typename Fn>
void for_pairs(Run& run, const std::vector<NamedGraph>& hs, const std::vector<NamedGraph>& gs,
               Fn&& body) {
    for (const auto& h : hs) {
        for (const auto& g : gs) {
            const std::string instance = "H=" + h.id + ";G=" + g.id;
            try {
                body(instance, h, g);
            } catch (const apexhom::resource_limit_error& e) {
                throw apexhom::resource_limit_error(instance + ": " + e.what());
            }
            if (run.stop)
                return;
        }
        if (run.stop)
            return;
    }
}

int cmd_hom(Options& opt, bool with_density) {
    Run run(opt);
    const auto hs = load_side(opt.h_graph6, opt.h_file, "", opt.seed, "H");
    const auto gs = load_side(opt.g_graph6, opt.g_file, opt.random_spec, opt.seed, "G");
    for_pairs(run, hs, gs, [&](const std::string& instance, const NamedGraph& h,
                               const NamedGraph& g) {
        json record;
        record["instance"] = instance;
        record["command"] = opt.command;
        record["h_vertices"] = h.graph.vertex_count();
        record["h_edges"] = h.graph.edge_count();
        record["g_vertices"] = g.graph.vertex_count();
        record["g_edges"] = g.graph.edge_count();
        if (with_density) {
            const auto result = apexhom::hom_density(h.graph, g.graph, run.guard);
            record["count"] = result.count.to_string();
            record.update(rational_fields(result.density(), "density"));
        } else {
            record["count"] = apexhom::count_homs(h.graph, g.graph, run.guard).to_string();
        }
        run.env.add_record(std::move(record));
    });
    return run.finish();
}

int cmd_check_sidorenko(Options& opt) {
    Run run(opt);
    const auto hs = load_side(opt.h_graph6, opt.h_file, "", opt.seed, "H");
    const auto gs = load_side(opt.g_graph6, opt.g_file, opt.random_spec, opt.seed, "G");
    for_pairs(run, hs, gs, [&](const std::string& instance, const NamedGraph& h,
                               const NamedGraph& g) {
        const auto verdict = apexhom::sidorenko_check(h.graph, g.graph, run.guard);
        json record;
        record["instance"] = instance;
        record["command"] = opt.command;
        record["holds"] = verdict.holds;
        record["apex_hypothesis"] = verdict.apex_hypothesis;
        record["hom_count"] = verdict.hom_count.to_string();
        record["lhs"] = verdict.lhs.to_string();
        record["rhs"] = verdict.rhs.to_string();
        if (verdict.slack_ratio)
            record.update(rational_fields(*verdict.slack_ratio, "slack"));
        // a failure outside the apex hypothesis class is no counterexample
        const bool violation = verdict.apex_hypothesis && !verdict.holds;
        record["violation"] = violation;
        run.env.add_record(std::move(record));
        if (violation)
            run.note_violation();
    });
    return run.finish();
}

int cmd_drc(Options& opt) {
    Run run(opt);
    if (opt.n < 1)
        throw apexhom::invalid_argument_error("drc requires --n >= 1");
    const auto gs = load_side(opt.g_graph6, opt.g_file, opt.random_spec, opt.seed, "G");
    for (const auto& g : gs) {
        const std::string instance = "G=" + g.id;
        apexhom::GoodstepReport report;
        try {
            report = apexhom::verify_goodstep(g.graph, opt.n);
        } catch (const apexhom::resource_limit_error& e) {
            throw apexhom::resource_limit_error(instance + ": " + e.what());
        }
        json record;
        record["instance"] = instance;
        record["command"] = opt.command;
        record["n"] = opt.n;
        record["holds"] = report.holds;
        record["good_degree_sum"] = report.good_degree_sum.to_string();
        record.update(rational_fields(report.bound, "bound"));
        bool xk_all = true;
        json xk_checks = json::array();
        for (const auto& check : report.xk_checks) {
            if (opt.k > 0 && static_cast<unsigned int>(opt.k) != check.k)
                continue;
            json entry;
            entry["k"] = check.k;
            entry["xk"] = check.xk.to_string();
            entry["upper"] = apexhom::rational_json(check.upper);
            entry["holds"] = check.holds;
            entry["bad_degree_sum"] = check.bad_degree_sum.to_string();
            entry["bad_degree_holds"] = check.bad_degree_holds;
            xk_checks.push_back(std::move(entry));
        }
        for (const auto& check : report.xk_checks)
            if (!check.holds || !check.bad_degree_holds)
                xk_all = false;
        record["xk_checks"] = std::move(xk_checks);
        record["xk_all_hold"] = xk_all;
        json vertices = json::array();
        for (const auto& audit : report.audits) {
            json entry;
            entry["vertex"] = audit.vertex;
            entry["degree"] = audit.degree;
            entry["good"] = audit.good;
            json per_k = json::array();
            for (const auto& ka : audit.per_k)
                per_k.push_back(json{{"k", ka.k},
                                     {"deficient", ka.deficient_count.to_string()},
                                     {"bad", ka.bad}});
            entry["per_k"] = std::move(per_k);
            vertices.push_back(std::move(entry));
        }
        record["vertices"] = std::move(vertices);
        const bool violation = !report.holds || !xk_all;
        record["violation"] = violation;
        run.env.add_record(std::move(record));
        if (violation)
            run.note_violation();
        if (run.stop)
            break;
    }
    return run.finish();
}

json lemma_report_json(const apexhom::LemmaReport& report) {
    json out;
    out["which"] = apexhom::lemma_id_name(report.which);
    out["hypothesis_satisfied"] = report.hypothesis_satisfied;
    out["conclusion_holds"] = report.conclusion_holds;
    out["lhs"] = report.lhs.to_string();
    out["rhs_num"] = report.rhs_num.to_string();
    out["rhs_den"] = report.rhs_den.to_string();
    out["details"] = report.details;
    return out;
}

apexhom::BipartiteApexGraph require_apex(const Graph& h) {
    auto apex = apexhom::find_apex_bipartition(h);
    if (!apex)
        throw apexhom::invalid_argument_error("H has no apex bipartition");
    return std::move(*apex);
}

int cmd_embed_verify(Options& opt) {
    Run run(opt);
    const auto hs = load_side(opt.h_graph6, opt.h_file, "", opt.seed, "H");
    const auto gs = load_side(opt.g_graph6, opt.g_file, opt.random_spec, opt.seed, "G");
    for_pairs(run, hs, gs, [&](const std::string& instance, const NamedGraph& h,
                               const NamedGraph& g) {
        const auto apex = require_apex(h.graph);
        const auto report = apexhom::verify_importantstep(apex, g.graph, run.guard);
        json record = lemma_report_json(report);
        record["instance"] = instance;
        record["command"] = opt.command;
        record["holds"] = report.conclusion_holds;
        json anchors = json::array();
        bool sub_violation = false;
        for (const auto& sub : report.sub_reports) {
            anchors.push_back(lemma_report_json(sub));
            if (sub.violation())
                sub_violation = true;
        }
        record["anchors"] = std::move(anchors);
        const bool violation = report.violation() || sub_violation;
        record["violation"] = violation;
        run.env.add_record(std::move(record));
        if (violation)
            run.note_violation();
    });
    return run.finish();
}

int cmd_tensor(Options& opt) {
    Run run(opt);
    if (opt.r < 1)
        throw apexhom::invalid_argument_error("tensor requires --r >= 1");
    const auto hs = load_side(opt.h_graph6, opt.h_file, "", opt.seed, "H");
    const auto gs = load_side(opt.g_graph6, opt.g_file, opt.random_spec, opt.seed, "G");
    for_pairs(run, hs, gs, [&](const std::string& instance, const NamedGraph& h,
                               const NamedGraph& g) {
        const auto apex = require_apex(h.graph);
        const auto report = apexhom::verify_main_theorem(
            apex, g.graph, static_cast<unsigned int>(opt.r), run.guard);
        json record = lemma_report_json(report);
        record["instance"] = instance;
        record["command"] = opt.command;
        record["r"] = opt.r;
        record["holds"] = report.conclusion_holds;
        record["violation"] = report.violation();
        run.env.add_record(std::move(record));
        if (report.violation())
            run.note_violation();
    });
    return run.finish();
}

int cmd_search(Options& opt) {
    Run run(opt);
    const auto hs = apexhom::enumerate_apex_bipartite(opt.max_vertices);
    const auto gs = load_side(opt.g_graph6, opt.g_file, opt.random_spec, opt.seed, "G");
    for (const auto& h : hs) {
        const std::string hid = apexhom::emit_graph6(h.as_graph());
        std::optional<ExactRational> min_slack;
        std::string min_instance;
        int h_violations = 0;
        for (const auto& g : gs) {
            const std::string instance = "H=" + hid + ";G=" + g.id;
            try {
                const auto verdict = apexhom::sidorenko_check(h, g.graph, run.guard);
                if (verdict.slack_ratio &&
                    (!min_slack || *verdict.slack_ratio < *min_slack)) {
                    min_slack = *verdict.slack_ratio;
                    min_instance = instance;
                }
                const auto istep = apexhom::verify_importantstep(h, g.graph, run.guard);
                bool sub_violation = false;
                for (const auto& sub : istep.sub_reports)
                    if (sub.violation())
                        sub_violation = true;
                const bool sidorenko_violation = !verdict.holds;
                const bool istep_violation = istep.violation() || sub_violation;
                if (sidorenko_violation || istep_violation) {
                    json record;
                    record["instance"] = instance;
                    record["command"] = opt.command;
                    record["violation"] = true;
                    record["kind"] = sidorenko_violation ? "sidorenko" : "importantstep";
                    record["hom_count"] = verdict.hom_count.to_string();
                    record["lhs"] = verdict.lhs.to_string();
                    record["rhs"] = verdict.rhs.to_string();
                    run.env.add_record(std::move(record));
                    ++h_violations;
                    run.note_violation();
                }
            } catch (const apexhom::resource_limit_error& e) {
                throw apexhom::resource_limit_error(instance + ": " + e.what());
            }
            if (run.stop)
                break;
        }
        json record;
        record["instance"] = "H=" + hid;
        record["command"] = opt.command;
        record["h_vertices"] = h.n();
        record["h_edges"] = h.m();
        record["pairs"] = gs.size();
        record["violations"] = h_violations;
        if (min_slack) {
            record.update(rational_fields(*min_slack, "min_slack"));
            record["min_slack_instance"] = min_instance;
        }
        run.env.add_record(std::move(record));
        if (run.stop)
            break;
    }
    return run.finish();
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    if (const char* env_guard = std::getenv("TOOL_GUARD_EVALS")) {
        try {
            opt.guard_evals = std::stoull(env_guard);
        } catch (const std::exception&) {
            std::cerr << "error: TOOL_GUARD_EVALS is not a number: " << env_guard << "\n";
            return 1;
        }
    }

    CLI::App app{"Exact homomorphism counting and inequality verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", apexhom::toolkit_version);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--h-graph6", opt.h_graph6, "pattern graph H as a graph6 string");
        sub->add_option("--g-graph6", opt.g_graph6, "host graph G as a graph6 string");
        sub->add_option("--h-file", opt.h_file, "H file: graph6 stream or edge list");
        sub->add_option("--g-file", opt.g_file, "G file: graph6 stream or edge list");
        sub->add_option("--n", opt.n, "audit level n");
        sub->add_option("--k", opt.k, "restrict X_k listing to one tuple length");
        sub->add_option("--r", opt.r, "tensor power")->capture_default_str();
        sub->add_option("--max-vertices", opt.max_vertices, "apex enumeration bound")
            ->capture_default_str();
        sub->add_option("--random", opt.random_spec, "random hosts: N,P_NUM/P_DEN,COUNT");
        sub->add_option("--seed", opt.seed, "base seed for --random")->capture_default_str();
        sub->add_option("--out", opt.out_path, "report path (default stdout)");
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_flag("--strict", opt.strict, "exit on first violation");
        sub->add_flag("--no-timestamp", opt.no_timestamp, "omit timestamp from report");
        sub->add_option("--guard", opt.guard_evals, "map evaluation guard")
            ->capture_default_str();
    };

    for (const char* name : {"hom", "density", "check-sidorenko", "drc", "embed-verify",
                             "tensor", "search"})
        add_common(app.add_subcommand(name, ""));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    opt.command = app.get_subcommands().front()->get_name();

    try {
        if (opt.command == "hom")
            return cmd_hom(opt, false);
        if (opt.command == "density")
            return cmd_hom(opt, true);
        if (opt.command == "check-sidorenko")
            return cmd_check_sidorenko(opt);
        if (opt.command == "drc")
            return cmd_drc(opt);
        if (opt.command == "embed-verify")
            return cmd_embed_verify(opt);
        if (opt.command == "tensor")
            return cmd_tensor(opt);
        if (opt.command == "search")
            return cmd_search(opt);
        std::cerr << "error: unknown command " << opt.command << "\n";
        return 1;
    } catch (const apexhom::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const apexhom::resource_limit_error& e) {
        std::cerr << "guard refusal: " << e.what() << "\n";
        return 3;
    } catch (const apexhom::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
