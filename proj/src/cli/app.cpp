#include "bdim/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bdim::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string file;
    std::string family;
    std::string params;
};

struct Loaded {
    Graph graph;
    std::string descriptor;
};

Loaded load(const GraphSource& src)
{
    if (!src.family.empty()) {
        auto spec = FamilySpec::parse(src.family, src.params);
        return {generate(spec), spec.describe()};
    }
    if (src.file.empty())
        throw CLI::ValidationError("graph", "give a graph file or --family");
    try {
        return {read_graph_file(src.file), src.file};
    } catch (const ParseError& e) {
        throw InputError(src.file + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
}

int default_threads()
{
    if (const char* env = std::getenv("BDIM_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1)
            return t;
    }
    return 1;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw InputError("cannot write '" + path + "'");
    file << text;
}

double elapsed_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Metric, adjacency, distance-k and broadcast dimension of graphs"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);
    app.fallthrough();

    std::string output;
    std::string format = "json";
    int threads = default_threads();
    app.add_option("-o,--output", output, "Write to this file instead of stdout");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--threads", threads, "Solver worker threads (env BDIM_THREADS)")->check(CLI::PositiveNumber);

    GraphSource source;
    bool with_bounds = false;
    int k = 1;
    auto add_graph_source = [&](CLI::App* sub) {
        sub->add_option("graph", source.file, "Graph file (edge list or JSON)");
        sub->add_option("--family", source.family, "Generate the graph from a named family instead");
        sub->add_option("--params", source.params, "Family parameters, e.g. n=6 or parts=1,2,2");
    };

    std::vector<CLI::App*> solvers;
    for (const char* name : {"dim", "adim", "dimk", "bdim"}) {
        auto* sub = app.add_subcommand(name, std::string("Compute ") + name + " with a witness");
        add_graph_source(sub);
        sub->add_flag("--bounds", with_bounds, "Also compute every parameter and attach the bound report");
        if (std::string_view(name) == "dimk")
            sub->add_option("-k", k, "Truncation parameter")->required()->check(CLI::PositiveNumber);
        solvers.push_back(sub);
    }
    auto* enum_cmd = app.add_subcommand("enum-min", "List every minimum resolving broadcast");
    add_graph_source(enum_cmd);

    std::string param = "bdim";
    auto* formula_cmd = app.add_subcommand("formula", "Catalog value without solving");
    formula_cmd->add_option("--param", param)->check(CLI::IsMember({"dim", "adim", "bdim"}));
    formula_cmd->add_option("--family", source.family)->required();
    formula_cmd->add_option("--params", source.params);

    std::string graph_format = "edgelist";
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
    gen_cmd->add_option("--family", source.family)->required();
    gen_cmd->add_option("--params", source.params);
    gen_cmd->add_option("--graph-format", graph_format)->check(CLI::IsMember({"edgelist", "json"}));

    std::string suite = "all";
    VerifyOptions vopts;
    auto* verify_cmd = app.add_subcommand("verify", "Run the theorem verification suites");
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(verify_suites()));
    verify_cmd->add_option("--max-order", vopts.max_order)->check(CLI::Range(1, 6));
    verify_cmd->add_option("--seed", vopts.seed);
    verify_cmd->add_option("--samples", vopts.samples)->check(CLI::NonNegativeNumber);

    auto* bench_cmd = app.add_subcommand("bench", "Timing table over the generator families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        const bool json_out = format == "json";
        for (std::size_t i = 0; i < solvers.size(); ++i) {
            if (!*solvers[i])
                continue;
            const auto loaded = load(source);
            const auto start = std::chrono::steady_clock::now();
            const SolverOptions so{threads};
            SolverResult r;
            switch (i) {
            case 0: r = solve_dim(loaded.graph, so); break;
            case 1: r = solve_adim(loaded.graph, so); break;
            case 2: r = solve_dim_k(loaded.graph, k, so); break;
            default: r = solve_bdim(loaded.graph, so); break;
            }
            Report report = make_report(loaded.graph, loaded.descriptor, r, elapsed_since(start));
            if (with_bounds) {
                ComputedValues v{solve_dim(loaded.graph, so).value, solve_adim(loaded.graph, so).value,
                                 solve_bdim(loaded.graph, so).value};
                report.bounds = bound_report(loaded.graph, v);
            }
            emit(json_out ? serialize(report) : render_text(report), output, out);
            return exit_ok;
        }
        if (*enum_cmd) {
            const auto loaded = load(source);
            const auto start = std::chrono::steady_clock::now();
            const auto e = enumerate_min_broadcasts(loaded.graph);
            Report report = make_enumeration_report(loaded.graph, loaded.descriptor, e, elapsed_since(start));
            emit(json_out ? serialize(report) : render_text(report), output, out);
            return exit_ok;
        }
        if (*formula_cmd) {
            const auto spec = FamilySpec::parse(source.family, source.params);
            const auto f = closed_form({parse_parameter(param), spec});
            std::string text;
            if (json_out) {
                nlohmann::json doc;
                doc["schema"] = report_schema;
                doc["family"] = spec.describe();
                doc["parameter"] = param;
                doc["value"] = f.value ? nlohmann::json(*f.value) : nlohmann::json(nullptr);
                doc["citation"] = f.citation;
                doc["reason"] = f.reason;
                text = doc.dump(2) + "\n";
            } else {
                text = f ? std::to_string(*f.value) + "\n" : "not applicable: " + f.reason + "\n";
            }
            emit(text, output, out);
            return exit_ok;
        }
        if (*gen_cmd) {
            const Graph g = generate(FamilySpec::parse(source.family, source.params));
            emit(graph_format == "json" ? write_graph_json(g) : write_edge_list(g), output, out);
            return exit_ok;
        }
        if (*verify_cmd) {
            vopts.threads = threads;
            const auto results = run_verify(suite, vopts);
            bool ok = true;
            std::ostringstream text;
            nlohmann::json doc = nlohmann::json::array();
            for (const auto& s : results) {
                ok = ok && s.passed();
                text << (s.passed() ? "PASS " : "FAIL ") << s.suite << " (" << s.checks << " checks, "
                     << s.failures.size() << " failures)\n";
                nlohmann::json failures = nlohmann::json::array();
                for (const auto& f : s.failures) {
                    text << "  " << f.check << ": " << f.message << " [seed " << f.seed << "]\n" << f.graph;
                    failures.push_back({{"check", f.check}, {"message", f.message}, {"graph", f.graph}, {"seed", f.seed}});
                }
                doc.push_back({{"suite", s.suite}, {"checks", s.checks}, {"passed", s.passed()}, {"failures", failures}});
            }
            emit(json_out ? doc.dump(2) + "\n" : text.str(), output, out);
            return ok ? exit_ok : exit_verification;
        }
        if (*bench_cmd) {
            const auto rows = run_bench(threads);
            std::ostringstream text;
            nlohmann::json doc = nlohmann::json::array();
            text << std::left << std::setw(40) << "family" << std::setw(6) << "param" << std::right << std::setw(6)
                 << "n" << std::setw(7) << "value" << std::setw(12) << "ms" << std::setw(14) << "candidates" << "\n";
            for (const auto& r : rows) {
                text << std::left << std::setw(40) << r.family << std::setw(6) << r.parameter << std::right
                     << std::setw(6) << r.order << std::setw(7) << r.value << std::setw(12) << std::fixed
                     << std::setprecision(2) << r.elapsed_ms << std::setw(14) << r.candidates << "\n";
                doc.push_back({{"family", r.family},
                               {"parameter", r.parameter},
                               {"order", r.order},
                               {"value", r.value},
                               {"elapsed_ms", r.elapsed_ms},
                               {"candidates", r.candidates}});
            }
            emit(json_out ? doc.dump(2) + "\n" : text.str(), output, out);
            return exit_ok;
        }
    } catch (const UnknownFamily& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvalidParameters& e) {
        err << "error: " << e.what() << "\n";
        return exit_parameters;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_parameters;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_usage;
}

} // namespace bdim::cli
