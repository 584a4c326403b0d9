// wceg: weighted coloured-edge graph toolkit.
//
// Subcommands: solve, oracle, generate, bench, sensitivity, assemble.
// Exit codes: 0 success, 1 no path, 2 usage error, 3 resource ceiling refused.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wceg/analysis.hpp"
#include "wceg/augment.hpp"
#include "wceg/generator.hpp"
#include "wceg/graph_io.hpp"
#include "wceg/ingest.hpp"
#include "wceg/oracle.hpp"
#include "wceg/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoPath = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct ResultRow {
    wceg::VertexId dest;
    wceg::WeightVector weight;
    std::vector<wceg::EdgeId> edges;
};

// Stable output order: destination, then lexicographic weight vector, then
// the edge sequence (co-weighted paths under --keep-ties).
void sort_rows(std::vector<ResultRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        if (a.dest != b.dest) return a.dest < b.dest;
        if (!(a.weight == b.weight))
            return wceg::lex_less(a.weight.components(), b.weight.components());
        return a.edges < b.edges;
    });
}

std::string weight_field(const wceg::WeightVector& w, int scale, char sep) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += sep;
        out += wceg::format_decimal(w[i], scale);
    }
    return out;
}

std::string edges_field(const std::vector<wceg::EdgeId>& edges) {
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(edges[i]);
    }
    return out;
}

std::string stats_line(const wceg::SolveStats& s, bool timings) {
    std::ostringstream os;
    os << "stats processed=" << s.processed << " relaxations=" << s.relaxations
       << " evictions=" << s.evictions << " peak_queue=" << s.peak_queue;
    if (timings) os << " ms=" << static_cast<long long>(s.ms + 0.5);
    return os.str();
}

void print_rows(std::ostream& out, const std::vector<ResultRow>& rows,
                const std::vector<std::string>& colours, int scale, const std::string& format,
                const wceg::SolveStats* stats, bool timings) {
    if (format == "text") {
        for (const ResultRow& row : rows)
            out << "pareto " << row.dest << " " << weight_field(row.weight, scale, ' ')
                << (row.edges.empty() ? "" : " " + edges_field(row.edges)) << "\n";
        if (stats) out << stats_line(*stats, timings) << "\n";
    } else if (format == "csv") {
        out << "dest";
        for (const std::string& name : colours) out << "," << name;
        out << ",edges\n";
        for (const ResultRow& row : rows)
            out << row.dest << "," << weight_field(row.weight, scale, ',') << ","
                << edges_field(row.edges) << "\n";
    } else {  // json
        nlohmann::json j;
        j["results"] = nlohmann::json::array();
        nlohmann::json* bucket = nullptr;
        wceg::VertexId bucket_dest = -1;
        for (const ResultRow& row : rows) {
            if (!bucket || bucket_dest != row.dest) {
                j["results"].push_back({{"dest", row.dest}, {"pareto", nlohmann::json::array()}});
                bucket = &j["results"].back();
                bucket_dest = row.dest;
            }
            nlohmann::json weights = nlohmann::json::array();
            for (std::size_t i = 0; i < row.weight.size(); ++i)
                weights.push_back(wceg::format_decimal(row.weight[i], scale));
            (*bucket)["pareto"].push_back({{"weight", weights}, {"edges", row.edges}});
        }
        if (stats) {
            j["stats"] = {{"processed", stats->processed},
                          {"relaxations", stats->relaxations},
                          {"evictions", stats->evictions},
                          {"peak_queue", stats->peak_queue}};
            if (timings) j["stats"]["ms"] = static_cast<long long>(stats->ms + 0.5);
        }
        out << j.dump(2) << "\n";
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run_solve(const std::string& graph_path, int source, std::optional<int> target,
              bool keep_ties, const std::string& augment, const std::string& format,
              bool timings, std::size_t max_labels, std::int64_t budget_ms) {
    wceg::ColouredGraph g = wceg::load_graph_file(graph_path);
    wceg::SolveOptions opts;
    opts.keep_ties = keep_ties;
    opts.max_labels = max_labels;
    opts.time_budget_ms = budget_ms;
    if (target) opts.target = static_cast<wceg::VertexId>(*target);

    std::vector<ResultRow> rows;
    std::vector<std::string> colours;
    int scale = g.scale();
    wceg::SolveStats stats;

    if (augment.empty()) {
        wceg::SolveResult res = wceg::solve(g, static_cast<wceg::VertexId>(source), opts);
        stats = res.stats();
        colours = g.colour_names();
        for (wceg::VertexId v = 0; v < g.vertex_count(); ++v) {
            if (target && v != *target) continue;
            for (wceg::LabelId id : res.pareto(v))
                rows.push_back({v, res.weight(id), res.reconstruct(id)});
        }
    } else {
        wceg::AugmentMode mode =
            augment == "hops" ? wceg::AugmentMode::Hops : wceg::AugmentMode::Transfers;
        wceg::AugmentedSolve res =
            wceg::solve_augmented(g, mode, static_cast<wceg::VertexId>(source), opts);
        stats = res.stats;
        colours = res.colour_names;
        for (wceg::VertexId v = 0; v < g.vertex_count(); ++v) {
            if (target && v != *target) continue;
            for (const wceg::PathEntry& e : res.sets[static_cast<std::size_t>(v)])
                rows.push_back({v, e.weight, e.edges});
        }
    }
    sort_rows(rows);
    print_rows(std::cout, rows, colours, scale, format, &stats, timings);
    if (target && rows.empty()) return kExitNoPath;
    return kExitOk;
}

int run_oracle(const std::string& graph_path, int source, int target, bool keep_ties,
               std::uint64_t max_paths, const std::string& format) {
    wceg::ColouredGraph g = wceg::load_graph_file(graph_path);
    // stream the enumeration through the incremental front so large path
    // counts cost front-size work per path, not a quadratic filter
    std::vector<wceg::PathEntry> front;
    wceg::for_each_simple_path(
        g, static_cast<wceg::VertexId>(source), static_cast<wceg::VertexId>(target), max_paths,
        [&](const std::vector<wceg::EdgeId>& edges, const wceg::WeightVector& weight) {
            wceg::front_insert(front, wceg::PathEntry{edges, weight}, keep_ties);
        });
    std::vector<ResultRow> rows;
    for (const wceg::PathEntry& e : front)
        rows.push_back({static_cast<wceg::VertexId>(target), e.weight, e.edges});
    sort_rows(rows);
    print_rows(std::cout, rows, g.colour_names(), g.scale(), format, nullptr, false);
    return rows.empty() ? kExitNoPath : kExitOk;
}

int run_generate(const std::string& kind, int n, int k, int m, std::uint64_t seed, double lo,
                 double hi, int scale, const std::string& out_path) {
    wceg::WeightRange range{lo, hi};
    wceg::ColouredGraph g = kind == "complete"
                                ? wceg::complete_multigraph(n, k, seed, range, scale)
                                : wceg::random_sparse(n, k, m, seed, range, scale);
    wceg::save_graph_file(out_path, g);
    std::cout << "generated " << kind << " n=" << g.vertex_count() << " k=" << g.colour_count()
              << " edges=" << g.edge_count() << " -> " << out_path << "\n";
    return kExitOk;
}

int run_bench(int k, const std::string& n_list, int reps, std::uint64_t seed,
              const std::string& csv_path, const std::string& plot_path, int threads,
              double budget_ms, bool timings) {
    std::vector<int> n_values;
    for (const std::string& tok : split_list(n_list)) n_values.push_back(std::stoi(tok));
    if (n_values.empty()) throw CLI::ValidationError("--n-list", "needs at least one value");

    wceg::ExperimentOptions opts;
    opts.threads = threads;
    opts.total_budget_ms = budget_ms;
    wceg::ExperimentResult result = wceg::run_experiment(n_values, k, reps, seed, opts);

    char buf[160];
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw wceg::parse_error("cannot write csv file '" + csv_path + "'");
        csv << "n,k,seed,mean,max,processed,ms\n";
        for (const wceg::ExperimentRecord& r : result.records) {
            std::snprintf(buf, sizeof(buf), "%d,%d,%llu,%.6f,%llu,%llu,%lld\n", r.n, r.k,
                          static_cast<unsigned long long>(r.seed), r.mean_cardinality,
                          static_cast<unsigned long long>(r.max_cardinality),
                          static_cast<unsigned long long>(r.processed),
                          timings ? static_cast<long long>(r.ms + 0.5) : 0LL);
            csv << buf;
        }
    }
    if (!plot_path.empty()) {
        // gnuplot-ready log-log series: mean cardinality per n, averaged over reps
        std::ofstream plot(plot_path);
        if (!plot) throw wceg::parse_error("cannot write plot file '" + plot_path + "'");
        plot << "# mean Pareto cardinality vs n, k=" << k << "\n";
        for (int n : n_values) {
            double sum = 0;
            int count = 0;
            for (const wceg::ExperimentRecord& r : result.records)
                if (r.n == n) {
                    sum += r.mean_cardinality;
                    ++count;
                }
            if (count) {
                std::snprintf(buf, sizeof(buf), "%d %.6f\n", n, sum / count);
                plot << buf;
            }
        }
    }

    if (result.truncated) std::cout << "truncated 1\n";
    auto print_fit = [&](const char* name, wceg::FitField field) {
        wceg::PowerLawFit fit = wceg::fit_power_law(result.records, field);
        std::snprintf(buf, sizeof(buf), "fit %s exponent=%.4f intercept=%.4f r2=%.4f\n", name,
                      fit.exponent, fit.intercept, fit.r2);
        std::cout << buf;
    };
    std::map<int, int> distinct;
    for (const auto& r : result.records) distinct[r.n]++;
    if (distinct.size() >= 3) {
        print_fit("mean_cardinality", wceg::FitField::MeanCardinality);
        print_fit("processed", wceg::FitField::Processed);
    }
    return result.truncated ? kExitResource : kExitOk;
}

int run_sensitivity(const std::string& graph_path, int source, int target,
                    const std::string& sweep_colour, const std::string& factors) {
    wceg::ColouredGraph g = wceg::load_graph_file(graph_path);
    wceg::ColourId colour = g.colour_by_name(sweep_colour);
    wceg::SolveResult res = wceg::solve(g, static_cast<wceg::VertexId>(source));
    std::vector<wceg::WeightVector> set = res.weight_set(static_cast<wceg::VertexId>(target));
    // stable presentation order for the set indexes below
    std::sort(set.begin(), set.end(), [](const wceg::WeightVector& a, const wceg::WeightVector& b) {
        return wceg::lex_less(a.components(), b.components());
    });
    if (set.empty()) return kExitNoPath;

    wceg::CostModel base = wceg::CostModel::unit(set.front().size());
    for (const std::string& tok : split_list(factors)) {
        wceg::CostModel m = base;
        m.factors[static_cast<std::size_t>(colour)] = wceg::parse_decimal(tok, m.scale);
        if (m.factors[static_cast<std::size_t>(colour)] <= 0)
            throw CLI::ValidationError("--factors", "factors must be positive");
        auto best = wceg::evaluate_cost(set, m);
        std::cout << "cost factor=" << tok << " weight="
                  << weight_field(set[best->index], g.scale(), ',')
                  << " aggregate=" << wceg::format_aggregate(best->aggregate, m.scale + g.scale())
                  << "\n";
    }
    for (const wceg::Breakpoint& bp : wceg::crossover_threshold(set, colour, base)) {
        std::cout << "breakpoint factor=" << bp.num << "/" << bp.den
                  << " weight=" << weight_field(set[bp.index], g.scale(), ',') << "\n";
    }
    return kExitOk;
}

int run_assemble(const std::string& layers_list, double distance, int scale,
                 const std::string& out_path) {
    std::vector<wceg::JunctionLayer> layers;
    std::size_t junctions = 0;
    for (const std::string& path : split_list(layers_list)) {
        layers.push_back(wceg::load_layer_file(path));
        junctions += layers.back().junctions.size();
    }
    wceg::ClusterMap map = wceg::cluster_junctions(layers, distance);
    wceg::ColouredGraph g = wceg::assemble(layers, map, scale);
    wceg::save_graph_file(out_path, g);
    std::cout << "assembled layers=" << layers.size() << " junctions=" << junctions
              << " vertices=" << g.vertex_count() << " edges=" << g.edge_count() << " -> "
              << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted coloured-edge graph toolkit"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Pareto-optimal paths from a source vertex");
    std::string graph_path, augment, format = "text";
    int source = 0;
    std::optional<int> target;
    bool keep_ties = false, timings = false;
    std::size_t max_labels = 50'000'000;
    std::int64_t budget_ms = 900'000;
    solve_cmd->add_option("graph", graph_path, "wceg v1 graph file")->required();
    solve_cmd->add_option("--source", source, "source vertex")->required();
    solve_cmd->add_option("--target", target, "report only this destination");
    solve_cmd->add_flag("--keep-ties", keep_ties, "retain all co-weighted optimal paths");
    solve_cmd->add_option("--augment", augment, "count colour: hops or transfers")
        ->check(CLI::IsMember({"hops", "transfers"}));
    solve_cmd->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    solve_cmd->add_flag("--timings", timings, "include wall-clock fields in output");
    solve_cmd->add_option("--max-labels", max_labels, "labels-in-flight ceiling");
    solve_cmd->add_option("--time-budget-ms", budget_ms, "wall-clock ceiling, 0 = unlimited");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force Pareto set between two vertices");
    std::string o_graph;
    int o_source = 0, o_target = 0;
    bool o_keep_ties = false;
    std::string o_format = "text";
    std::uint64_t max_paths = wceg::kDefaultEnumerationCeiling;
    oracle_cmd->add_option("graph", o_graph, "wceg v1 graph file")->required();
    oracle_cmd->add_option("--source", o_source, "source vertex")->required();
    oracle_cmd->add_option("--target", o_target, "destination vertex")->required();
    oracle_cmd->add_flag("--keep-ties", o_keep_ties, "retain all co-weighted optimal paths");
    oracle_cmd->add_option("--max-paths", max_paths, "path-bound ceiling, 0 = unlimited");
    oracle_cmd->add_option("--format", o_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "seeded random instances");
    std::string gen_kind, gen_out;
    int gen_n = 0, gen_k = 0, gen_m = 0, gen_scale = 3;
    std::uint64_t gen_seed = 0;
    double lo = 1.0, hi = 100.0;
    gen_cmd->add_option("kind", gen_kind, "complete or sparse")
        ->required()
        ->check(CLI::IsMember({"complete", "sparse"}));
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    gen_cmd->add_option("--k", gen_k, "colour count")->required();
    gen_cmd->add_option("--m", gen_m, "edge count (sparse only)");
    gen_cmd->add_option("--seed", gen_seed, "PRNG seed")->required();
    gen_cmd->add_option("--weight-lo", lo, "uniform weight lower bound");
    gen_cmd->add_option("--weight-hi", hi, "uniform weight upper bound");
    gen_cmd->add_option("--scale", gen_scale, "fixed-point scale");
    gen_cmd->add_option("--out", gen_out, "output wceg file")->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "cardinality growth experiments");
    int b_k = 2, b_reps = 5, b_threads = 1;
    std::uint64_t b_seed = 0;
    std::string b_nlist, b_csv, b_plot;
    double b_budget = 0;
    bool b_timings = false;
    bench_cmd->add_option("--k", b_k, "colour count")->required();
    bench_cmd->add_option("--n-list", b_nlist, "comma-separated vertex counts")->required();
    bench_cmd->add_option("--reps", b_reps, "repetitions per n");
    bench_cmd->add_option("--seed", b_seed, "base seed")->required();
    bench_cmd->add_option("--csv", b_csv, "records file (n,k,seed,mean,max,processed,ms)");
    bench_cmd->add_option("--plot", b_plot, "gnuplot-ready mean-cardinality series");
    bench_cmd->add_option("--threads", b_threads, "parallel solves");
    bench_cmd->add_option("--budget-ms", b_budget, "total budget; exceeding truncates");
    bench_cmd->add_flag("--timings", b_timings, "emit real wall-clock ms in the csv");

    // sensitivity
    auto* sens_cmd = app.add_subcommand("sensitivity", "post-optimal cost analysis");
    std::string s_graph, s_colour, s_factors;
    int s_source = 0, s_target = 0;
    sens_cmd->add_option("graph", s_graph, "wceg v1 graph file")->required();
    sens_cmd->add_option("--source", s_source, "source vertex")->required();
    sens_cmd->add_option("--target", s_target, "destination vertex")->required();
    sens_cmd->add_option("--sweep-colour", s_colour, "colour whose factor is swept")->required();
    sens_cmd->add_option("--factors", s_factors, "comma-separated factors to tabulate");

    // assemble
    auto* asm_cmd = app.add_subcommand("assemble", "fuse junction layers into one graph");
    std::string a_layers, a_out;
    double a_distance = 0;
    int a_scale = 6;
    asm_cmd->add_option("--layers", a_layers, "comma-separated layer v1 files")->required();
    asm_cmd->add_option("--cluster-distance", a_distance, "single-linkage threshold, degrees")
        ->required();
    asm_cmd->add_option("--scale", a_scale, "fixed-point scale of the assembled graph");
    asm_cmd->add_option("--out", a_out, "output wceg file")->required();

    try {
        app.parse(argc, argv);
        if (solve_cmd->parsed())
            return run_solve(graph_path, source, target, keep_ties, augment, format, timings,
                             max_labels, budget_ms);
        if (oracle_cmd->parsed())
            return run_oracle(o_graph, o_source, o_target, o_keep_ties, max_paths, o_format);
        if (gen_cmd->parsed())
            return run_generate(gen_kind, gen_n, gen_k, gen_m, gen_seed, lo, hi, gen_scale,
                                gen_out);
        if (bench_cmd->parsed())
            return run_bench(b_k, b_nlist, b_reps, b_seed, b_csv, b_plot, b_threads, b_budget,
                             b_timings);
        if (sens_cmd->parsed())
            return run_sensitivity(s_graph, s_source, s_target, s_colour, s_factors);
        if (asm_cmd->parsed()) return run_assemble(a_layers, a_distance, a_scale, a_out);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    } catch (const wceg::resource_limit_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
