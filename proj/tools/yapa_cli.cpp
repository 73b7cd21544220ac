// Command-line surface of the young-age preferential attachment toolkit:
// graph generation, degree/surface/component/path analytics, limiting-law
// solvers, and grid sweeps that emit plot-ready CSV.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "yapa/yapa.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
    double alpha = 0.0;
    double beta = 0.0;
    std::uint64_t nodes = 10000;
    std::uint64_t runs = 1;
    std::uint64_t seed = 1;
    std::string generator = "accelerated";
    std::uint64_t init_fanout = 0;
    std::vector<std::uint64_t> genesis = {1};
    std::vector<std::uint64_t> roots = {1};
    std::string out = ".";
    std::string in;  // directory with edges.csv + meta.json to analyze
    std::uint64_t stride = 0;  // 0 = auto
    std::vector<double> alphas;
    std::vector<double> betas;
    std::uint64_t trees = 1000;
    std::uint64_t generations = 50;
    std::uint64_t max_nodes = 1000000;
    std::uint64_t kmax = 64;
};

using Echo = std::vector<std::pair<std::string, std::string>>;

std::string join_u64(const std::vector<std::uint64_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string join_doubles(const std::vector<double>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += yapa::format_double(xs[i]);
    }
    return s;
}

Echo base_echo(const std::string& command, const Options& o) {
    Echo e;
    e.emplace_back("command", command);
    e.emplace_back("alpha", yapa::format_double(o.alpha));
    e.emplace_back("beta", yapa::format_double(o.beta));
    e.emplace_back("nodes", std::to_string(o.nodes));
    e.emplace_back("runs", std::to_string(o.runs));
    e.emplace_back("seed", std::to_string(o.seed));
    e.emplace_back("generator", o.generator);
    e.emplace_back("init_fanout", std::to_string(o.init_fanout));
    return e;
}

yapa::Params params_of(const Options& o) { return yapa::Params(o.alpha, o.beta); }

yapa::GeneratorKind kind_of(const Options& o) {
    return yapa::generator_kind_from_string(o.generator);
}

yapa::InitialCondition init_of(const Options& o) {
    return yapa::InitialCondition{o.init_fanout};
}

std::uint64_t run_seed(const Options& o, std::uint64_t flat_index) {
    return yapa::RngHandle(o.seed).child(flat_index).seed();
}

fs::path out_dir(const Options& o) {
    fs::path dir(o.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + dir.string());
    return dir;
}

yapa::Dag load_or_generate(const Options& o, std::uint64_t flat_index) {
    if (!o.in.empty()) {
        const fs::path dir(o.in);
        return yapa::read_dag(dir / "edges.csv", dir / "meta.json");
    }
    return yapa::generate(params_of(o), o.nodes, run_seed(o, flat_index), init_of(o),
                          kind_of(o));
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_generate(const Options& o) {
    const auto dir = out_dir(o);
    const auto dag = yapa::generate(params_of(o), o.nodes, o.seed, init_of(o), kind_of(o));
    yapa::write_edge_list(dir / "edges.csv", dag);
    yapa::write_metadata(dir / "meta.json", dag);
    std::cerr << "wrote " << (dir / "edges.csv").string() << " (" << dag.n_arcs()
              << " arcs)\n";
    return 0;
}

int cmd_degrees(const Options& o) {
    const auto dir = out_dir(o);
    const auto dag = load_or_generate(o, 0);
    const auto summary = yapa::degree_summary(dag);

    Echo echo = base_echo("degrees", o);
    if (!o.in.empty()) echo.emplace_back("in", o.in);
    yapa::CsvWriter hist(dir / "degrees.csv", "degree,count_in,count_out", echo);
    std::vector<std::uint64_t> degrees;
    for (const auto& [k, c] : summary.in_histogram) degrees.push_back(k);
    for (const auto& [k, c] : summary.out_histogram) degrees.push_back(k);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    auto count_of = [](const std::map<std::uint64_t, std::uint64_t>& h, std::uint64_t k) {
        auto it = h.find(k);
        return it == h.end() ? std::uint64_t{0} : it->second;
    };
    for (std::uint64_t k : degrees)
        hist.row({std::to_string(k), std::to_string(count_of(summary.in_histogram, k)),
                  std::to_string(count_of(summary.out_histogram, k))});

    for (const char* which : {"in", "out"}) {
        const auto& h = *which == 'i' ? summary.in_histogram : summary.out_histogram;
        const auto pmf = yapa::pmf_from_histogram(h, summary.n_vertices);
        yapa::CsvWriter w(dir / (std::string("pmf_") + which + ".csv"), "k,probability", echo);
        for (const auto& [k, prob] : pmf.weights)
            w.row({std::to_string(k), yapa::format_double(prob)});
    }
    return 0;
}

int cmd_surface(const Options& o) {
    const auto dir = out_dir(o);
    const auto p = params_of(o);
    const double theory = std::exp(-p.alpha / (p.beta + 1.0));
    yapa::CsvWriter w(dir / "surface.csv", "N,detached,fraction,theory_fraction",
                      base_echo("surface", o));
    for (std::uint64_t r = 0; r < o.runs; ++r) {
        std::uint64_t detached = 0;
        std::uint64_t n = o.nodes;
        if (!o.in.empty()) {
            const auto dag = load_or_generate(o, r);
            const auto s = yapa::detached_surface(dag);
            detached = s.detached_count;
            n = s.n_vertices;
        } else {
            yapa::stream_growth(p, o.nodes, run_seed(o, r), init_of(o), kind_of(o),
                                [&](yapa::VertexId v, std::span<const yapa::VertexId> t) {
                                    if (v >= 2 && t.empty()) ++detached;
                                });
        }
        w.row({std::to_string(n), std::to_string(detached),
               yapa::format_double(static_cast<double>(detached) / static_cast<double>(n)),
               yapa::format_double(theory)});
    }
    return 0;
}

int cmd_component(const Options& o) {
    const auto dir = out_dir(o);
    const auto p = params_of(o);
    const std::uint64_t stride = o.stride ? o.stride : std::max<std::uint64_t>(1, o.nodes / 1000);
    for (std::uint64_t root : o.roots) {
        for (std::uint64_t r = 0; r < o.runs; ++r) {
            const auto trace = yapa::trace_component(p, root, o.nodes, run_seed(o, r),
                                                     init_of(o), kind_of(o), stride);
            Echo echo = base_echo("component", o);
            echo.emplace_back("root", std::to_string(root));
            echo.emplace_back("run", std::to_string(r));
            echo.emplace_back("stride", std::to_string(stride));
            const fs::path path =
                dir / ("component_root" + std::to_string(root) + "_run" + std::to_string(r) +
                       ".csv");
            yapa::CsvWriter w(path, "n,gamma,gamma_over_n,weight_over_n", echo);
            for (const auto& s : trace.samples) {
                const double n = static_cast<double>(s.n);
                w.row({std::to_string(s.n), std::to_string(s.gamma),
                       yapa::format_double(static_cast<double>(s.gamma) / n),
                       yapa::format_double(s.weight / n)});
            }
        }
    }
    return 0;
}

yapa::PathSummary paths_of_run(const Options& o, std::uint64_t flat_index) {
    const auto dag = load_or_generate(o, flat_index);
    const auto dist = yapa::genesis_distances(dag, o.genesis);
    return yapa::path_summary(dist);
}

int cmd_paths(const Options& o) {
    const auto dir = out_dir(o);
    Echo echo = base_echo("paths", o);
    echo.emplace_back("genesis", join_u64(o.genesis));
    if (!o.in.empty()) echo.emplace_back("in", o.in);
    yapa::CsvWriter w(dir / "paths.csv",
                      "alpha,beta,run,sum_hops,mean_hops,max_hops,reachable,unreachable",
                      echo);
    std::vector<yapa::PathSummary> rows(o.runs);
    yapa::parallel_for(o.runs, [&](std::uint64_t r) { rows[r] = paths_of_run(o, r); });
    for (std::uint64_t r = 0; r < o.runs; ++r) {
        const auto& s = rows[r];
        w.row({yapa::format_double(o.alpha), yapa::format_double(o.beta), std::to_string(r),
               std::to_string(s.sum_hops), yapa::format_double(s.mean_hops),
               std::to_string(s.max_hops), std::to_string(s.reachable_count),
               std::to_string(s.unreachable_count)});
    }
    return 0;
}

int cmd_gw(const Options& o) {
    const auto dir = out_dir(o);
    const auto p = params_of(o);
    std::vector<std::vector<std::uint64_t>> sizes(o.trees);
    std::uint64_t truncated = 0;
    std::mutex mu;
    yapa::parallel_for(o.trees, [&](std::uint64_t t) {
        yapa::RngHandle rng(run_seed(o, t));
        auto summary = yapa::simulate_gw_tree(p, static_cast<std::uint32_t>(o.generations),
                                              o.max_nodes, rng);
        sizes[t] = std::move(summary.generation_sizes);
        if (summary.truncated) {
            std::lock_guard lock(mu);
            ++truncated;
        }
    });
    if (truncated > 0)
        std::cerr << "warning: " << truncated << " of " << o.trees
                  << " trees hit the node cap; their later generations are missing\n";
    Echo echo = base_echo("gw", o);
    echo.emplace_back("trees", std::to_string(o.trees));
    echo.emplace_back("generations", std::to_string(o.generations));
    echo.emplace_back("max_nodes", std::to_string(o.max_nodes));
    yapa::CsvWriter w(dir / "gw.csv", "generation,mean_size,alive_fraction", echo);
    for (std::uint64_t g = 0; g <= o.generations; ++g) {
        double total = 0.0;
        std::uint64_t alive = 0;
        for (const auto& s : sizes) {
            const std::uint64_t size = g < s.size() ? s[g] : 0;
            total += static_cast<double>(size);
            if (size > 0) ++alive;
        }
        w.row({std::to_string(g), yapa::format_double(total / static_cast<double>(o.trees)),
               yapa::format_double(static_cast<double>(alive) / static_cast<double>(o.trees))});
    }
    return 0;
}

const char* regime_name(yapa::Regime r) {
    switch (r) {
        case yapa::Regime::subcritical: return "subcritical";
        case yapa::Regime::critical: return "critical";
        default: return "supercritical";
    }
}

int cmd_fixpoint(const Options& o) {
    const auto dir = out_dir(o);
    const auto res = yapa::solve_gamma(params_of(o));
    Echo echo;
    echo.emplace_back("command", "fixpoint");
    echo.emplace_back("alpha", yapa::format_double(o.alpha));
    echo.emplace_back("beta", yapa::format_double(o.beta));
    yapa::CsvWriter w(dir / "fixpoint.csv", "alpha,beta,regime,gamma,y_star,residual", echo);
    w.row({yapa::format_double(o.alpha), yapa::format_double(o.beta), regime_name(res.regime),
           yapa::format_double(res.gamma), yapa::format_double(res.y_star),
           yapa::format_double(res.residual)});
    return 0;
}

// One sweep cell: component-evolution statistics on a fixed sample grid plus
// per-run path summaries.
struct CellResult {
    std::vector<std::uint64_t> grid;
    std::vector<yapa::RunningStats> gamma_abs, gamma_frac;
    std::vector<yapa::PathSummary> paths;
};

CellResult run_cell(const Options& o, double alpha, double beta, std::uint64_t cell_index) {
    const yapa::Params p(alpha, beta);
    const auto kind = kind_of(o);
    const auto init = init_of(o);
    const std::uint64_t root = o.roots.empty() ? 1 : o.roots.front();
    const std::uint64_t stride = o.stride ? o.stride : std::max<std::uint64_t>(1, o.nodes / 200);

    CellResult cell;
    for (std::uint64_t n = root; n <= o.nodes; n += stride) cell.grid.push_back(n);
    if (cell.grid.back() != o.nodes) cell.grid.push_back(o.nodes);
    cell.gamma_abs.resize(cell.grid.size());
    cell.gamma_frac.resize(cell.grid.size());
    cell.paths.resize(o.runs);

    std::vector<std::vector<std::uint64_t>> run_gammas(o.runs);
    yapa::parallel_for(o.runs, [&](std::uint64_t r) {
        const std::uint64_t seed = run_seed(o, cell_index * o.runs + r);
        std::vector<bool> member(o.nodes + 1, false);
        std::uint64_t gamma = 0;
        std::size_t next_sample = 0;
        auto& samples = run_gammas[r];
        samples.reserve(cell.grid.size());
        auto dag = yapa::generate(p, o.nodes, seed, init, kind,
                                  [&](yapa::VertexId n, std::span<const yapa::VertexId> ts) {
                                      if (n < root) return;
                                      if (n == root) member[n] = true;
                                      else {
                                          for (yapa::VertexId t : ts) {
                                              if (member[t]) {
                                                  member[n] = true;
                                                  ++gamma;
                                                  break;
                                              }
                                          }
                                      }
                                      while (next_sample < cell.grid.size() &&
                                             cell.grid[next_sample] == n) {
                                          samples.push_back(gamma);
                                          ++next_sample;
                                      }
                                  });
        const auto dist = yapa::genesis_distances(dag, o.genesis);
        cell.paths[r] = yapa::path_summary(dist);
    });
    for (std::uint64_t r = 0; r < o.runs; ++r) {
        for (std::size_t i = 0; i < cell.grid.size(); ++i) {
            const double g = static_cast<double>(run_gammas[r][i]);
            cell.gamma_abs[i].add(g);
            cell.gamma_frac[i].add(g / static_cast<double>(cell.grid[i]));
        }
    }
    return cell;
}

int cmd_sweep(const Options& o) {
    const auto dir = out_dir(o);
    if (o.alphas.empty() || o.betas.empty())
        throw std::invalid_argument("sweep: --alphas and --betas must be nonempty");

    Echo echo = base_echo("sweep", o);
    echo.emplace_back("alphas", join_doubles(o.alphas));
    echo.emplace_back("betas", join_doubles(o.betas));
    echo.emplace_back("genesis", join_u64(o.genesis));
    echo.emplace_back("root", std::to_string(o.roots.empty() ? 1 : o.roots.front()));

    yapa::CsvWriter runs_csv(
        dir / "paths_runs.csv",
        "alpha,beta,run,sum_hops,mean_hops,max_hops,reachable,unreachable", echo);
    yapa::CsvWriter grid_csv(dir / "paths_grid.csv",
                             "alpha,beta,runs,mean_sum_hops,std_sum_hops,mean_mean_hops,"
                             "std_mean_hops,outdeg2_marker",
                             echo);
    yapa::CsvWriter marker_csv(dir / "markers.csv", "beta,alpha_mean_outdeg2", echo);
    for (double beta : o.betas)
        marker_csv.row({yapa::format_double(beta), yapa::format_double(2.0 * (beta + 1.0))});

    std::uint64_t cell_index = 0;
    std::uint64_t failed = 0;
    for (double beta : o.betas) {
        for (double alpha : o.alphas) {
            std::cerr << "sweep cell alpha=" << alpha << " beta=" << beta << " ("
                      << (cell_index + 1) << "/" << o.alphas.size() * o.betas.size() << ")\n";
            try {
                const CellResult cell = run_cell(o, alpha, beta, cell_index);

                std::string stem = "evolution_alpha" + yapa::format_double(alpha) + "_beta" +
                                   yapa::format_double(beta) + ".csv";
                Echo cell_echo = echo;
                cell_echo.emplace_back("cell_alpha", yapa::format_double(alpha));
                cell_echo.emplace_back("cell_beta", yapa::format_double(beta));
                yapa::CsvWriter evo(dir / stem,
                                    "n,mean_gamma,std_gamma,mean_gamma_over_n,std_gamma_over_n",
                                    cell_echo);
                for (std::size_t i = 0; i < cell.grid.size(); ++i)
                    evo.row({std::to_string(cell.grid[i]),
                             yapa::format_double(cell.gamma_abs[i].mean()),
                             yapa::format_double(cell.gamma_abs[i].stddev()),
                             yapa::format_double(cell.gamma_frac[i].mean()),
                             yapa::format_double(cell.gamma_frac[i].stddev())});

                yapa::RunningStats sum_stats, mean_stats;
                for (std::uint64_t r = 0; r < o.runs; ++r) {
                    const auto& s = cell.paths[r];
                    runs_csv.row({yapa::format_double(alpha), yapa::format_double(beta),
                                  std::to_string(r), std::to_string(s.sum_hops),
                                  yapa::format_double(s.mean_hops), std::to_string(s.max_hops),
                                  std::to_string(s.reachable_count),
                                  std::to_string(s.unreachable_count)});
                    sum_stats.add(static_cast<double>(s.sum_hops));
                    mean_stats.add(s.mean_hops);
                }
                const bool marker = std::abs(alpha - 2.0 * (beta + 1.0)) < 1e-12;
                grid_csv.row({yapa::format_double(alpha), yapa::format_double(beta),
                              std::to_string(o.runs), yapa::format_double(sum_stats.mean()),
                              yapa::format_double(sum_stats.stddev()),
                              yapa::format_double(mean_stats.mean()),
                              yapa::format_double(mean_stats.stddev()), marker ? "1" : "0"});
            } catch (const std::exception& e) {
                ++failed;
                std::cerr << "sweep cell alpha=" << alpha << " beta=" << beta
                          << " failed: " << e.what() << "\n";
            }
            ++cell_index;
        }
    }
    if (failed == o.alphas.size() * o.betas.size()) {
        std::cerr << "sweep: every cell failed\n";
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// option wiring

void apply_config_file(Options& o, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json cfg = json::parse(in);
    if (cfg.contains("alpha")) o.alpha = cfg["alpha"].get<double>();
    if (cfg.contains("beta")) o.beta = cfg["beta"].get<double>();
    if (cfg.contains("nodes")) o.nodes = cfg["nodes"].get<std::uint64_t>();
    if (cfg.contains("runs")) o.runs = cfg["runs"].get<std::uint64_t>();
    if (cfg.contains("seed")) o.seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("generator")) o.generator = cfg["generator"].get<std::string>();
    if (cfg.contains("init_fanout")) o.init_fanout = cfg["init_fanout"].get<std::uint64_t>();
    if (cfg.contains("genesis")) o.genesis = cfg["genesis"].get<std::vector<std::uint64_t>>();
    if (cfg.contains("roots")) o.roots = cfg["roots"].get<std::vector<std::uint64_t>>();
    if (cfg.contains("root")) o.roots = {cfg["root"].get<std::uint64_t>()};
    if (cfg.contains("out")) o.out = cfg["out"].get<std::string>();
    if (cfg.contains("in")) o.in = cfg["in"].get<std::string>();
    if (cfg.contains("stride")) o.stride = cfg["stride"].get<std::uint64_t>();
    if (cfg.contains("alphas")) o.alphas = cfg["alphas"].get<std::vector<double>>();
    if (cfg.contains("betas")) o.betas = cfg["betas"].get<std::vector<double>>();
    if (cfg.contains("trees")) o.trees = cfg["trees"].get<std::uint64_t>();
    if (cfg.contains("generations")) o.generations = cfg["generations"].get<std::uint64_t>();
    if (cfg.contains("max_nodes")) o.max_nodes = cfg["max_nodes"].get<std::uint64_t>();
    if (cfg.contains("kmax")) o.kmax = cfg["kmax"].get<std::uint64_t>();
}

void add_common_flags(CLI::App* cmd, Options& o, bool need_params) {
    auto* a = cmd->add_option("--alpha", o.alpha, "edge density (> 0)");
    auto* b = cmd->add_option("--beta", o.beta, "reinforcement bias (> 0)");
    if (need_params && o.alpha == 0.0) a->required();
    if (need_params && o.beta == 0.0) b->required();
    cmd->add_option("--nodes", o.nodes, "number of vertices");
    cmd->add_option("--runs", o.runs, "replicate runs");
    cmd->add_option("--seed", o.seed, "base RNG seed (runs derive child seeds)");
    cmd->add_option("--generator", o.generator, "reference|accelerated")
        ->check(CLI::IsMember({"reference", "accelerated"}));
    cmd->add_option("--init-fanout", o.init_fanout,
                    "first K vertices after genesis reference vertex 1");
    cmd->add_option("--out", o.out, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;

    // flags override config-file values, so the file is applied first
    for (int i = 1; i < argc - 1; ++i) {
        if (std::string_view(argv[i]) == "--config") {
            try {
                apply_config_file(o, argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
        }
    }

    CLI::App app{"young-age preferential attachment DAG simulator and analytics"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override)");

    auto* gen = app.add_subcommand("generate", "grow a graph and write edge list + metadata");
    add_common_flags(gen, o, true);

    auto* deg = app.add_subcommand("degrees", "degree histograms and empirical pmfs");
    add_common_flags(deg, o, true);
    deg->add_option("--in", o.in, "analyze an existing graph directory instead of generating");

    auto* surf = app.add_subcommand("surface", "detached-surface counts per run");
    add_common_flags(surf, o, true);
    surf->add_option("--in", o.in, "analyze an existing graph directory instead of generating");

    auto* comp = app.add_subcommand("component", "online forward-component traces");
    add_common_flags(comp, o, true);
    comp->add_option("--root", o.roots, "tracked root vertex (repeatable)");
    comp->add_option("--stride", o.stride, "trace sampling stride (0 = nodes/1000)");

    auto* paths = app.add_subcommand("paths", "shortest-path-to-genesis statistics");
    add_common_flags(paths, o, true);
    paths->add_option("--genesis", o.genesis, "genesis vertex set")->delimiter(',');
    paths->add_option("--in", o.in, "analyze an existing graph directory instead of generating");

    auto* gw = app.add_subcommand("gw", "branching-tree local limit simulation");
    add_common_flags(gw, o, true);
    gw->add_option("--trees", o.trees, "number of trees");
    gw->add_option("--generations", o.generations, "generation cap");
    gw->add_option("--max-nodes", o.max_nodes, "per-tree node cap");

    auto* fix = app.add_subcommand("fixpoint", "limiting component fraction and weight fixed point");
    fix->add_option("--alpha", o.alpha, "edge density (> 0)")->required();
    fix->add_option("--beta", o.beta, "reinforcement bias (> 0)")->required();
    fix->add_option("--out", o.out, "output directory");

    auto* sweep = app.add_subcommand("sweep", "grid of cells with evolution + path-shape CSVs");
    add_common_flags(sweep, o, false);
    sweep->add_option("--alphas", o.alphas, "edge density grid")->delimiter(',');
    sweep->add_option("--betas", o.betas, "reinforcement bias grid")->delimiter(',');
    sweep->add_option("--genesis", o.genesis, "genesis vertex set")->delimiter(',');
    sweep->add_option("--root", o.roots, "tracked root vertex");
    sweep->add_option("--stride", o.stride, "evolution sampling stride (0 = nodes/200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) return cmd_generate(o);
        if (deg->parsed()) return cmd_degrees(o);
        if (surf->parsed()) return cmd_surface(o);
        if (comp->parsed()) return cmd_component(o);
        if (paths->parsed()) return cmd_paths(o);
        if (gw->parsed()) return cmd_gw(o);
        if (fix->parsed()) return cmd_fixpoint(o);
        if (sweep->parsed()) return cmd_sweep(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
