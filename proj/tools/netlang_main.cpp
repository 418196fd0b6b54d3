// netlang: generate/analyze networks and run innovation-diffusion experiments.
//
// Exit codes: 0 success, 2 usage or config error, 3 data contract violation,
// 4 internal error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netlang/diffusion.hpp"
#include "netlang/edge_list.hpp"
#include "netlang/experiments.hpp"
#include "netlang/generators.hpp"
#include "netlang/growth.hpp"
#include "netlang/metrics.hpp"

using nlohmann::json;
using namespace netlang;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binds JSON config keys to CLI options: a key fills its option's variable
// only when the flag was not passed on the command line.
class ConfigBinder {
public:
    void bind(const std::string& key, CLI::Option* opt, std::function<void(const json&)> apply) {
        entries_[key] = {opt, std::move(apply)};
    }

    void merge(const json& cfg) const {
        if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
        for (const auto& [key, value] : cfg.items()) {
            auto it = entries_.find(key);
            if (it == entries_.end()) {
                std::string known;
                for (const auto& [k, e] : entries_) known += (known.empty() ? "" : ", ") + k;
                throw UsageError("unknown config key '" + key + "'; valid keys: " + known);
            }
            if (it->second.opt != nullptr && it->second.opt->count() > 0) continue;  // flag wins
            try {
                it->second.apply(value);
            } catch (const json::exception&) {
                throw UsageError("config key '" + key + "' has the wrong type");
            }
        }
    }

private:
    struct Entry {
        CLI::Option* opt;
        std::function<void(const json&)> apply;
    };
    std::map<std::string, Entry> entries_;
};

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("config parse error: ") + e.what());
    }
}

void require_probability(double v, const std::string& name) {
    if (v < 0.0 || v > 1.0) throw UsageError(name + " must be in [0,1], got " + std::to_string(v));
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("not a number in list: '" + item + "'");
        }
    }
    return out;
}

// ------------------------------------------------------------------ generate

struct GenerateOpts {
    std::string family;
    std::uint32_t nodes = 0;
    std::uint32_t mean_degree = 0;
    double rewire_p = 0.01;
    std::uint32_t m0 = 0, m = 0;
    std::uint64_t seed = 0;
    int max_retries = 100;
    std::string out;
};

GenSpec build_gen_spec(const std::string& family_name_str, std::uint32_t nodes,
                       std::uint32_t mean_degree, double rewire_p, std::uint32_t m0,
                       std::uint32_t m, std::uint64_t seed, int max_retries) {
    GenSpec spec;
    if (!parse_family(family_name_str, spec.family))
        throw UsageError("unknown network family '" + family_name_str +
                         "'; valid: complete, regular, smallworld, random, scalefree");
    if (nodes == 0) throw UsageError("--nodes is required and must be positive");
    spec.n = nodes;
    spec.k = mean_degree;
    spec.p = rewire_p;
    spec.seed = seed;
    spec.max_retries = max_retries;
    switch (spec.family) {
        case Family::complete:
            break;
        case Family::regular_ring:
        case Family::random_er:
        case Family::small_world:
            if (mean_degree == 0) throw UsageError("--mean-degree is required for this family");
            if (spec.family == Family::small_world) require_probability(rewire_p, "--rewire-p");
            break;
        case Family::scale_free:
            if (m == 0 && m0 == 0) {
                if (mean_degree == 0)
                    throw UsageError("scalefree needs --m/--m0 or --mean-degree");
                spec.m = std::max<std::uint32_t>(1, mean_degree / 2);
                spec.m0 = spec.m;
            } else {
                spec.m = m == 0 ? m0 : m;
                spec.m0 = m0 == 0 ? spec.m : m0;
            }
            break;
    }
    return spec;
}

int cmd_generate(const GenerateOpts& o) {
    if (o.out.empty()) throw UsageError("--out is required");
    GenSpec spec = build_gen_spec(o.family, o.nodes, o.mean_degree, o.rewire_p, o.m0, o.m, o.seed,
                                  o.max_retries);
    Graph g = generate(spec);
    write_edge_list(o.out, g, {"netlang edge list", "generator: " + describe(spec)});
    std::cout << "wrote " << o.out << ": " << g.node_count() << " nodes, " << g.edge_count()
              << " edges\n";
    return 0;
}

// ------------------------------------------------------------------- analyze

struct AnalyzeCmdOpts {
    std::string input;
    std::string out;
    std::string label_map;
    bool strict = false;
    int kmin = 0;
    std::uint64_t seed = 0;
    std::size_t sample_sources = 1000;
    std::size_t exact_threshold = 20000;
};

int cmd_analyze(const AnalyzeCmdOpts& o) {
    LoadedGraph loaded = read_edge_list(o.input, !o.label_map.empty());
    if (loaded.self_loops_dropped > 0 || loaded.duplicates_dropped > 0) {
        std::cerr << "warning: dropped " << loaded.self_loops_dropped << " self-loop line(s) and "
                  << loaded.duplicates_dropped << " duplicate edge line(s)\n";
    }
    if (!o.label_map.empty()) write_label_map(o.label_map, loaded.labels);

    if (o.strict && loaded.graph.component_count() > 1) {
        throw DataError("graph has " + std::to_string(loaded.graph.component_count()) +
                        " components");
    }
    AnalyzeOptions opts;
    opts.paths.strict = o.strict;
    opts.paths.seed = o.seed;
    opts.paths.sample_sources = o.sample_sources;
    opts.paths.exact_threshold = o.exact_threshold;
    if (o.kmin > 0) opts.fit_k_min = o.kmin;
    MetricsReport report = analyze(loaded.graph, opts);

    std::cout << report_text(report) << '\n'
              << report_csv_header() << '\n'
              << report_csv_row(report) << '\n';
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("cannot open for writing: " + o.out);
        f << report_csv_header() << '\n' << report_csv_row(report) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------- simulate / sweep

struct SimOpts {
    std::string model;
    std::string network;
    std::uint32_t nodes = 400;
    std::uint32_t mean_degree = 20;
    double rewire_p = 0.01;
    std::uint32_t m0 = 0, m = 0;
    double alpha = 0.5;
    double alpha_adult = 0.001;
    double alpha_child = 0.5;
    int k_interactions = 10;
    double beta = 1.0;
    std::uint32_t innovators = 1;
    std::string innovator_stages = "3,4,5";
    long t_max = -1;
    int runs = 10;
    std::uint64_t seed = 0;
    bool fixed_graph = false;
    bool async_learning = false;
    std::string stats_out;
    std::string traj_out;
    // sweep only
    std::string axis;
    std::string values;
    std::string networks;
};

BatchConfig build_batch_config(const SimOpts& o, bool need_network) {
    BatchConfig cfg;
    if (!parse_model(o.model, cfg.model))
        throw UsageError("unknown model '" + o.model + "'; valid: static, interaction, learning");
    if (need_network && o.network.empty()) throw UsageError("--network is required");
    cfg.gen = build_gen_spec(o.network.empty() ? "regular" : o.network, o.nodes, o.mean_degree,
                             o.rewire_p, o.m0, o.m, o.seed, 100);

    require_probability(o.alpha, "--alpha");
    require_probability(o.alpha_adult, "--alpha-adult");
    require_probability(o.alpha_child, "--alpha-child");
    if (o.beta < 0.0) throw UsageError("--beta must be >= 0");
    if (o.k_interactions < 1) throw UsageError("--k-interactions must be >= 1");
    if (o.runs < 1) throw UsageError("--runs must be >= 1");

    switch (cfg.model) {
        case Model::static_interaction: {
            StaticParams p;
            p.alpha = o.alpha;
            p.t_max = o.t_max > 0 ? o.t_max : 10000;
            cfg.params = p;
            break;
        }
        case Model::interaction_aged: {
            InteractionParams p;
            p.alpha_adult = o.alpha_adult;
            p.alpha_child = o.alpha_child;
            p.k_interactions = o.k_interactions;
            p.t_max = o.t_max > 0 ? o.t_max : 1000;
            cfg.params = p;
            break;
        }
        case Model::learning_aged: {
            LearningParams p;
            p.beta = o.beta;
            p.alpha_adult = o.alpha_adult;
            p.t_max = o.t_max > 0 ? o.t_max : 1000;
            p.synchronous = !o.async_learning;
            cfg.params = p;
            break;
        }
    }

    cfg.seeding.innovators = o.innovators;
    cfg.seeding.eligible_stages.clear();
    for (double v : parse_double_list(o.innovator_stages)) {
        const int stage = static_cast<int>(v);
        if (stage < 3 || stage > 5)
            throw UsageError("--innovator-stages entries must be in {3,4,5}");
        cfg.seeding.eligible_stages.push_back(stage);
    }
    if (cfg.seeding.eligible_stages.empty())
        throw UsageError("--innovator-stages must name at least one stage");

    cfg.runs = o.runs;
    cfg.base_seed = o.seed;
    cfg.regenerate_graph_per_run = !o.fixed_graph;
    cfg.keep_trajectories = !o.traj_out.empty();
    return cfg;
}

int cmd_simulate(const SimOpts& o) {
    BatchConfig cfg = build_batch_config(o, true);
    BatchStats stats = run_batch(cfg);

    std::ostringstream table;
    table << stats_csv_header() << '\n' << stats_csv_row(cfg, stats) << '\n';
    std::cout << table.str();
    if (!o.stats_out.empty()) {
        std::ofstream f(o.stats_out);
        if (!f) throw std::runtime_error("cannot open for writing: " + o.stats_out);
        f << table.str();
    }
    if (!o.traj_out.empty()) {
        std::ofstream f(o.traj_out);
        if (!f) throw std::runtime_error("cannot open for writing: " + o.traj_out);
        write_trajectories_csv(f, stats);
    }
    return 0;
}

int cmd_sweep(const SimOpts& o) {
    if (o.axis.empty()) throw UsageError("--axis is required");
    if (o.values.empty()) throw UsageError("--values is required");
    BatchConfig base = build_batch_config(o, false);

    std::vector<double> values = parse_double_list(o.values);
    std::vector<Family> families;
    std::stringstream ss(o.networks.empty() ? "regular,smallworld,random,scalefree" : o.networks);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Family f;
        if (!parse_family(item, f))
            throw UsageError("unknown network family '" + item +
                             "'; valid: complete, regular, smallworld, random, scalefree");
        families.push_back(f);
    }

    std::vector<SweepRow> rows;
    try {
        rows = sweep(base, o.axis, values, families);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::ostringstream table;
    table << stats_csv_header() << '\n';
    for (const auto& row : rows) table << stats_csv_row(row.config, row.stats) << '\n';
    std::cout << table.str();
    if (!o.stats_out.empty()) {
        std::ofstream f(o.stats_out);
        if (!f) throw std::runtime_error("cannot open for writing: " + o.stats_out);
        f << table.str();
    }
    return 0;
}

// ------------------------------------------------------------------ logistic

struct LogisticOpts {
    double n = 400;
    double alpha = 1e-4;
    double c0 = 1;
    double dt = 0.01;
    double t_end = 400;
    std::string out;
};

int cmd_logistic(const LogisticOpts& o) {
    if (o.n <= 0) throw UsageError("--n must be positive");
    if (!(o.c0 > 0 && o.c0 < o.n)) throw UsageError("--c0 must satisfy 0 < c0 < n");
    if (o.dt <= 0) throw UsageError("--dt must be positive");
    if (o.t_end < 0) throw UsageError("--t-end must be >= 0");
    LogisticCurve curve = logistic_reference(o.n, o.alpha, o.c0, o.dt, o.t_end);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw std::runtime_error("cannot open for writing: " + o.out);
        os = &file;
    }
    char buf[160];
    *os << "t,c,fraction\n";
    for (std::size_t i = 0; i < curve.t.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g\n", curve.t[i], curve.numeric[i],
                      curve.numeric[i] / o.n);
        *os << buf;
    }
    return 0;
}

// ---------------------------------------------------------------------- grow

struct GrowOpts {
    std::string model;
    std::uint32_t n_final = 0;
    std::uint32_t m = 1;
    double c = 0.0;
    double utility_exponent = 1.0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_grow(const GrowOpts& o) {
    GrowthSpec spec;
    if (!parse_growth_model(o.model, spec.model))
        throw UsageError("unknown growth model '" + o.model + "'; valid: motter, dm, st");
    if (o.out.empty()) throw UsageError("--out is required");
    if (o.n_final == 0) throw UsageError("--n-final is required and must be positive");
    spec.n_final = o.n_final;
    spec.m = o.m;
    spec.c = o.c;
    spec.utility_exponent = o.utility_exponent;
    spec.seed = o.seed;
    Graph g = grow(spec);
    write_edge_list(o.out, g, {"netlang edge list", "growth: " + describe(spec)});
    std::cout << "wrote " << o.out << ": " << g.node_count() << " nodes, " << g.edge_count()
              << " edges\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"netlang: network toolkit and innovation-diffusion simulator"};
    app.require_subcommand(1);

    GenerateOpts gen_o;
    AnalyzeCmdOpts an_o;
    SimOpts sim_o, sweep_o;
    LogisticOpts log_o;
    GrowOpts grow_o;
    std::string gen_cfg, an_cfg, sim_cfg, sweep_cfg, log_cfg, grow_cfg;

    ConfigBinder gen_b, an_b, sim_b, sweep_b, log_b, grow_b;

    // generate
    auto* cgen = app.add_subcommand("generate", "generate a network and write it as an edge list");
    {
        auto* f = cgen->add_option("--family", gen_o.family,
                                   "complete|regular|smallworld|random|scalefree");
        auto* n = cgen->add_option("--nodes", gen_o.nodes, "node count");
        auto* k = cgen->add_option("--mean-degree", gen_o.mean_degree, "target mean degree");
        auto* p = cgen->add_option("--rewire-p", gen_o.rewire_p, "small-world rewiring probability");
        auto* m0 = cgen->add_option("--m0", gen_o.m0, "scale-free seed size");
        auto* m = cgen->add_option("--m", gen_o.m, "scale-free links per arrival");
        auto* s = cgen->add_option("--seed", gen_o.seed, "RNG seed");
        auto* r = cgen->add_option("--max-retries", gen_o.max_retries, "connectivity retries");
        auto* o = cgen->add_option("--out", gen_o.out, "output edge-list path");
        cgen->add_option("--config", gen_cfg, "JSON config file (flags override)");
        gen_b.bind("family", f, [&](const json& v) { gen_o.family = v.get<std::string>(); });
        gen_b.bind("nodes", n, [&](const json& v) { gen_o.nodes = v.get<std::uint32_t>(); });
        gen_b.bind("mean_degree", k,
                   [&](const json& v) { gen_o.mean_degree = v.get<std::uint32_t>(); });
        gen_b.bind("rewire_p", p, [&](const json& v) { gen_o.rewire_p = v.get<double>(); });
        gen_b.bind("m0", m0, [&](const json& v) { gen_o.m0 = v.get<std::uint32_t>(); });
        gen_b.bind("m", m, [&](const json& v) { gen_o.m = v.get<std::uint32_t>(); });
        gen_b.bind("seed", s, [&](const json& v) { gen_o.seed = v.get<std::uint64_t>(); });
        gen_b.bind("max_retries", r, [&](const json& v) { gen_o.max_retries = v.get<int>(); });
        gen_b.bind("out", o, [&](const json& v) { gen_o.out = v.get<std::string>(); });
    }

    // analyze
    auto* can = app.add_subcommand("analyze", "compute network measures from an edge list");
    {
        can->add_option("input", an_o.input, "edge-list path")->required();
        auto* o = can->add_option("--out", an_o.out, "also write the CSV report here");
        auto* lm = can->add_option("--label-map", an_o.label_map,
                                   "treat ids as string labels; write index\\tlabel map here");
        auto* st = can->add_flag("--strict", an_o.strict, "error out on disconnected input");
        auto* km = can->add_option("--kmin", an_o.kmin, "min degree for the power-law fit");
        auto* se = can->add_option("--seed", an_o.seed, "seed for sampled path lengths");
        auto* ss = can->add_option("--sample-sources", an_o.sample_sources,
                                   "BFS sources when sampling");
        auto* et = can->add_option("--exact-threshold", an_o.exact_threshold,
                                   "max nodes for exact path lengths");
        can->add_option("--config", an_cfg, "JSON config file (flags override)");
        an_b.bind("input", nullptr, [&](const json& v) { an_o.input = v.get<std::string>(); });
        an_b.bind("out", o, [&](const json& v) { an_o.out = v.get<std::string>(); });
        an_b.bind("label_map", lm, [&](const json& v) { an_o.label_map = v.get<std::string>(); });
        an_b.bind("strict", st, [&](const json& v) { an_o.strict = v.get<bool>(); });
        an_b.bind("kmin", km, [&](const json& v) { an_o.kmin = v.get<int>(); });
        an_b.bind("seed", se, [&](const json& v) { an_o.seed = v.get<std::uint64_t>(); });
        an_b.bind("sample_sources", ss,
                  [&](const json& v) { an_o.sample_sources = v.get<std::size_t>(); });
        an_b.bind("exact_threshold", et,
                  [&](const json& v) { an_o.exact_threshold = v.get<std::size_t>(); });
    }

    auto add_sim_options = [](CLI::App* cmd, SimOpts& o, ConfigBinder& b, std::string& cfg_path,
                              bool sweep_mode) {
        auto* mo = cmd->add_option("--model", o.model, "static|interaction|learning");
        CLI::Option* nw = nullptr;
        if (!sweep_mode)
            nw = cmd->add_option("--network", o.network,
                                 "complete|regular|smallworld|random|scalefree");
        auto* n = cmd->add_option("--nodes", o.nodes, "population size");
        auto* k = cmd->add_option("--mean-degree", o.mean_degree, "target mean degree");
        auto* p = cmd->add_option("--rewire-p", o.rewire_p, "small-world rewiring probability");
        auto* m0 = cmd->add_option("--m0", o.m0, "scale-free seed size");
        auto* m = cmd->add_option("--m", o.m, "scale-free links per arrival");
        auto* a = cmd->add_option("--alpha", o.alpha, "static-model adoption probability");
        auto* aa = cmd->add_option("--alpha-adult", o.alpha_adult, "adult adoption probability");
        auto* ac = cmd->add_option("--alpha-child", o.alpha_child, "child adoption probability");
        auto* ki = cmd->add_option("--k-interactions", o.k_interactions,
                                   "interactions per agent per macro step");
        auto* be = cmd->add_option("--beta", o.beta, "functional bias f(C)/f(U)");
        auto* in = cmd->add_option("--innovators", o.innovators, "initial adopter count");
        auto* is = cmd->add_option("--innovator-stages", o.innovator_stages,
                                   "stages eligible to innovate, e.g. 3,4,5");
        auto* tm = cmd->add_option("--t-max", o.t_max,
                                   "step cap (micro-steps for static, macro steps otherwise)");
        auto* ru = cmd->add_option("--runs", o.runs, "runs per batch");
        auto* se = cmd->add_option("--seed", o.seed, "base seed (run i uses base XOR i)");
        auto* fg = cmd->add_flag("--fixed-graph", o.fixed_graph,
                                 "reuse one graph instance across runs");
        auto* al = cmd->add_flag("--async-learning", o.async_learning,
                                 "learners update sequentially instead of synchronously");
        auto* so = cmd->add_option("--stats-out", o.stats_out, "write the stats CSV here");
        CLI::Option* to = nullptr;
        if (!sweep_mode)
            to = cmd->add_option("--traj-out", o.traj_out, "write per-run trajectories CSV here");
        cmd->add_option("--config", cfg_path, "JSON config file (flags override)");

        b.bind("model", mo, [&o](const json& v) { o.model = v.get<std::string>(); });
        if (nw) b.bind("network", nw, [&o](const json& v) { o.network = v.get<std::string>(); });
        b.bind("nodes", n, [&o](const json& v) { o.nodes = v.get<std::uint32_t>(); });
        b.bind("mean_degree", k, [&o](const json& v) { o.mean_degree = v.get<std::uint32_t>(); });
        b.bind("rewire_p", p, [&o](const json& v) { o.rewire_p = v.get<double>(); });
        b.bind("m0", m0, [&o](const json& v) { o.m0 = v.get<std::uint32_t>(); });
        b.bind("m", m, [&o](const json& v) { o.m = v.get<std::uint32_t>(); });
        b.bind("alpha", a, [&o](const json& v) { o.alpha = v.get<double>(); });
        b.bind("alpha_adult", aa, [&o](const json& v) { o.alpha_adult = v.get<double>(); });
        b.bind("alpha_child", ac, [&o](const json& v) { o.alpha_child = v.get<double>(); });
        b.bind("k_interactions", ki, [&o](const json& v) { o.k_interactions = v.get<int>(); });
        b.bind("beta", be, [&o](const json& v) { o.beta = v.get<double>(); });
        b.bind("innovators", in, [&o](const json& v) { o.innovators = v.get<std::uint32_t>(); });
        b.bind("innovator_stages", is,
               [&o](const json& v) { o.innovator_stages = v.get<std::string>(); });
        b.bind("t_max", tm, [&o](const json& v) { o.t_max = v.get<long>(); });
        b.bind("runs", ru, [&o](const json& v) { o.runs = v.get<int>(); });
        b.bind("seed", se, [&o](const json& v) { o.seed = v.get<std::uint64_t>(); });
        b.bind("regenerate_graph_per_run", fg,
               [&o](const json& v) { o.fixed_graph = !v.get<bool>(); });
        b.bind("async_learning", al, [&o](const json& v) { o.async_learning = v.get<bool>(); });
        b.bind("stats_out", so, [&o](const json& v) { o.stats_out = v.get<std::string>(); });
        if (to) b.bind("traj_out", to, [&o](const json& v) { o.traj_out = v.get<std::string>(); });
    };

    // simulate
    auto* csim = app.add_subcommand("simulate", "run a batch of diffusion simulations");
    add_sim_options(csim, sim_o, sim_b, sim_cfg, false);

    // sweep
    auto* cswp = app.add_subcommand("sweep", "sweep a parameter across network families");
    add_sim_options(cswp, sweep_o, sweep_b, sweep_cfg, true);
    {
        auto* ax = cswp->add_option("--axis", sweep_o.axis, "parameter to sweep (e.g. beta)");
        auto* va = cswp->add_option("--values", sweep_o.values, "comma-separated axis values");
        auto* nw = cswp->add_option("--networks", sweep_o.networks,
                                    "comma-separated families (default all four)");
        sweep_b.bind("axis", ax, [&](const json& v) { sweep_o.axis = v.get<std::string>(); });
        sweep_b.bind("values", va, [&](const json& v) { sweep_o.values = v.get<std::string>(); });
        sweep_b.bind("networks", nw,
                     [&](const json& v) { sweep_o.networks = v.get<std::string>(); });
    }

    // logistic
    auto* clog = app.add_subcommand("logistic", "integrate the logistic reference curve");
    {
        auto* n = clog->add_option("--n", log_o.n, "population size");
        auto* a = clog->add_option("--alpha", log_o.alpha, "contact rate");
        auto* c = clog->add_option("--c0", log_o.c0, "initial adopter count");
        auto* d = clog->add_option("--dt", log_o.dt, "integration step");
        auto* t = clog->add_option("--t-end", log_o.t_end, "end time");
        auto* o = clog->add_option("--out", log_o.out, "output CSV path (stdout otherwise)");
        clog->add_option("--config", log_cfg, "JSON config file (flags override)");
        log_b.bind("n", n, [&](const json& v) { log_o.n = v.get<double>(); });
        log_b.bind("alpha", a, [&](const json& v) { log_o.alpha = v.get<double>(); });
        log_b.bind("c0", c, [&](const json& v) { log_o.c0 = v.get<double>(); });
        log_b.bind("dt", d, [&](const json& v) { log_o.dt = v.get<double>(); });
        log_b.bind("t_end", t, [&](const json& v) { log_o.t_end = v.get<double>(); });
        log_b.bind("out", o, [&](const json& v) { log_o.out = v.get<std::string>(); });
    }

    // grow
    auto* cgrow = app.add_subcommand("grow", "grow a lexical-style network and write it");
    {
        auto* mo = cgrow->add_option("--model", grow_o.model, "motter|dm|st");
        auto* nf = cgrow->add_option("--n-final", grow_o.n_final, "final node count");
        auto* m = cgrow->add_option("--m", grow_o.m, "links per arriving node");
        auto* c = cgrow->add_option("--c", grow_o.c, "dm old-old link coefficient");
        auto* ue = cgrow->add_option("--utility-exponent", grow_o.utility_exponent,
                                     "st Zipf utility exponent");
        auto* se = cgrow->add_option("--seed", grow_o.seed, "RNG seed");
        auto* o = cgrow->add_option("--out", grow_o.out, "output edge-list path");
        cgrow->add_option("--config", grow_cfg, "JSON config file (flags override)");
        grow_b.bind("model", mo, [&](const json& v) { grow_o.model = v.get<std::string>(); });
        grow_b.bind("n_final", nf, [&](const json& v) { grow_o.n_final = v.get<std::uint32_t>(); });
        grow_b.bind("m", m, [&](const json& v) { grow_o.m = v.get<std::uint32_t>(); });
        grow_b.bind("c", c, [&](const json& v) { grow_o.c = v.get<double>(); });
        grow_b.bind("utility_exponent", ue,
                    [&](const json& v) { grow_o.utility_exponent = v.get<double>(); });
        grow_b.bind("seed", se, [&](const json& v) { grow_o.seed = v.get<std::uint64_t>(); });
        grow_b.bind("out", o, [&](const json& v) { grow_o.out = v.get<std::string>(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cgen->parsed()) {
            if (!gen_cfg.empty()) gen_b.merge(load_config(gen_cfg));
            return cmd_generate(gen_o);
        }
        if (can->parsed()) {
            if (!an_cfg.empty()) an_b.merge(load_config(an_cfg));
            return cmd_analyze(an_o);
        }
        if (csim->parsed()) {
            if (!sim_cfg.empty()) sim_b.merge(load_config(sim_cfg));
            return cmd_simulate(sim_o);
        }
        if (cswp->parsed()) {
            if (!sweep_cfg.empty()) sweep_b.merge(load_config(sweep_cfg));
            return cmd_sweep(sweep_o);
        }
        if (clog->parsed()) {
            if (!log_cfg.empty()) log_b.merge(load_config(log_cfg));
            return cmd_logistic(log_o);
        }
        if (cgrow->parsed()) {
            if (!grow_cfg.empty()) grow_b.merge(load_config(grow_cfg));
            return cmd_grow(grow_o);
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const EdgeListError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
