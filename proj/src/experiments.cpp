#include "netlang/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace netlang {

const char* model_name(Model m) {
    switch (m) {
        case Model::static_interaction: return "static";
        case Model::interaction_aged: return "interaction";
        case Model::learning_aged: return "learning";
    }
    return "?";
}

bool parse_model(const std::string& name, Model& out) {
    if (name == "static") out = Model::static_interaction;
    else if (name == "interaction") out = Model::interaction_aged;
    else if (name == "learning") out = Model::learning_aged;
    else return false;
    return true;
}

int worker_count() {
    if (const char* env = std::getenv("NETLANG_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

// graph / simulation seed streams per run
constexpr std::uint64_t kSimStream = 1;
constexpr std::uint64_t kGraphStream = 2;

Trajectory run_one(const BatchConfig& cfg, const Graph& shared_graph, int run) {
    const std::uint64_t run_seed = cfg.base_seed ^ static_cast<std::uint64_t>(run);
    Graph local;
    const Graph* graph = &shared_graph;
    if (cfg.regenerate_graph_per_run) {
        GenSpec gen = cfg.gen;
        gen.seed = mix_seed(run_seed, kGraphStream);
        local = generate(gen);
        graph = &local;
    }
    const std::uint64_t sim_seed = mix_seed(run_seed, kSimStream);
    switch (cfg.model) {
        case Model::static_interaction: {
            StaticParams p = std::get<StaticParams>(cfg.params);
            p.seed = sim_seed;
            return run_interaction_static(*graph, p, cfg.seeding);
        }
        case Model::interaction_aged: {
            InteractionParams p = std::get<InteractionParams>(cfg.params);
            p.seed = sim_seed;
            return run_interaction_aged(*graph, p, cfg.seeding);
        }
        case Model::learning_aged: {
            LearningParams p = std::get<LearningParams>(cfg.params);
            p.seed = sim_seed;
            return run_learning_aged(*graph, p, cfg.seeding);
        }
    }
    throw std::logic_error("unknown model");
}

}  // namespace

BatchStats run_batch(const BatchConfig& cfg) { return run_batch(cfg, worker_count()); }

BatchStats run_batch(const BatchConfig& cfg, int threads) {
    if (cfg.runs < 1) throw std::invalid_argument("batch needs runs >= 1");
    if (threads < 1) threads = 1;

    Graph shared;
    if (!cfg.regenerate_graph_per_run) shared = generate(cfg.gen);

    std::vector<Trajectory> trajectories(cfg.runs);
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::string first_error;

    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= cfg.runs) return;
            try {
                trajectories[i] = run_one(cfg, shared, i);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error.empty())
                    first_error = "run " + std::to_string(i) + ": " + e.what();
                return;
            }
        }
    };

    const int pool = std::min(threads, cfg.runs);
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> team;
        team.reserve(pool);
        for (int i = 0; i < pool; ++i) team.emplace_back(worker);
        for (auto& t : team) t.join();
    }
    if (!first_error.empty()) throw std::runtime_error(first_error);

    BatchStats stats;
    stats.outcomes.reserve(cfg.runs);
    double reach_sum = 0.0;
    std::vector<double> completions;
    for (int i = 0; i < cfg.runs; ++i) {
        const Outcome& out = trajectories[i].outcome;
        stats.outcomes.push_back({i, out});
        reach_sum += out.final_fraction;
        if (out.kind == OutcomeKind::completed) completions.push_back(static_cast<double>(out.step));
    }
    stats.success_probability = static_cast<double>(completions.size()) / cfg.runs;
    stats.mean_final_reach = reach_sum / cfg.runs;
    if (!completions.empty()) {
        double mean = 0.0;
        for (double x : completions) mean += x;
        mean /= completions.size();
        stats.mean_completion_steps = mean;
        if (completions.size() >= 2) {
            double ss = 0.0;
            for (double x : completions) ss += (x - mean) * (x - mean);
            stats.std_completion_steps = std::sqrt(ss / (completions.size() - 1));
        }
    }
    if (cfg.keep_trajectories) stats.trajectories = std::move(trajectories);
    return stats;
}

GenSpec with_family(GenSpec gen, Family family) {
    gen.family = family;
    if (family == Family::scale_free) {
        gen.m = std::max<NodeId>(1, gen.k / 2);
        gen.m0 = gen.m;
    }
    return gen;
}

std::vector<std::string> sweep_axes(Model model) {
    switch (model) {
        case Model::static_interaction: return {"alpha", "innovators"};
        case Model::interaction_aged:
            return {"alpha_adult", "alpha_child", "k_interactions", "innovators"};
        case Model::learning_aged: return {"beta", "alpha_adult", "innovators"};
    }
    return {};
}

namespace {

void apply_axis(BatchConfig& cfg, const std::string& axis, double value) {
    if (axis == "innovators") {
        cfg.seeding.innovators = static_cast<std::uint32_t>(std::llround(value));
        return;
    }
    if (auto* p = std::get_if<StaticParams>(&cfg.params)) {
        if (axis == "alpha") {
            p->alpha = value;
            return;
        }
    } else if (auto* p = std::get_if<InteractionParams>(&cfg.params)) {
        if (axis == "alpha_adult") {
            p->alpha_adult = value;
            return;
        }
        if (axis == "alpha_child") {
            p->alpha_child = value;
            return;
        }
        if (axis == "k_interactions") {
            p->k_interactions = static_cast<int>(std::llround(value));
            return;
        }
    } else if (auto* p = std::get_if<LearningParams>(&cfg.params)) {
        if (axis == "beta") {
            p->beta = value;
            return;
        }
        if (axis == "alpha_adult") {
            p->alpha_adult = value;
            return;
        }
    }
    std::ostringstream os;
    os << "unknown sweep axis '" << axis << "' for model " << model_name(cfg.model)
       << "; valid axes:";
    for (const auto& a : sweep_axes(cfg.model)) os << ' ' << a;
    throw std::invalid_argument(os.str());
}

}  // namespace

std::vector<SweepRow> sweep(const BatchConfig& base, const std::string& axis,
                            const std::vector<double>& values,
                            const std::vector<Family>& families) {
    if (values.empty()) throw std::invalid_argument("sweep needs at least one axis value");
    if (families.empty()) throw std::invalid_argument("sweep needs at least one network family");
    {
        BatchConfig probe = base;  // validate the axis before any work
        apply_axis(probe, axis, values.front());
    }
    std::vector<SweepRow> rows;
    rows.reserve(values.size() * families.size());
    for (Family family : families) {
        for (double value : values) {
            BatchConfig cfg = base;
            cfg.gen = with_family(cfg.gen, family);
            apply_axis(cfg, axis, value);
            SweepRow row;
            row.value = value;
            row.family = family;
            row.config = cfg;
            row.stats = run_batch(cfg);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

DynamicsClass classify_dynamics(const Trajectory& traj, double threshold) {
    if (traj.outcome.kind != OutcomeKind::completed)
        throw std::invalid_argument("only completed trajectories are classifiable");
    if (traj.population == 0 || traj.samples.size() < 2)
        throw std::invalid_argument("trajectory too short to classify");
    std::uint32_t peak = 0;
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        const auto prev = traj.samples[i - 1].second;
        const auto cur = traj.samples[i].second;
        if (cur > prev) peak = std::max(peak, cur - prev);
    }
    const double share = static_cast<double>(peak) / static_cast<double>(traj.population);
    return share >= threshold ? DynamicsClass::sharp_s_curve : DynamicsClass::gradual_linear;
}

namespace {

std::string fmt(double x) {
    if (std::isnan(x)) return "";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

double spec_mean_degree(const GenSpec& gen) {
    switch (gen.family) {
        case Family::complete: return static_cast<double>(gen.n) - 1.0;
        case Family::regular_ring:
        case Family::small_world:
        case Family::random_er: return static_cast<double>(gen.k);
        case Family::scale_free: {
            const double m_edges = static_cast<double>(gen.m0) +
                                   static_cast<double>(gen.m) * (gen.n - gen.m0);
            return 2.0 * m_edges / static_cast<double>(gen.n);
        }
    }
    return 0.0;
}

}  // namespace

std::string stats_csv_header() {
    return "model,topology,n,mean_degree,alpha,alpha_adult,alpha_child,k_interactions,beta,"
           "innovators,runs,success_prob,mean_completion_steps,std_completion_steps,"
           "mean_final_reach,mean_completion_generations";
}

std::string stats_csv_row(const BatchConfig& cfg, const BatchStats& stats) {
    std::ostringstream os;
    os << model_name(cfg.model) << ',' << family_name(cfg.gen.family) << ',' << cfg.gen.n << ','
       << fmt(spec_mean_degree(cfg.gen)) << ',';
    if (const auto* p = std::get_if<StaticParams>(&cfg.params)) {
        os << fmt(p->alpha) << ",,,,";
    } else if (const auto* p = std::get_if<InteractionParams>(&cfg.params)) {
        os << ',' << fmt(p->alpha_adult) << ',' << fmt(p->alpha_child) << ','
           << p->k_interactions << ',';
    } else if (const auto* p = std::get_if<LearningParams>(&cfg.params)) {
        os << ',' << fmt(p->alpha_adult) << ",,," << fmt(p->beta);
    }
    os << ',' << cfg.seeding.innovators << ',' << cfg.runs << ','
       << fmt(stats.success_probability) << ',';
    if (stats.mean_completion_steps) os << fmt(*stats.mean_completion_steps);
    os << ',';
    if (stats.std_completion_steps) os << fmt(*stats.std_completion_steps);
    os << ',' << fmt(stats.mean_final_reach) << ',';
    if (stats.mean_completion_steps) os << fmt(*stats.mean_completion_steps / 5.0);
    return os.str();
}

void write_trajectories_csv(std::ostream& os, const BatchStats& stats) {
    os << "run,step,count_c,fraction_c\n";
    for (std::size_t r = 0; r < stats.trajectories.size(); ++r) {
        const Trajectory& traj = stats.trajectories[r];
        for (const auto& [step, count] : traj.samples) {
            os << r << ',' << step << ',' << count << ','
               << fmt(static_cast<double>(count) / static_cast<double>(traj.population)) << '\n';
        }
    }
}

}  // namespace netlang
