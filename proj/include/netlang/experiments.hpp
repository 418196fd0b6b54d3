#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "netlang/diffusion.hpp"
#include "netlang/generators.hpp"

namespace netlang {

enum class Model { static_interaction, interaction_aged, learning_aged };

const char* model_name(Model m);
bool parse_model(const std::string& name, Model& out);

using ModelParams = std::variant<StaticParams, InteractionParams, LearningParams>;

struct BatchConfig {
    Model model = Model::static_interaction;
    GenSpec gen;
    ModelParams params;
    SeedingSpec seeding;
    int runs = 10;
    std::uint64_t base_seed = 0;
    bool regenerate_graph_per_run = true;  // fresh topology draw per run
    bool keep_trajectories = false;
};

struct RunResult {
    int run = 0;
    Outcome outcome;
};

struct BatchStats {
    double success_probability = 0.0;
    std::optional<double> mean_completion_steps;
    std::optional<double> std_completion_steps;  // sample std; absent with < 2 completions
    double mean_final_reach = 0.0;
    std::vector<RunResult> outcomes;          // indexed by run
    std::vector<Trajectory> trajectories;     // only when keep_trajectories
};

// Worker pool width: NETLANG_THREADS when set, machine parallelism otherwise.
int worker_count();

// R independent runs seeded base_seed XOR run index; run i's graph and
// simulation streams are derived from that run seed. Results are merged by
// run index, so parallel and serial execution agree exactly.
BatchStats run_batch(const BatchConfig& cfg);
BatchStats run_batch(const BatchConfig& cfg, int threads);

// Rewrites gen for another family, mapping the target mean degree onto the
// family's own parameters (scale-free: m = max(1, k/2), m0 = m).
GenSpec with_family(GenSpec gen, Family family);

std::vector<std::string> sweep_axes(Model model);

struct SweepRow {
    double value = 0.0;
    Family family = Family::regular_ring;
    BatchConfig config;
    BatchStats stats;
};

// One run_batch per (axis value, family). Unknown axes throw, naming the
// valid ones for the configured model.
std::vector<SweepRow> sweep(const BatchConfig& base, const std::string& axis,
                            const std::vector<double>& values, const std::vector<Family>& families);

enum class DynamicsClass { sharp_s_curve, gradual_linear };

// Peak-step share = largest increment between consecutive samples divided by
// the population; sharp when >= threshold. Only Completed trajectories are
// classifiable.
DynamicsClass classify_dynamics(const Trajectory& traj, double threshold = 0.25);

// Stats CSV: model, topology, n, mean_degree, alpha fields, beta, innovators,
// runs, success_prob, completion stats, mean_final_reach (+ generations).
std::string stats_csv_header();
std::string stats_csv_row(const BatchConfig& cfg, const BatchStats& stats);

// Trajectory CSV: run, step, count_c, fraction_c.
void write_trajectories_csv(std::ostream& os, const BatchStats& stats);

}  // namespace netlang
