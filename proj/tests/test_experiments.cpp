#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "netlang/experiments.hpp"

using namespace netlang;

namespace {

BatchConfig learning_config() {
    BatchConfig cfg;
    cfg.model = Model::learning_aged;
    cfg.gen = {Family::regular_ring, 400, 20, 0.01, 0, 0, 1, 100};
    LearningParams p;
    p.beta = 10.0;
    p.alpha_adult = 0.001;
    p.t_max = 500;
    cfg.params = p;
    cfg.seeding.innovators = 10;
    cfg.runs = 4;
    cfg.base_seed = 12;
    return cfg;
}

}  // namespace

TEST_CASE("run_batch with R=1 reduces to a single run") {
    BatchConfig cfg = learning_config();
    cfg.runs = 1;
    cfg.keep_trajectories = true;
    auto stats = run_batch(cfg);
    REQUIRE(stats.outcomes.size() == 1);
    REQUIRE(stats.trajectories.size() == 1);

    // reproduce the run by hand with the same derived seeds
    GenSpec gen = cfg.gen;
    gen.seed = mix_seed(cfg.base_seed ^ 0ULL, 2);
    Graph g = generate(gen);
    LearningParams p = std::get<LearningParams>(cfg.params);
    p.seed = mix_seed(cfg.base_seed ^ 0ULL, 1);
    auto traj = run_learning_aged(g, p, cfg.seeding);
    CHECK(traj.samples == stats.trajectories[0].samples);
    CHECK(traj.outcome.step == stats.outcomes[0].outcome.step);
}

TEST_CASE("static alpha=0 batch: zero success, reach = I/n") {
    BatchConfig cfg;
    cfg.model = Model::static_interaction;
    cfg.gen = {Family::complete, 100, 0, 0, 0, 0, 1, 100};
    StaticParams p;
    p.alpha = 0.0;
    p.t_max = 500;
    cfg.params = p;
    cfg.seeding.innovators = 5;
    cfg.runs = 8;
    cfg.base_seed = 3;
    auto stats = run_batch(cfg);
    CHECK(stats.success_probability == doctest::Approx(0.0));
    CHECK_FALSE(stats.mean_completion_steps.has_value());
    CHECK(stats.mean_final_reach == doctest::Approx(0.05));
}

TEST_CASE("learning batch with strong bias completes everywhere") {
    auto stats = run_batch(learning_config());
    CHECK(stats.success_probability == doctest::Approx(1.0));
    CHECK(stats.mean_final_reach == doctest::Approx(1.0));
    REQUIRE(stats.mean_completion_steps.has_value());
    CHECK(*stats.mean_completion_steps > 0);
}

TEST_CASE("success probability recounts exactly from per-run outcomes") {
    BatchConfig cfg = learning_config();
    LearningParams p = std::get<LearningParams>(cfg.params);
    p.beta = 4.0;  // mixed outcomes at this bias
    cfg.params = p;
    cfg.runs = 30;
    auto stats = run_batch(cfg);
    int completed = 0;
    for (const auto& r : stats.outcomes)
        if (r.outcome.kind == OutcomeKind::completed) ++completed;
    CHECK(stats.success_probability == doctest::Approx(completed / 30.0));
}

TEST_CASE("batches are deterministic and independent of the worker count") {
    BatchConfig cfg = learning_config();
    LearningParams p = std::get<LearningParams>(cfg.params);
    p.beta = 5.0;
    cfg.params = p;
    cfg.runs = 16;
    cfg.keep_trajectories = true;

    auto serial = run_batch(cfg, 1);
    auto parallel = run_batch(cfg, 8);
    auto again = run_batch(cfg, 8);
    REQUIRE(serial.outcomes.size() == parallel.outcomes.size());
    for (std::size_t i = 0; i < serial.outcomes.size(); ++i) {
        CHECK(serial.outcomes[i].outcome.kind == parallel.outcomes[i].outcome.kind);
        CHECK(serial.outcomes[i].outcome.step == parallel.outcomes[i].outcome.step);
        CHECK(serial.trajectories[i].samples == parallel.trajectories[i].samples);
        CHECK(parallel.trajectories[i].samples == again.trajectories[i].samples);
    }
    CHECK(serial.success_probability == parallel.success_probability);
    CHECK(serial.mean_final_reach == parallel.mean_final_reach);
}

TEST_CASE("fixed-graph mode reuses one instance") {
    BatchConfig cfg = learning_config();
    cfg.regenerate_graph_per_run = false;
    cfg.runs = 3;
    auto stats = run_batch(cfg);
    CHECK(stats.outcomes.size() == 3);
}

TEST_CASE("sweep emits one row per (family, value) and validates the axis") {
    BatchConfig cfg = learning_config();
    cfg.runs = 2;
    const std::vector<double> values{4, 10};
    const std::vector<Family> fams{Family::regular_ring, Family::random_er};
    auto rows = sweep(cfg, "beta", values, fams);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].family == Family::regular_ring);
    CHECK(rows[0].value == doctest::Approx(4.0));
    CHECK(rows[3].family == Family::random_er);
    CHECK(rows[3].value == doctest::Approx(10.0));

    CHECK_THROWS_WITH_AS(sweep(cfg, "gamma", values, fams),
                         "unknown sweep axis 'gamma' for model learning; valid axes: beta "
                         "alpha_adult innovators",
                         std::invalid_argument);
}

TEST_CASE("sweep success is monotone in beta up to binomial noise") {
    BatchConfig cfg = learning_config();
    cfg.runs = 60;
    cfg.base_seed = 9;
    const std::vector<double> values{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    auto rows = sweep(cfg, "beta", values, {Family::regular_ring});
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double p_prev = rows[i - 1].stats.success_probability;
        const double p_cur = rows[i].stats.success_probability;
        const double sigma = std::sqrt(std::max(p_prev * (1 - p_prev), p_cur * (1 - p_cur)) / 60.0);
        CHECK(p_cur >= p_prev - 2.0 * sigma - 1e-12);
    }
}

TEST_CASE("classify_dynamics") {
    Trajectory jump;
    jump.population = 400;
    jump.samples = {{0, 0}, {1, 400}};
    jump.outcome = {OutcomeKind::completed, 1, 1.0};
    CHECK(classify_dynamics(jump) == DynamicsClass::sharp_s_curve);

    Trajectory staircase;
    staircase.population = 400;
    for (long s = 0; s <= 40; ++s)
        staircase.samples.push_back({s, static_cast<std::uint32_t>(10 * s)});
    staircase.outcome = {OutcomeKind::completed, 40, 1.0};
    CHECK(classify_dynamics(staircase) == DynamicsClass::gradual_linear);

    Trajectory incomplete = staircase;
    incomplete.outcome = {OutcomeKind::plateau, 40, 0.9};
    CHECK_THROWS_AS(classify_dynamics(incomplete), std::invalid_argument);

    // threshold is configurable
    CHECK(classify_dynamics(staircase, 0.02) == DynamicsClass::sharp_s_curve);
}

TEST_CASE("stats csv shape") {
    BatchConfig cfg = learning_config();
    auto stats = run_batch(cfg);
    const std::string header = stats_csv_header();
    const std::string row = stats_csv_row(cfg, stats);
    CHECK(std::count(header.begin(), header.end(), ',') ==
          std::count(row.begin(), row.end(), ','));
    CHECK(row.rfind("learning,regular,400,20,", 0) == 0);

    cfg.keep_trajectories = true;
    auto with_traj = run_batch(cfg);
    std::ostringstream os;
    write_trajectories_csv(os, with_traj);
    const std::string out = os.str();
    CHECK(out.rfind("run,step,count_c,fraction_c\n", 0) == 0);
    CHECK(out.back() == '\n');
}

TEST_CASE("worker_count honors NETLANG_THREADS") {
    setenv("NETLANG_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    unsetenv("NETLANG_THREADS");
    CHECK(worker_count() >= 1);
}
