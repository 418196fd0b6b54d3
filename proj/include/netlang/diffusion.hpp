#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "netlang/graph.hpp"
#include "netlang/rng.hpp"

namespace netlang {

// The two competing forms: U is the incumbent, C the innovation.
enum class Variant : std::uint8_t { U = 0, C = 1 };

// Life stages 1..5: stage 1 learns only, stage 2 learns and influences,
// stages 3-5 are adults.
struct Agent {
    Variant variant = Variant::U;
    std::uint8_t stage = 1;
};

struct Population {
    const Graph* graph = nullptr;
    std::vector<Agent> agents;

    // Stages assigned cyclically by node index: balanced partition with any
    // remainder going to the lowest stages. Everyone starts with U.
    static Population make(const Graph& g);

    std::uint32_t count_c() const;
};

struct SeedingSpec {
    std::uint32_t innovators = 1;
    std::vector<int> eligible_stages = {3, 4, 5};  // children do not innovate
};

// Sets exactly `innovators` uniformly chosen eligible agents to C.
// Throws when the eligible pool is too small.
void seed_innovators(Population& pop, const SeedingSpec& seeding, Rng& rng);

struct StaticParams {
    double alpha = 0.5;
    long t_max = 10000;  // micro-steps
    std::uint64_t seed = 0;
};

struct InteractionParams {
    double alpha_adult = 0.001;
    double alpha_child = 0.5;
    int k_interactions = 10;  // expected interactions per agent per macro step
    long t_max = 1000;        // macro steps
    std::uint64_t seed = 0;
};

struct LearningParams {
    double beta = 1.0;  // functional bias f(C)/f(U), with f(U) = 1
    double alpha_adult = 0.001;
    long t_max = 1000;  // macro steps
    std::uint64_t seed = 0;
    bool synchronous = true;  // learners all evaluate against the phase-start state
};

enum class OutcomeKind { completed, extinct, plateau };

struct Outcome {
    OutcomeKind kind = OutcomeKind::plateau;
    long step = 0;
    double final_fraction = 0.0;
};

struct Trajectory {
    std::vector<std::pair<long, std::uint32_t>> samples;  // (step, count_C)
    Outcome outcome;
    std::uint32_t population = 0;
};

using StepObserver = std::function<void(const Population&, long step)>;

// Static interaction model: one micro-step selects a uniform random pair of
// distinct agents; if they are connected and use different forms, the U agent
// adopts C with probability alpha. Change is unidirectional, so the run
// either Completes or hits t_max as a Plateau. The trajectory is sampled
// every n micro-steps and at termination.
Trajectory run_interaction_static(const Graph& g, const StaticParams& params,
                                  const SeedingSpec& seeding);

// Age-structured interaction model. Each macro step gives every agent
// k_interactions interactions with uniformly chosen neighbors (stage-1
// agents exert no influence; a discordant listener adopts with alpha_child
// for stages 1-2, alpha_adult otherwise), then ages every agent, replacing
// stage-5 agents by fresh U newborns.
Trajectory run_interaction_aged(const Graph& g, const InteractionParams& params,
                                const SeedingSpec& seeding, const StepObserver& observer = {});

// Age-structured learning model: learners (stages 1-2) adopt the variant with
// the larger impact = (#teacher neighbors using it) * functional value;
// adults re-evaluate with probability alpha_adult. Ties keep the current
// variant. Aging as in the interaction model.
Trajectory run_learning_aged(const Graph& g, const LearningParams& params,
                             const SeedingSpec& seeding, const StepObserver& observer = {});

// The pure decision rule used by the learning model; exposed for testing.
// Scaling both functional values by a common positive constant cannot change
// the outcome.
Variant impact_choice(std::uint32_t teachers_u, std::uint32_t teachers_c, double f_u, double f_c,
                      Variant current);

// Logistic reference curve dc/dt = alpha * c * (n - c), integrated with a
// fixed-step 4th-order scheme, alongside the closed-form solution.
struct LogisticCurve {
    std::vector<double> t;
    std::vector<double> numeric;
    std::vector<double> closed_form;
};

LogisticCurve logistic_reference(double n, double alpha, double c0, double dt, double t_end);

}  // namespace netlang
