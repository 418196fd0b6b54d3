#include "netlang/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netlang {

Population Population::make(const Graph& g) {
    Population pop;
    pop.graph = &g;
    pop.agents.resize(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i)
        pop.agents[i].stage = static_cast<std::uint8_t>(i % 5 + 1);
    return pop;
}

std::uint32_t Population::count_c() const {
    std::uint32_t c = 0;
    for (const auto& a : agents)
        if (a.variant == Variant::C) ++c;
    return c;
}

void seed_innovators(Population& pop, const SeedingSpec& seeding, Rng& rng) {
    std::vector<NodeId> eligible;
    for (NodeId i = 0; i < pop.agents.size(); ++i) {
        const int stage = pop.agents[i].stage;
        if (std::find(seeding.eligible_stages.begin(), seeding.eligible_stages.end(), stage) !=
            seeding.eligible_stages.end())
            eligible.push_back(i);
    }
    if (seeding.innovators > eligible.size())
        throw std::invalid_argument("requested " + std::to_string(seeding.innovators) +
                                    " innovators but only " + std::to_string(eligible.size()) +
                                    " agents are in eligible stages");
    for (std::uint32_t i = 0; i < seeding.innovators; ++i) {
        const std::size_t j = i + rng.index(eligible.size() - i);
        std::swap(eligible[i], eligible[j]);
        pop.agents[eligible[i]].variant = Variant::C;
    }
}

namespace {

void push_sample(Trajectory& traj, long step, std::uint32_t count) {
    if (!traj.samples.empty() && traj.samples.back().first == step) return;
    traj.samples.emplace_back(step, count);
}

void age_population(Population& pop, std::uint32_t& count_c) {
    for (auto& a : pop.agents) {
        if (a.stage == 5) {
            if (a.variant == Variant::C) --count_c;
            a.stage = 1;
            a.variant = Variant::U;
        } else {
            ++a.stage;
        }
    }
}

}  // namespace

Trajectory run_interaction_static(const Graph& g, const StaticParams& params,
                                  const SeedingSpec& seeding) {
    if (params.alpha < 0.0 || params.alpha > 1.0)
        throw std::invalid_argument("alpha must be in [0,1]");
    const NodeId n = g.node_count();
    if (n < 2) throw std::invalid_argument("simulation needs at least 2 agents");

    Rng rng(params.seed);
    Population pop = Population::make(g);
    seed_innovators(pop, seeding, rng);
    std::uint32_t count = pop.count_c();

    Trajectory traj;
    traj.population = n;
    push_sample(traj, 0, count);

    for (long step = 1; step <= params.t_max; ++step) {
        // a uniform pair of distinct agents; only connected pairs interact
        NodeId u = static_cast<NodeId>(rng.index(n));
        NodeId v = static_cast<NodeId>(rng.index(n - 1));
        if (v >= u) ++v;
        if (g.has_edge(u, v)) {
            Agent& au = pop.agents[u];
            Agent& av = pop.agents[v];
            if (au.variant != av.variant) {
                Agent& listener = au.variant == Variant::U ? au : av;
                if (rng.chance(params.alpha)) {
                    listener.variant = Variant::C;
                    ++count;
                }
            }
        }
        if (count == n) {
            push_sample(traj, step, count);
            traj.outcome = {OutcomeKind::completed, step, 1.0};
            return traj;
        }
        if (step % n == 0) push_sample(traj, step, count);
    }
    push_sample(traj, params.t_max, count);
    traj.outcome = {OutcomeKind::plateau, params.t_max,
                    static_cast<double>(count) / static_cast<double>(n)};
    return traj;
}

Trajectory run_interaction_aged(const Graph& g, const InteractionParams& params,
                                const SeedingSpec& seeding, const StepObserver& observer) {
    if (params.alpha_adult < 0.0 || params.alpha_adult > 1.0 || params.alpha_child < 0.0 ||
        params.alpha_child > 1.0)
        throw std::invalid_argument("adoption probabilities must be in [0,1]");
    if (params.k_interactions < 1)
        throw std::invalid_argument("k_interactions must be >= 1");
    const NodeId n = g.node_count();
    if (n < 2 || g.edge_count() == 0)
        throw std::invalid_argument("simulation needs at least 2 connected agents");

    Rng rng(params.seed);
    Population pop = Population::make(g);
    seed_innovators(pop, seeding, rng);
    std::uint32_t count = pop.count_c();

    Trajectory traj;
    traj.population = n;
    push_sample(traj, 0, count);

    std::vector<Variant> snapshot(n);
    for (long step = 1; step <= params.t_max; ++step) {
        // Every agent initiates k_interactions interactions with uniformly
        // chosen neighbors, interleaved round-robin across the population.
        // All draws see the variants from the start of the macro step, so
        // within-step adoptions do not cascade; each exposure of a listener
        // is an independent adoption chance.
        for (NodeId i = 0; i < n; ++i) snapshot[i] = pop.agents[i].variant;
        for (int rep = 0; rep < params.k_interactions; ++rep) {
            for (NodeId x = 0; x < n; ++x) {
                const auto& nb = g.neighbors(x);
                const NodeId y = nb[rng.index(nb.size())];
                if (snapshot[x] == snapshot[y]) continue;
                const NodeId speaker = snapshot[x] == Variant::C ? x : y;
                const NodeId listener = speaker == x ? y : x;
                if (pop.agents[speaker].stage == 1) continue;  // infants do not influence
                if (pop.agents[listener].variant == Variant::C) continue;  // already adopted
                const double alpha =
                    pop.agents[listener].stage <= 2 ? params.alpha_child : params.alpha_adult;
                if (rng.chance(alpha)) {
                    pop.agents[listener].variant = Variant::C;
                    ++count;
                }
            }
        }
        if (count == n) {
            push_sample(traj, step, count);
            traj.outcome = {OutcomeKind::completed, step, 1.0};
            return traj;
        }
        age_population(pop, count);
        push_sample(traj, step, count);
        if (observer) observer(pop, step);
        if (count == 0) {
            traj.outcome = {OutcomeKind::extinct, step, 0.0};
            return traj;
        }
    }
    traj.outcome = {OutcomeKind::plateau, params.t_max,
                    static_cast<double>(count) / static_cast<double>(n)};
    return traj;
}

Variant impact_choice(std::uint32_t teachers_u, std::uint32_t teachers_c, double f_u, double f_c,
                      Variant current) {
    const double impact_u = static_cast<double>(teachers_u) * f_u;
    const double impact_c = static_cast<double>(teachers_c) * f_c;
    if (impact_c > impact_u) return Variant::C;
    if (impact_u > impact_c) return Variant::U;
    return current;
}

Trajectory run_learning_aged(const Graph& g, const LearningParams& params,
                             const SeedingSpec& seeding, const StepObserver& observer) {
    if (params.beta < 0.0) throw std::invalid_argument("functional bias beta must be >= 0");
    if (params.alpha_adult < 0.0 || params.alpha_adult > 1.0)
        throw std::invalid_argument("alpha_adult must be in [0,1]");
    const NodeId n = g.node_count();
    if (n < 2 || g.edge_count() == 0)
        throw std::invalid_argument("simulation needs at least 2 connected agents");

    Rng rng(params.seed);
    Population pop = Population::make(g);
    seed_innovators(pop, seeding, rng);

    Trajectory traj;
    traj.population = n;
    push_sample(traj, 0, pop.count_c());

    std::vector<Variant> snapshot(n);
    auto evaluate = [&](NodeId i, const std::vector<Variant>& state) {
        std::uint32_t tu = 0, tc = 0;
        for (NodeId v : g.neighbors(i)) {
            if (pop.agents[v].stage >= 2) {
                if (state[v] == Variant::C) ++tc;
                else ++tu;
            }
        }
        return impact_choice(tu, tc, 1.0, params.beta, pop.agents[i].variant);
    };

    for (long step = 1; step <= params.t_max; ++step) {
        // learning phase: stages 1-2, synchronous against the phase-start state
        for (NodeId i = 0; i < n; ++i) snapshot[i] = pop.agents[i].variant;
        for (NodeId i = 0; i < n; ++i) {
            if (pop.agents[i].stage <= 2) {
                const Variant next = evaluate(i, snapshot);
                if (params.synchronous) pop.agents[i].variant = next;
                else pop.agents[i].variant = (snapshot[i] = next);
            }
        }
        // adult phase: stages 3-5 re-evaluate with probability alpha_adult
        for (NodeId i = 0; i < n; ++i) snapshot[i] = pop.agents[i].variant;
        for (NodeId i = 0; i < n; ++i) {
            const bool roll = rng.chance(params.alpha_adult);
            if (pop.agents[i].stage >= 3 && roll)
                pop.agents[i].variant = evaluate(i, snapshot);
        }

        std::uint32_t count = pop.count_c();
        if (count == n) {
            push_sample(traj, step, count);
            traj.outcome = {OutcomeKind::completed, step, 1.0};
            return traj;
        }
        age_population(pop, count);
        push_sample(traj, step, count);
        if (observer) observer(pop, step);
        if (count == 0) {
            traj.outcome = {OutcomeKind::extinct, step, 0.0};
            return traj;
        }
    }
    const std::uint32_t count = pop.count_c();
    traj.outcome = {OutcomeKind::plateau, params.t_max,
                    static_cast<double>(count) / static_cast<double>(n)};
    return traj;
}

LogisticCurve logistic_reference(double n, double alpha, double c0, double dt, double t_end) {
    if (!(c0 > 0.0) || !(c0 < n)) throw std::invalid_argument("needs 0 < c0 < n");
    if (!(dt > 0.0) || !(t_end >= 0.0)) throw std::invalid_argument("needs dt > 0 and t_end >= 0");

    const auto f = [&](double c) { return alpha * c * (n - c); };
    const double ratio = (n - c0) / c0;

    LogisticCurve curve;
    const std::size_t steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-12));
    curve.t.reserve(steps + 1);
    curve.numeric.reserve(steps + 1);
    curve.closed_form.reserve(steps + 1);

    double c = c0;
    for (std::size_t i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        curve.t.push_back(t);
        curve.numeric.push_back(c);
        curve.closed_form.push_back(n / (1.0 + ratio * std::exp(-alpha * n * t)));

        const double k1 = f(c);
        const double k2 = f(c + 0.5 * dt * k1);
        const double k3 = f(c + 0.5 * dt * k2);
        const double k4 = f(c + dt * k3);
        c += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return curve;
}

}  // namespace netlang
