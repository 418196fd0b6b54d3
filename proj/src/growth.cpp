#include "netlang/growth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "netlang/rng.hpp"

namespace netlang {

const char* growth_model_name(GrowthModel m) {
    switch (m) {
        case GrowthModel::motter: return "motter";
        case GrowthModel::dm: return "dm";
        case GrowthModel::st: return "st";
    }
    return "?";
}

bool parse_growth_model(const std::string& name, GrowthModel& out) {
    if (name == "motter") out = GrowthModel::motter;
    else if (name == "dm") out = GrowthModel::dm;
    else if (name == "st") out = GrowthModel::st;
    else return false;
    return true;
}

namespace {

void validate(const GrowthSpec& spec) {
    if (spec.m < 1) throw std::invalid_argument("growth needs m >= 1");
    if (spec.n_final <= spec.m)
        throw std::invalid_argument("growth needs n_final > m");
    if (spec.c < 0.0) throw std::invalid_argument("old-node link coefficient c must be >= 0");
    if (spec.utility_exponent < 0.0)
        throw std::invalid_argument("utility exponent must be >= 0");
}

// Picks up to `want` distinct targets: uniform from `pool` first, then
// uniform over all of [0, existing) once the pool is used up. `picked` must
// start empty and receives the chosen targets.
void pick_targets(NodeId existing, NodeId want, const std::vector<NodeId>& pool, Rng& rng,
                  std::vector<NodeId>& picked) {
    std::vector<NodeId> candidates = pool;
    while (picked.size() < want && !candidates.empty()) {
        const std::size_t i = rng.index(candidates.size());
        const NodeId t = candidates[i];
        candidates[i] = candidates.back();
        candidates.pop_back();
        if (std::find(picked.begin(), picked.end(), t) == picked.end()) picked.push_back(t);
    }
    while (picked.size() < want && picked.size() < existing) {
        const NodeId t = static_cast<NodeId>(rng.index(existing));
        if (std::find(picked.begin(), picked.end(), t) == picked.end()) picked.push_back(t);
    }
}

}  // namespace

Graph grow_motter(const GrowthSpec& spec) {
    validate(spec);
    const NodeId n = spec.n_final;
    Graph g(n);
    g.add_edge(0, 1);
    Rng rng(spec.seed);
    std::vector<NodeId> picked;
    for (NodeId a = 2; a < n; ++a) {
        picked.clear();
        const NodeId j = static_cast<NodeId>(rng.index(a));
        picked.push_back(j);
        const NodeId want = std::min<NodeId>(spec.m, a);
        pick_targets(a, want, g.neighbors(j), rng, picked);
        for (NodeId t : picked) g.add_edge(a, t);
    }
    return g;
}

Graph grow_dm(const GrowthSpec& spec) {
    validate(spec);
    const NodeId n = spec.n_final;
    const NodeId m0 = std::max<NodeId>(3, spec.m);
    if (m0 >= n) throw std::invalid_argument("growth needs n_final > max(3, m)");
    Graph g(n);
    std::vector<NodeId> lottery;
    for (NodeId i = 0; i < m0; ++i) {
        const NodeId j = (i + 1) % m0;
        if (g.add_edge(i, j)) {
            lottery.push_back(i);
            lottery.push_back(j);
        }
    }

    Rng rng(spec.seed);
    std::vector<NodeId> picks;
    for (NodeId a = m0; a < n; ++a) {
        // arrival: m distinct degree-proportional targets
        picks.clear();
        while (picks.size() < spec.m) {
            const NodeId t = lottery[rng.index(lottery.size())];
            if (std::find(picks.begin(), picks.end(), t) != picks.end()) continue;
            picks.push_back(t);
            g.add_edge(a, t);
            lottery.push_back(t);
        }
        for (std::size_t i = 0; i < picks.size(); ++i) lottery.push_back(a);

        // old-old edges; both endpoints degree-proportional, new node excluded
        const long step = static_cast<long>(a) - static_cast<long>(m0) + 1;
        const long extra = static_cast<long>(std::floor(spec.c * static_cast<double>(step)));
        for (long e = 0; e < extra; ++e) {
            bool added = false;
            for (int tries = 0; tries < 50 && !added; ++tries) {
                const NodeId x = lottery[rng.index(lottery.size())];
                const NodeId y = lottery[rng.index(lottery.size())];
                if (x == y || x == a || y == a || g.has_edge(x, y)) continue;
                g.add_edge(x, y);
                lottery.push_back(x);
                lottery.push_back(y);
                added = true;
            }
            // densely saturated neighborhoods can exhaust the retries; skip
        }
    }
    return g;
}

Graph grow_st(const GrowthSpec& spec, std::vector<double>* utilities_out) {
    validate(spec);
    const NodeId n = spec.n_final;
    Graph g(n);
    Rng rng(spec.seed);

    // Utility drawn at birth: a uniform Zipf rank in [1, n] raised to the
    // negative exponent. Exponent 0 degenerates to constant utilities.
    std::vector<double> utility(n, 1.0);
    auto draw_utility = [&]() {
        const double rank = static_cast<double>(rng.below(n) + 1);
        return std::pow(rank, -spec.utility_exponent);
    };

    utility[0] = draw_utility();
    utility[1] = draw_utility();
    g.add_edge(0, 1);

    std::vector<NodeId> picked;
    for (NodeId a = 2; a < n; ++a) {
        utility[a] = draw_utility();
        // anchor x with probability proportional to degree * utility
        double total = 0.0;
        for (NodeId i = 0; i < a; ++i) total += static_cast<double>(g.degree(i)) * utility[i];
        double r = rng.unit() * total;
        NodeId x = a - 1;
        for (NodeId i = 0; i < a; ++i) {
            r -= static_cast<double>(g.degree(i)) * utility[i];
            if (r <= 0.0) {
                x = i;
                break;
            }
        }
        picked.clear();
        std::vector<NodeId> pool = g.neighbors(x);
        pool.push_back(x);
        const NodeId want = std::min<NodeId>(spec.m, a);
        pick_targets(a, want, pool, rng, picked);
        for (NodeId t : picked) g.add_edge(a, t);
    }
    if (utilities_out) *utilities_out = std::move(utility);
    return g;
}

Graph grow(const GrowthSpec& spec) {
    switch (spec.model) {
        case GrowthModel::motter: return grow_motter(spec);
        case GrowthModel::dm: return grow_dm(spec);
        case GrowthModel::st: return grow_st(spec);
    }
    throw std::invalid_argument("unknown growth model");
}

std::string describe(const GrowthSpec& spec) {
    std::ostringstream os;
    os << "model=" << growth_model_name(spec.model) << " n_final=" << spec.n_final
       << " m=" << spec.m << " seed=" << spec.seed;
    switch (spec.model) {
        case GrowthModel::motter:
            os << " (first pick uniform, rest uniform over its neighbors, fallback uniform)";
            break;
        case GrowthModel::dm:
            os << " c=" << spec.c
               << " (ring seed m0=max(3,m); floor(c*t) old-old degree-proportional edges per step)";
            break;
        case GrowthModel::st:
            os << " utility_exponent=" << spec.utility_exponent
               << " (anchor ~ degree*utility, utilities = uniform Zipf rank^-exponent;"
                  " links uniform over anchor+neighbors)";
            break;
    }
    return os.str();
}

}  // namespace netlang
