#include "netlang/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stack>
#include <stdexcept>

#include "netlang/rng.hpp"

namespace netlang {

double clustering_node(const Graph& g, NodeId u) {
    const auto& nb = g.neighbors(u);
    const std::size_t k = nb.size();
    if (k < 2) return 0.0;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.has_edge(nb[i], nb[j])) ++links;
    return 2.0 * static_cast<double>(links) /
           (static_cast<double>(k) * static_cast<double>(k - 1));
}

double clustering_avg(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) return 0.0;
    double sum = 0.0;
    for (NodeId u = 0; u < n; ++u) sum += clustering_node(g, u);
    return sum / static_cast<double>(n);
}

namespace {

// BFS distances from src restricted to nodes marked in `in_scope`
// (empty mask = whole graph). Unreached nodes get -1.
std::vector<int> bfs_distances(const Graph& g, NodeId src) {
    std::vector<int> dist(g.node_count(), -1);
    dist[src] = 0;
    std::vector<NodeId> queue{src};
    std::size_t head = 0;
    while (head < queue.size()) {
        NodeId u = queue[head++];
        for (NodeId v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace

PathLengthResult char_path_length(const Graph& g, const PathLengthOptions& opts) {
    const NodeId n = g.node_count();
    if (n < 2) throw std::invalid_argument("path length needs at least 2 nodes");

    std::vector<NodeId> scope;
    const std::size_t components = g.component_count();
    PathLengthResult res;
    if (components > 1) {
        if (opts.strict)
            throw std::runtime_error("graph has " + std::to_string(components) + " components");
        scope = g.largest_component();
        res.lcc_fraction = static_cast<double>(scope.size()) / static_cast<double>(n);
    } else {
        scope.resize(n);
        for (NodeId u = 0; u < n; ++u) scope[u] = u;
    }
    if (scope.size() < 2)
        throw std::runtime_error("largest component has fewer than 2 nodes");

    std::vector<NodeId> sources = scope;
    if (scope.size() > opts.exact_threshold && opts.sample_sources < scope.size()) {
        Rng rng(mix_seed(opts.seed, 0x50415448));
        // partial Fisher-Yates: first sample_sources entries become the sample
        for (std::size_t i = 0; i < opts.sample_sources; ++i) {
            std::size_t j = i + rng.index(sources.size() - i);
            std::swap(sources[i], sources[j]);
        }
        sources.resize(opts.sample_sources);
        std::sort(sources.begin(), sources.end());
        res.estimated = true;
    }

    long double total = 0.0;
    std::size_t pairs = 0;
    for (NodeId src : sources) {
        const auto dist = bfs_distances(g, src);
        for (NodeId t : scope) {
            if (t == src) continue;
            // scope is one component, so dist[t] >= 0 here
            total += dist[t];
            ++pairs;
        }
    }
    res.length = static_cast<double>(total / static_cast<long double>(pairs));
    return res;
}

std::pair<double, double> random_baselines(double n, double mean_degree) {
    if (n < 2) throw std::invalid_argument("random baselines need n >= 2");
    if (mean_degree <= 1.0)
        throw std::invalid_argument("l_random undefined for mean degree <= 1");
    return {mean_degree / n, std::log(n) / std::log(mean_degree)};
}

std::vector<double> betweenness(const Graph& g, bool strict) {
    const NodeId n = g.node_count();
    if (strict) {
        const std::size_t components = g.component_count();
        if (components > 1)
            throw std::runtime_error("graph has " + std::to_string(components) + " components");
    }
    std::vector<double> cb(n, 0.0);
    // Brandes accumulation, one BFS per source.
    std::vector<long long> sigma(n);
    std::vector<int> dist(n);
    std::vector<double> delta(n);
    std::vector<std::vector<NodeId>> preds(n);
    std::vector<NodeId> order;
    order.reserve(n);
    for (NodeId s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0);
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        sigma[s] = 1;
        dist[s] = 0;
        std::size_t head = 0;
        order.push_back(s);
        while (head < order.size()) {
            NodeId u = order[head++];
            for (NodeId v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    order.push_back(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                    preds[v].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeId w = *it;
            for (NodeId u : preds[w]) {
                delta[u] += static_cast<double>(sigma[u]) / static_cast<double>(sigma[w]) *
                            (1.0 + delta[w]);
            }
            if (w != s) cb[w] += delta[w];
        }
    }
    for (double& x : cb) x /= 2.0;  // ordered pairs -> unordered
    return cb;
}

std::optional<double> assortativity(const Graph& g) {
    if (g.edge_count() < 2) return std::nullopt;
    // Pearson correlation over ordered edge endpoint pairs (x, y); with both
    // orientations included the x and y marginals coincide.
    long double sx = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t cnt = 0;
    for (const auto& [u, v] : g.edges()) {
        const double du = g.degree(u);
        const double dv = g.degree(v);
        sx += du + dv;
        sxx += du * du + dv * dv;
        sxy += 2.0L * du * dv;
        cnt += 2;
    }
    const long double mean = sx / cnt;
    const long double var = sxx / cnt - mean * mean;
    const long double cov = sxy / cnt - mean * mean;
    if (var <= 1e-12L * mean * mean) return std::nullopt;  // regular graph: undefined
    return static_cast<double>(cov / var);
}

DegreeHistogram degree_histogram(const Graph& g) {
    DegreeHistogram hist;
    for (NodeId u = 0; u < g.node_count(); ++u) hist[static_cast<int>(g.degree(u))] += 1.0;
    return hist;
}

namespace {

struct LogBin {
    int lo = 0, hi = 0;   // inclusive integer degree range
    double total = 0.0;   // summed counts
};

constexpr double kBinRatio = 1.6;

std::vector<LogBin> make_log_bins(const DegreeHistogram& hist, int k_min, int k_max) {
    std::vector<LogBin> bins;
    int lo = k_min;
    while (lo <= k_max) {
        int hi = static_cast<int>(std::llround(lo * kBinRatio)) - 1;
        if (hi < lo) hi = lo;
        if (hi > k_max) hi = k_max;
        bins.push_back({lo, hi, 0.0});
        lo = hi + 1;
    }
    for (const auto& [k, count] : hist) {
        if (k < k_min || k > k_max || count <= 0.0) continue;
        for (auto& b : bins) {
            if (k >= b.lo && k <= b.hi) {
                b.total += count;
                break;
            }
        }
    }
    std::erase_if(bins, [](const LogBin& b) { return b.total <= 0.0; });
    return bins;
}

struct FitLine {
    double slope = 0.0, intercept = 0.0, r_squared = 0.0, mse = 0.0;
};

FitLine least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    FitLine f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ys[i] - (f.intercept + f.slope * xs[i]);
        ssr += e * e;
    }
    f.mse = ssr / n;
    f.r_squared = syy > 0.0 ? std::clamp(1.0 - ssr / syy, 0.0, 1.0) : 0.0;
    return f;
}

// Average height per integer degree in each bin, with the bin representative
// chosen self-consistently: rep = (mean of k^-s over the bin)^(-1/s) at the
// current slope estimate s, which makes the regression unbiased for data that
// is exactly a power law. Two refinement passes are plenty in practice.
PowerLawFit fit_range(const DegreeHistogram& hist, int k_min, int k_max) {
    auto bins = make_log_bins(hist, k_min, k_max);
    if (bins.size() < 3)
        throw std::runtime_error("power-law fit needs at least 3 nonempty log bins, got " +
                                 std::to_string(bins.size()));

    std::vector<double> xs(bins.size()), ys(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) {
        const auto& b = bins[i];
        ys[i] = std::log(b.total / (b.hi - b.lo + 1));
        xs[i] = 0.5 * (std::log(static_cast<double>(b.lo)) + std::log(static_cast<double>(b.hi)));
    }
    FitLine line = least_squares(xs, ys);
    for (int pass = 0; pass < 2; ++pass) {
        const double s = std::clamp(-line.slope, 0.1, 12.0);
        for (std::size_t i = 0; i < bins.size(); ++i) {
            const auto& b = bins[i];
            double acc = 0.0;
            for (int k = b.lo; k <= b.hi; ++k) acc += std::pow(static_cast<double>(k), -s);
            acc /= (b.hi - b.lo + 1);
            xs[i] = -std::log(acc) / s;
        }
        line = least_squares(xs, ys);
    }

    PowerLawFit fit;
    fit.exponent = -line.slope;
    fit.k_min = k_min;
    fit.r_squared = line.r_squared;
    fit.mean_sq_residual = line.mse;
    return fit;
}

}  // namespace

PowerLawFit fit_power_law(const DegreeHistogram& hist, int k_min) {
    if (hist.empty()) throw std::invalid_argument("empty degree histogram");
    if (k_min < 1) k_min = 1;
    int k_max = 0;
    for (const auto& [k, count] : hist)
        if (count > 0.0 && k > k_max) k_max = k;
    if (k_max < k_min)
        throw std::runtime_error("power-law fit needs at least 3 nonempty log bins, got 0");
    return fit_range(hist, k_min, k_max);
}

PowerLawFit fit_two_regime(const DegreeHistogram& hist) {
    if (hist.empty()) throw std::invalid_argument("empty degree histogram");
    std::vector<int> degrees;
    for (const auto& [k, count] : hist)
        if (k >= 1 && count > 0.0) degrees.push_back(k);
    if (degrees.size() < 6)
        throw std::runtime_error("two-regime fit needs at least 6 distinct degrees, got " +
                                 std::to_string(degrees.size()));
    const int k_lo = degrees.front();
    const int k_hi = degrees.back();

    PowerLawFit best;
    double best_cost = std::numeric_limits<double>::infinity();
    // Candidate breakpoints leave >= 3 distinct degrees on each side
    // (the breakpoint degree is shared by both segments).
    for (std::size_t i = 2; i + 3 <= degrees.size(); ++i) {
        const int kb = degrees[i];
        PowerLawFit low, high;
        try {
            low = fit_range(hist, k_lo, kb);
            high = fit_range(hist, kb, k_hi);
        } catch (const std::runtime_error&) {
            continue;  // a side binned down to < 3 bins
        }
        const double cost = low.mean_sq_residual + high.mean_sq_residual;
        if (cost < best_cost) {
            best_cost = cost;
            best.two_regime = true;
            best.breakpoint = kb;
            best.exponent_low = low.exponent;
            best.exponent_high = high.exponent;
            best.exponent = high.exponent;
            best.k_min = k_lo;
            best.r_squared = std::min(low.r_squared, high.r_squared);
            best.mean_sq_residual = 0.5 * (low.mean_sq_residual + high.mean_sq_residual);
        }
    }
    if (!best.two_regime)
        throw std::runtime_error("two-regime fit found no usable breakpoint");
    return best;
}

MetricsReport analyze(const Graph& g, const AnalyzeOptions& opts) {
    MetricsReport r;
    r.n = g.node_count();
    r.m_edges = g.edge_count();
    r.mean_degree = g.mean_degree();
    r.density = r.n >= 2 ? g.density() : std::numeric_limits<double>::quiet_NaN();
    r.clustering_avg = clustering_avg(g);
    r.component_count = g.component_count();

    if (r.n >= 2) {
        auto pl = char_path_length(g, opts.paths);
        r.char_path_length = pl.length;
        r.length_estimated = pl.estimated;
        r.lcc_fraction = pl.lcc_fraction;
    } else {
        r.char_path_length = std::numeric_limits<double>::quiet_NaN();
        r.lcc_fraction = r.n == 0 ? 0.0 : 1.0;
    }

    if (r.n >= 2 && r.mean_degree > 1.0) {
        auto [cr, lr] = random_baselines(static_cast<double>(r.n), r.mean_degree);
        r.c_random = cr;
        r.l_random = lr;
    } else {
        r.c_random = std::numeric_limits<double>::quiet_NaN();
        r.l_random = std::numeric_limits<double>::quiet_NaN();
    }

    r.assortativity = assortativity(g);
    r.degree_histogram = degree_histogram(g);

    const int k_min = opts.fit_k_min.value_or(
        std::max(1, static_cast<int>(std::llround(r.mean_degree))));
    std::optional<PowerLawFit> single;
    try {
        single = fit_power_law(r.degree_histogram, k_min);
    } catch (const std::exception&) {
    }
    std::optional<PowerLawFit> two;
    try {
        two = fit_two_regime(r.degree_histogram);
    } catch (const std::exception&) {
    }
    // Prefer the two-regime description only when it clearly beats a single
    // power law fitted over the full degree range.
    if (two && single) {
        std::optional<PowerLawFit> full;
        try {
            full = fit_power_law(r.degree_histogram, two->k_min);
        } catch (const std::exception&) {
        }
        if (full && two->mean_sq_residual < 0.5 * full->mean_sq_residual) {
            r.fit = two;
        } else {
            r.fit = single;
        }
    } else if (single) {
        r.fit = single;
    } else if (two) {
        r.fit = two;
    }
    return r;
}

namespace {

std::string fmt(double x) {
    if (std::isnan(x)) return "";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

}  // namespace

std::string report_csv_header() {
    return "n,m,mean_degree,density,C,L,c_random,l_random,assortativity,gamma,regime,breakpoint";
}

std::string report_csv_row(const MetricsReport& r) {
    std::ostringstream os;
    os << r.n << ',' << r.m_edges << ',' << fmt(r.mean_degree) << ',' << fmt(r.density) << ','
       << fmt(r.clustering_avg) << ',' << fmt(r.char_path_length) << ',' << fmt(r.c_random)
       << ',' << fmt(r.l_random) << ',';
    if (r.assortativity) os << fmt(*r.assortativity);
    os << ',';
    if (r.fit) os << fmt(r.fit->exponent);
    os << ',';
    if (r.fit) os << (r.fit->two_regime ? "two_regime" : "single");
    os << ',';
    if (r.fit && r.fit->two_regime) os << r.fit->breakpoint;
    return os.str();
}

std::string report_text(const MetricsReport& r) {
    std::ostringstream os;
    os << "nodes:              " << r.n << '\n';
    os << "edges:              " << r.m_edges << '\n';
    os << "mean degree:        " << fmt(r.mean_degree) << '\n';
    os << "density:            " << fmt(r.density) << '\n';
    os << "clustering C:       " << fmt(r.clustering_avg) << '\n';
    os << "path length L:      " << fmt(r.char_path_length)
       << (r.length_estimated ? "  (estimated from sampled sources)" : "") << '\n';
    os << "C random:           " << fmt(r.c_random) << '\n';
    os << "L random:           " << fmt(r.l_random) << '\n';
    os << "assortativity:      " << (r.assortativity ? fmt(*r.assortativity) : "undefined (uniform degrees)")
       << '\n';
    os << "components:         " << r.component_count;
    if (r.component_count > 1)
        os << "  (L over largest component, " << fmt(100.0 * r.lcc_fraction) << "% of nodes)";
    os << '\n';
    if (r.fit) {
        if (r.fit->two_regime) {
            os << "degree distribution: two-regime power law, gamma_low="
               << fmt(r.fit->exponent_low) << " gamma_high=" << fmt(r.fit->exponent_high)
               << " breakpoint k=" << r.fit->breakpoint << '\n';
        } else {
            os << "degree distribution: power-law fit gamma=" << fmt(r.fit->exponent)
               << " for k>=" << r.fit->k_min << " (r2=" << fmt(r.fit->r_squared) << ")" << '\n';
        }
    } else {
        os << "degree distribution: no power-law fit (insufficient support)\n";
    }
    return os.str();
}

}  // namespace netlang
