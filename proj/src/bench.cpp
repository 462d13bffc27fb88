#include "vgs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <thread>

#include "vgs/offline.hpp"

namespace vgs {

namespace {

using Clock = std::chrono::steady_clock;

// keeps the optimizer from discarding untimed offline builds
std::atomic<std::uint64_t> g_sink{0};

double seconds_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

bool is_online(Method m) {
    return m == Method::LotNvg || m == Method::LotHvg || m == Method::LotHvgMsOpt;
}

AlgoSpec make_algo_spec(Method m, std::optional<CriterionKind> criterion) {
    switch (m) {
        case Method::Basic:
        case Method::Dc:
            return {m, criterion.value_or(CriterionKind::Natural)};
        case Method::Lt:
        case Method::LotHvg:
        case Method::LotHvgMsOpt:
            if (criterion && *criterion != CriterionKind::Horizontal)
                throw ConfigError("algorithm is horizontal-only");
            return {m, CriterionKind::Horizontal};
        case Method::LotNvg:
            if (criterion && *criterion != CriterionKind::Natural)
                throw ConfigError("lot-nvg is natural-only");
            return {m, CriterionKind::Natural};
    }
    throw ConfigError("unknown method");
}

std::string algo_label(const AlgoSpec& spec) {
    const char* suffix = spec.criterion == CriterionKind::Natural ? "-NVG" : "-HVG";
    switch (spec.method) {
        case Method::Basic: return std::string("Basic") + suffix;
        case Method::Dc: return std::string("DC") + suffix;
        case Method::Lt: return "LT";
        case Method::LotNvg: return "LOT-NVG";
        case Method::LotHvg: return "LOT-HVG";
        case Method::LotHvgMsOpt: return "LOT-HVG-MSopt";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "basic") return Method::Basic;
    if (name == "dc") return Method::Dc;
    if (name == "lt") return Method::Lt;
    if (name == "lot-nvg") return Method::LotNvg;
    if (name == "lot-hvg") return Method::LotHvg;
    if (name == "lot-hvg-msopt") return Method::LotHvgMsOpt;
    return std::nullopt;
}

namespace {

OnlineAlgorithm online_algo(Method m) {
    switch (m) {
        case Method::LotNvg: return OnlineAlgorithm::LotNvg;
        case Method::LotHvg: return OnlineAlgorithm::LotHvg;
        case Method::LotHvgMsOpt: return OnlineAlgorithm::LotHvgMsOpt;
        default: throw ConfigError("not an online method");
    }
}

VisibilityGraph build_offline(const AlgoSpec& spec, const Window& w) {
    switch (spec.method) {
        case Method::Basic: return basic_build(w, spec.criterion);
        case Method::Dc: return dc_build(w, spec.criterion);
        case Method::Lt: return lt_build_hvg(w);
        default: throw ConfigError("not an offline method");
    }
}

Window window_slice(std::span<const double> values, std::size_t offset, std::size_t n) {
    return Window::over(values.subspan(offset, n), offset);
}

void validate(const BenchConfig& cfg, const std::vector<SeriesData>& series) {
    if (cfg.algorithms.empty()) throw ConfigError("no algorithms selected");
    if (series.empty()) throw ConfigError("no series selected");
    if (cfg.windows.empty()) throw ConfigError("no window sizes selected");
    if (cfg.iterations == 0) throw ConfigError("iterations must be at least 1");
    if (cfg.repeats < 1) throw ConfigError("repeats must be at least 1");
    if (cfg.stride == 0) throw ConfigError("stride must be at least 1");
    for (const auto& s : series) {
        for (std::size_t n : cfg.windows) {
            if (n == 0) throw ConfigError("window size must be at least 1");
            const std::size_t needed = n + cfg.iterations * cfg.stride;
            if (s.values.size() < needed)
                throw ConfigError("series '" + s.name + "' has " +
                                  std::to_string(s.values.size()) + " values, needs " +
                                  std::to_string(needed) + " for window " + std::to_string(n));
        }
    }
}

struct BenchJob {
    AlgoSpec algo;
    const SeriesData* series = nullptr;
    std::size_t window = 0;
};

// One timed repeat of one configuration. The measured regions cover exactly
// the build call (offline) or the advance calls of one iteration (online).
double run_repeat(const BenchConfig& cfg, const BenchJob& job) {
    const std::span<const double> values(job.series->values);
    const std::size_t n = job.window;
    double total = 0.0;

    if (!is_online(job.algo.method)) {
        for (std::size_t k = 1; k <= cfg.iterations; ++k) {
            Window w = window_slice(values, k * cfg.stride, n);
            const auto t0 = Clock::now();
            VisibilityGraph g = build_offline(job.algo, w);
            const auto t1 = Clock::now();
            total += seconds_between(t0, t1);
            g_sink.fetch_add(g.edge_count(), std::memory_order_relaxed);
            if (cfg.post_iteration_hook) cfg.post_iteration_hook();
        }
    } else {
        std::size_t cursor = n;
        if (cfg.include_bootstrap) {
            const auto t0 = Clock::now();
            OnlineState state(window_slice(values, 0, n), online_algo(job.algo.method));
            const auto t1 = Clock::now();
            total += seconds_between(t0, t1);
            for (std::size_t k = 1; k <= cfg.iterations; ++k) {
                const auto a0 = Clock::now();
                for (std::size_t s = 0; s < cfg.stride; ++s) state.advance(values[cursor++]);
                const auto a1 = Clock::now();
                total += seconds_between(a0, a1);
                if (cfg.post_iteration_hook) cfg.post_iteration_hook();
            }
            g_sink.fetch_add(state.graph().edge_count(), std::memory_order_relaxed);
        } else {
            OnlineState state(window_slice(values, 0, n), online_algo(job.algo.method));
            for (std::size_t k = 1; k <= cfg.iterations; ++k) {
                const auto a0 = Clock::now();
                for (std::size_t s = 0; s < cfg.stride; ++s) state.advance(values[cursor++]);
                const auto a1 = Clock::now();
                total += seconds_between(a0, a1);
                if (cfg.post_iteration_hook) cfg.post_iteration_hook();
            }
            g_sink.fetch_add(state.graph().edge_count(), std::memory_order_relaxed);
        }
    }
    return total;
}

}  // namespace

std::vector<TimingRecord> run_benchmark(const BenchConfig& cfg,
                                        const std::vector<SeriesData>& series) {
    validate(cfg, series);

    std::vector<BenchJob> jobs;
    for (const auto& a : cfg.algorithms)
        for (const auto& s : series)
            for (std::size_t n : cfg.windows) jobs.push_back({a, &s, n});

    const std::size_t repeats = static_cast<std::size_t>(cfg.repeats);
    const char* measure_name =
        cfg.measure == MeasureKind::MeanPerIteration ? "mean" : "total";
    std::vector<TimingRecord> records(jobs.size() * repeats);

    auto run_job = [&](std::size_t j) {
        const BenchJob& job = jobs[j];
        for (std::size_t rep = 0; rep < repeats; ++rep) {
            double total = run_repeat(cfg, job);
            double seconds = cfg.measure == MeasureKind::MeanPerIteration
                                 ? total / static_cast<double>(cfg.iterations)
                                 : total;
            records[j * repeats + rep] = {algo_label(job.algo), job.series->name, job.window,
                                          static_cast<int>(rep + 1), measure_name, seconds};
        }
    };

    if (cfg.parallel && jobs.size() > 1) {
        std::atomic<std::size_t> next{0};
        const std::size_t workers =
            std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t j = next.fetch_add(1); j < jobs.size(); j = next.fetch_add(1))
                    run_job(j);
            });
        }
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t j = 0; j < jobs.size(); ++j) run_job(j);
    }
    return records;
}

std::string structural_issues(const VisibilityGraph& g, const Window& w) {
    if (g.node_count() != w.size()) return "node count differs from window size";
    const TickIndex first = w.first_index();
    const TickIndex last = w.last_index();
    std::size_t degree_sum = 0;
    for (const auto& [i, nbrs] : g.adjacency()) {
        if (i < first || i > last) return "node " + std::to_string(i) + " outside the window";
        degree_sum += nbrs.size();
        for (TickIndex j : nbrs) {
            if (j == i) return "self loop at " + std::to_string(i);
            if (!g.has_node(j)) return "neighbor " + std::to_string(j) + " is not a node";
            if (!g.neighbors(j).count(i))
                return "asymmetric edge (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    }
    if (degree_sum != 2 * g.edge_count()) return "edge count does not match adjacency";
    for (TickIndex m = first; m < last; ++m) {
        if (!g.has_edge(m, m + 1))
            return "consecutive ticks (" + std::to_string(m) + "," + std::to_string(m + 1) +
                   ") not adjacent";
    }
    return "";
}

EquivCase verify_case(std::string algorithm, std::string series_name,
                      std::span<const double> values, std::size_t window_size,
                      std::size_t iterations, std::size_t stride, CriterionKind kind,
                      const std::function<VisibilityGraph(std::size_t, const Window&)>& step) {
    EquivCase result;
    result.algorithm = std::move(algorithm);
    result.series = std::move(series_name);
    result.window = window_size;

    for (std::size_t k = 0; k <= iterations; ++k) {
        Window w = window_slice(values, k * stride, window_size);
        VisibilityGraph got = step(k, w);
        VisibilityGraph want = basic_build(w, kind);
        const auto got_edges = got.edges_sorted();
        const auto want_edges = want.edges_sorted();
        std::string issue = structural_issues(got, w);
        if (got_edges != want_edges || !issue.empty()) {
            Counterexample cx;
            cx.window_first = w.first_index();
            cx.values = w.to_vector();
            cx.reason = std::move(issue);
            std::set_difference(want_edges.begin(), want_edges.end(), got_edges.begin(),
                                got_edges.end(), std::back_inserter(cx.missing));
            std::set_difference(got_edges.begin(), got_edges.end(), want_edges.begin(),
                                want_edges.end(), std::back_inserter(cx.extra));
            result.pass = false;
            result.failure = std::move(cx);
            return result;
        }
        ++result.checks;
    }
    return result;
}

bool EquivalenceReport::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const EquivCase& c) { return c.pass; });
}

EquivalenceReport verify_equivalence(const BenchConfig& cfg,
                                     const std::vector<SeriesData>& series) {
    validate(cfg, series);
    EquivalenceReport report;
    for (const auto& algo : cfg.algorithms) {
        for (const auto& s : series) {
            for (std::size_t n : cfg.windows) {
                const std::span<const double> values(s.values);
                std::function<VisibilityGraph(std::size_t, const Window&)> step;
                if (is_online(algo.method)) {
                    const OnlineAlgorithm oa = online_algo(algo.method);
                    auto holder = std::make_shared<std::optional<OnlineState>>();
                    step = [values, n, oa, holder, stride = cfg.stride](
                               std::size_t k, const Window&) -> VisibilityGraph {
                        if (k == 0) {
                            holder->emplace(window_slice(values, 0, n), oa);
                        } else {
                            for (std::size_t s2 = 0; s2 < stride; ++s2)
                                (*holder)->advance(values[n + (k - 1) * stride + s2]);
                        }
                        return (*holder)->graph();
                    };
                } else {
                    step = [algo](std::size_t, const Window& w) { return build_offline(algo, w); };
                }
                report.cases.push_back(verify_case(algo_label(algo), s.name, values, n,
                                                   cfg.iterations, cfg.stride, algo.criterion,
                                                   step));
            }
        }
    }
    return report;
}

}  // namespace vgs
