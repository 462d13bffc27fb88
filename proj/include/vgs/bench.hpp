#pragma once

// Moving-window experiment harness: timed runs of the offline rebuild
// baselines against the online algorithms, and the equivalence verifier that
// replays every configuration against the quadratic reference build.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vgs/criteria.hpp"
#include "vgs/graph.hpp"
#include "vgs/io.hpp"
#include "vgs/online.hpp"

namespace vgs {

enum class Method { Basic, Dc, Lt, LotNvg, LotHvg, LotHvgMsOpt };

bool is_online(Method m);

// Method plus resolved criterion. Lt and the online variants carry a fixed
// criterion; Basic and Dc take either.
struct AlgoSpec {
    Method method = Method::Basic;
    CriterionKind criterion = CriterionKind::Natural;
};

// Validates the combination (e.g. Lt is Horizontal-only when a criterion is
// forced) and fills in the fixed criterion of the single-criterion methods.
AlgoSpec make_algo_spec(Method m, std::optional<CriterionKind> criterion);

// Display name used in reports and the timings CSV: Basic-NVG, DC-HVG, LT,
// LOT-NVG, LOT-HVG, LOT-HVG-MSopt.
std::string algo_label(const AlgoSpec& spec);

std::optional<Method> method_from_name(std::string_view name);

enum class MeasureKind { MeanPerIteration, Total };

struct SeriesData {
    std::string name;
    std::vector<double> values;
};

struct BenchConfig {
    std::vector<AlgoSpec> algorithms;
    std::vector<std::size_t> windows;
    std::size_t iterations = 100;
    int repeats = 5;
    std::size_t stride = 1;
    MeasureKind measure = MeasureKind::MeanPerIteration;
    bool include_bootstrap = false;  // count the first-window build into online timings
    bool parallel = false;           // run distinct configurations on worker threads

    // Invoked after each timed iteration, outside the measured region.
    // Reserved for observers and tests; never part of the timing.
    std::function<void()> post_iteration_hook;
};

// Wall-clock timings over the moving-window protocol. Offline methods rebuild
// the slid window from scratch each iteration; online methods bootstrap once
// (unmeasured unless include_bootstrap) and then advance `stride` ticks per
// iteration. One record per (algorithm, series, window, repeat), in that
// nesting order.
std::vector<TimingRecord> run_benchmark(const BenchConfig& config,
                                        const std::vector<SeriesData>& series);

// First failing window of an equivalence replay.
struct Counterexample {
    TickIndex window_first = 0;
    std::vector<double> values;
    std::vector<Edge> missing;  // in the reference build only
    std::vector<Edge> extra;    // in the checked graph only
    std::string reason;         // structural violation, if any
};

struct EquivCase {
    std::string algorithm;
    std::string series;
    std::size_t window = 0;
    std::size_t checks = 0;
    bool pass = true;
    std::optional<Counterexample> failure;
};

struct EquivalenceReport {
    std::vector<EquivCase> cases;
    bool all_pass() const;
};

// Replays every (algorithm, series, window) configuration; after the
// bootstrap window and after every slide, compares the produced graph with
// basic_build of the current window (exact edge-set equality) and checks the
// structural invariants. Timing options in the config are ignored.
EquivalenceReport verify_equivalence(const BenchConfig& config,
                                     const std::vector<SeriesData>& series);

// Single-case replay against the reference build; `step` receives the
// iteration number (0 = bootstrap window) and the current window, and returns
// the graph to check. Exposed so tests can drive deliberately corrupted
// updaters through the same comparator.
EquivCase verify_case(std::string algorithm, std::string series_name,
                      std::span<const double> values, std::size_t window_size,
                      std::size_t iterations, std::size_t stride, CriterionKind kind,
                      const std::function<VisibilityGraph(std::size_t, const Window&)>& step);

// Empty string when sound; otherwise a description of the violated invariant
// (asymmetric adjacency, self loop, node set != window span, missing
// consecutive-tick edge, edge count mismatch).
std::string structural_issues(const VisibilityGraph& g, const Window& w);

}  // namespace vgs
