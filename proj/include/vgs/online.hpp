#pragma once

// The streaming core: per arriving tick, evict the node that left the window
// in place, then attach the new node with one backward traversal. Worst-case
// O(N) work per advance; no auxiliary structure beyond the MSopt stack.

#include <cstdint>
#include <deque>
#include <vector>

#include "vgs/criteria.hpp"
#include "vgs/graph.hpp"
#include "vgs/offline.hpp"

namespace vgs {

enum class OnlineAlgorithm { LotNvg, LotHvg, LotHvgMsOpt };

const char* to_string(OnlineAlgorithm algo);
CriterionKind criterion_of(OnlineAlgorithm algo);

// Work tallies for the complexity assertions. `comparisons` counts the
// visibility checks of the backward traversal (exactly N-1 per LotNvg
// advance); stack counters apply to the MSopt variant only.
struct WorkCounters {
    std::uint64_t comparisons = 0;
    std::uint64_t stack_pushes = 0;
    std::uint64_t stack_pops = 0;
};

class OnlineState {
public:
    // Bootstraps the graph of the first full window with the default offline
    // builder for the algorithm's criterion.
    OnlineState(Window first_window, OnlineAlgorithm algo);
    OnlineState(Window first_window, OnlineAlgorithm algo, BootstrapChoice choice);

    // One tick in, one node out. Returns the change; afterwards the graph
    // equals the from-scratch build of the new window.
    GraphDelta advance(double value);

    // Steps of `advance`, exposed individually. eliminate_oldest requires a
    // full window and returns the evicted index; the update functions require
    // the matching algorithm variant and the next consecutive index.
    TickIndex eliminate_oldest();
    std::vector<Edge> update_nvg(Sample s);
    std::vector<Edge> update_hvg(Sample s);
    std::vector<Edge> update_hvg_msopt(Sample s);

    const Window& window() const { return window_; }
    const VisibilityGraph& graph() const { return graph_; }
    OnlineAlgorithm algorithm() const { return algo_; }
    CriterionKind criterion() const { return criterion_of(algo_); }

    // MSopt only; empty for the other variants. Bottom (oldest) first.
    const std::deque<TickIndex>& stack() const { return stack_; }

    const WorkCounters& counters() const { return counters_; }
    void reset_counters() { counters_ = {}; }

private:
    void require_algo(OnlineAlgorithm expected, const char* op) const;
    void append_sample(Sample s);

    Window window_;
    VisibilityGraph graph_;
    OnlineAlgorithm algo_;
    std::deque<TickIndex> stack_;
    WorkCounters counters_;
};

}  // namespace vgs
