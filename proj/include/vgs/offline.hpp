#pragma once

// Offline (from-scratch) builders: the divide-and-conquer builder for either
// criterion and the single-pass monotonic-stack HVG builder. These bootstrap
// the first window of the online state and serve as performance baselines.

#include <cstdint>
#include <vector>

#include "vgs/criteria.hpp"
#include "vgs/graph.hpp"

namespace vgs {

enum class BootstrapChoice { DivideAndConquer, MonotonicStack, BasicOracle };

const char* to_string(BootstrapChoice choice);

struct DcStats {
    std::uint64_t comparisons = 0;  // visibility checks in the outward sweeps
    std::size_t max_pending = 0;    // work-stack high-water mark (recursion depth bound)
};

struct StackStats {
    std::uint64_t pushes = 0;
    std::uint64_t pops = 0;
};

// Recursive range-maximum construction, run on an explicit work stack: find
// the leftmost maximum h of the range, connect h to every node visible from
// it with two outward sweeps, recurse on both sides.
VisibilityGraph dc_build(const Window& w, CriterionKind kind, DcStats* stats = nullptr);

// Left-to-right single pass applying the monotonic-stack pop rule to each
// tick. Horizontal criterion only. Optionally reports the final stack
// (bottom first), which seeds the online MSopt state.
VisibilityGraph lt_build_hvg(const Window& w, StackStats* stats = nullptr,
                             std::vector<TickIndex>* final_stack = nullptr);

// Default offline algorithm per criterion: divide-and-conquer for Natural,
// the monotonic-stack pass for Horizontal.
BootstrapChoice default_bootstrap(CriterionKind kind);

// Dispatches to the chosen builder. MonotonicStack with Natural is rejected.
VisibilityGraph bootstrap(const Window& w, CriterionKind kind, BootstrapChoice choice);

}  // namespace vgs
