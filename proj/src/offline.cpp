#include "vgs/offline.hpp"

#include <algorithm>
#include <limits>

#include "vgs/detail/msopt.hpp"

namespace vgs {

const char* to_string(BootstrapChoice choice) {
    switch (choice) {
        case BootstrapChoice::DivideAndConquer: return "divide-and-conquer";
        case BootstrapChoice::MonotonicStack: return "monotonic-stack";
        case BootstrapChoice::BasicOracle: return "basic";
    }
    return "?";
}

namespace {

// Connects the range maximum h to every node of [lo, hi] visible from it.
// One outward sweep per side, folding the extremum that decides visibility:
// the minimum chord slope into h (Natural) or the tallest value seen
// (Horizontal). One comparison per node.
void connect_maximum(const Window& w, VisibilityGraph& g, CriterionKind kind, TickIndex lo,
                     TickIndex hi, TickIndex h, DcStats* stats) {
    const double sh = w[h];
    std::uint64_t comparisons = 0;

    if (kind == CriterionKind::Natural) {
        // leftward: pair (a, h) visible iff slope(a,h) < min slope(x,h), x in (a,h)
        double min_num = 1.0, min_den = 0.0;  // +infinity
        for (TickIndex a = h; a-- > lo;) {
            ++comparisons;
            const double num = sh - w[a];
            const double den = static_cast<double>(h - a);
            if (num * min_den < min_num * den) {
                g.add_edge(a, h);
                min_num = num;
                min_den = den;
            }
        }
        // rightward: pair (h, j) visible iff slope(h,j) > max slope(h,x), x in (h,j)
        double max_num = -1.0, max_den = 0.0;  // -infinity
        for (TickIndex j = h + 1; j <= hi && j > h; ++j) {
            ++comparisons;
            const double num = w[j] - sh;
            const double den = static_cast<double>(j - h);
            if (num * max_den > max_num * den) {
                g.add_edge(h, j);
                max_num = num;
                max_den = den;
            }
        }
    } else {
        double tallest = -std::numeric_limits<double>::infinity();
        for (TickIndex a = h; a-- > lo;) {
            ++comparisons;
            const double sa = w[a];
            if (std::min(sa, sh) > tallest) g.add_edge(a, h);
            if (sa > tallest) tallest = sa;
        }
        tallest = -std::numeric_limits<double>::infinity();
        for (TickIndex j = h + 1; j <= hi && j > h; ++j) {
            ++comparisons;
            const double sj = w[j];
            if (std::min(sh, sj) > tallest) g.add_edge(h, j);
            if (sj > tallest) tallest = sj;
        }
    }
    if (stats) stats->comparisons += comparisons;
}

}  // namespace

VisibilityGraph dc_build(const Window& w, CriterionKind kind, DcStats* stats) {
    if (w.empty()) throw EmptyInputError("dc_build: empty window");
    VisibilityGraph g;
    g.reserve(w.size());
    const TickIndex first = w.first_index();
    const TickIndex last = w.last_index();
    for (TickIndex i = first; i <= last; ++i) g.add_node(i);

    // explicit work stack instead of recursion; pending ranges are disjoint
    std::vector<std::pair<TickIndex, TickIndex>> pending;
    pending.emplace_back(first, last);
    while (!pending.empty()) {
        if (stats) stats->max_pending = std::max(stats->max_pending, pending.size());
        auto [lo, hi] = pending.back();
        pending.pop_back();
        if (lo >= hi) continue;

        // leftmost maximum of the range
        TickIndex h = lo;
        double sh = w[lo];
        for (TickIndex k = lo + 1; k <= hi; ++k) {
            if (w[k] > sh) {
                sh = w[k];
                h = k;
            }
        }

        connect_maximum(w, g, kind, lo, hi, h, stats);

        if (h > lo) pending.emplace_back(lo, h - 1);
        if (h < hi) pending.emplace_back(h + 1, hi);
    }
    return g;
}

VisibilityGraph lt_build_hvg(const Window& w, StackStats* stats,
                             std::vector<TickIndex>* final_stack) {
    if (w.empty()) throw EmptyInputError("lt_build_hvg: empty window");
    VisibilityGraph g;
    g.reserve(w.size());
    const TickIndex first = w.first_index();
    const TickIndex last = w.last_index();

    std::vector<TickIndex> stack;
    std::uint64_t pushes = 0, pops = 0;
    for (TickIndex t = first; t <= last; ++t) {
        g.add_node(t);
        detail::msopt_push(
            stack, t, w[t], [&](TickIndex i) { return w[i]; },
            [&](TickIndex i, TickIndex j) { g.add_edge(i, j); }, pushes, pops);
    }
    if (stats) {
        stats->pushes += pushes;
        stats->pops += pops;
    }
    if (final_stack) *final_stack = std::move(stack);
    return g;
}

BootstrapChoice default_bootstrap(CriterionKind kind) {
    return kind == CriterionKind::Natural ? BootstrapChoice::DivideAndConquer
                                          : BootstrapChoice::MonotonicStack;
}

VisibilityGraph bootstrap(const Window& w, CriterionKind kind, BootstrapChoice choice) {
    switch (choice) {
        case BootstrapChoice::DivideAndConquer:
            return dc_build(w, kind);
        case BootstrapChoice::MonotonicStack:
            if (kind != CriterionKind::Horizontal)
                throw InvalidChoiceError("monotonic-stack bootstrap is horizontal-only");
            return lt_build_hvg(w);
        case BootstrapChoice::BasicOracle:
            return basic_build(w, kind);
    }
    throw InvalidChoiceError("unknown bootstrap choice");
}

}  // namespace vgs
