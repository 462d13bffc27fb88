#include "vgs/criteria.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace vgs {

const char* to_string(CriterionKind kind) {
    return kind == CriterionKind::Natural ? "natural" : "horizontal";
}

namespace {

void check_pair(const Window& w, TickIndex i, TickIndex j) {
    if (i >= j)
        throw OrderingError("visibility check requires i < j, got i=" + std::to_string(i) +
                            " j=" + std::to_string(j));
    if (!w.contains(i) || !w.contains(j))
        throw RangeError("visibility check outside the window: i=" + std::to_string(i) +
                         " j=" + std::to_string(j));
}

}  // namespace

bool natural_visible(const Window& w, TickIndex i, TickIndex j) {
    check_pair(w, i, j);
    const double si = w[i];
    const double sj = w[j];
    const double span = static_cast<double>(j - i);
    // s_k < s_i + (s_j - s_i) * (k - i) / (j - i), cross-multiplied by (j - i)
    for (TickIndex k = i + 1; k < j; ++k) {
        if (!((w[k] - si) * span < (sj - si) * static_cast<double>(k - i))) return false;
    }
    return true;
}

bool horizontal_visible(const Window& w, TickIndex i, TickIndex j) {
    check_pair(w, i, j);
    const double bar = std::min(w[i], w[j]);
    for (TickIndex k = i + 1; k < j; ++k) {
        if (!(w[k] < bar)) return false;
    }
    return true;
}

bool visible(const Window& w, TickIndex i, TickIndex j, CriterionKind kind) {
    return kind == CriterionKind::Natural ? natural_visible(w, i, j) : horizontal_visible(w, i, j);
}

VisibilityGraph basic_build(const Window& w, CriterionKind kind) {
    if (w.empty()) throw EmptyInputError("basic_build: empty window");
    VisibilityGraph g;
    g.reserve(w.size());
    const TickIndex first = w.first_index();
    const TickIndex last = w.last_index();
    for (TickIndex i = first; i <= last; ++i) g.add_node(i);

    if (kind == CriterionKind::Natural) {
        for (TickIndex i = first; i < last; ++i) {
            const double si = w[i];
            // steepest chord slope from i over the ticks scanned so far,
            // kept as numerator/denominator; (-1, 0) stands for -infinity
            double max_num = -1.0;
            double max_den = 0.0;
            for (TickIndex j = i + 1; j <= last; ++j) {
                const double num = w[j] - si;
                const double den = static_cast<double>(j - i);
                if (num * max_den > max_num * den) {
                    g.add_edge(i, j);
                    max_num = num;
                    max_den = den;
                }
            }
        }
    } else {
        for (TickIndex i = first; i < last; ++i) {
            const double si = w[i];
            double tallest = -std::numeric_limits<double>::infinity();
            for (TickIndex j = i + 1; j <= last; ++j) {
                const double sj = w[j];
                if (std::min(si, sj) > tallest) g.add_edge(i, j);
                if (sj > tallest) tallest = sj;
            }
        }
    }
    return g;
}

}  // namespace vgs
