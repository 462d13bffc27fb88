#include "vgs/online.hpp"

#include <limits>
#include <string>

#include "vgs/detail/msopt.hpp"

namespace vgs {

const char* to_string(OnlineAlgorithm algo) {
    switch (algo) {
        case OnlineAlgorithm::LotNvg: return "lot-nvg";
        case OnlineAlgorithm::LotHvg: return "lot-hvg";
        case OnlineAlgorithm::LotHvgMsOpt: return "lot-hvg-msopt";
    }
    return "?";
}

CriterionKind criterion_of(OnlineAlgorithm algo) {
    return algo == OnlineAlgorithm::LotNvg ? CriterionKind::Natural : CriterionKind::Horizontal;
}

OnlineState::OnlineState(Window first_window, OnlineAlgorithm algo)
    : OnlineState(std::move(first_window), algo, default_bootstrap(criterion_of(algo))) {}

OnlineState::OnlineState(Window first_window, OnlineAlgorithm algo, BootstrapChoice choice)
    : window_(std::move(first_window)), algo_(algo) {
    if (!window_.full())
        throw WarmupError("first window holds " + std::to_string(window_.size()) + " of " +
                          std::to_string(window_.capacity()) + " samples");
    graph_ = bootstrap(window_, criterion(), choice);
    if (algo_ == OnlineAlgorithm::LotHvgMsOpt) {
        // rebuild the stack by replaying the window through the pop rule
        for (TickIndex t = window_.first_index(); t <= window_.last_index(); ++t) {
            detail::msopt_push(
                stack_, t, window_[t], [&](TickIndex i) { return window_[i]; },
                [](TickIndex, TickIndex) {}, counters_.stack_pushes, counters_.stack_pops);
        }
    }
}

void OnlineState::require_algo(OnlineAlgorithm expected, const char* op) const {
    if (algo_ != expected)
        throw InvalidChoiceError(std::string(op) + " requires a " + to_string(expected) +
                                 " state, this one is " + to_string(algo_));
}

void OnlineState::append_sample(Sample s) {
    // Window::push_back enforces finiteness (DomainError) and index
    // contiguity (StreamGapError).
    window_.push_back(s);
    graph_.add_node(s.index);
}

TickIndex OnlineState::eliminate_oldest() {
    if (!window_.full()) throw WarmupError("eliminate_oldest requires a full window");
    const Sample oldest = window_.pop_front();
    graph_.remove_node(oldest.index);
    if (!stack_.empty() && stack_.front() == oldest.index) {
        stack_.pop_front();
        ++counters_.stack_pops;
    }
    return oldest.index;
}

std::vector<Edge> OnlineState::update_nvg(Sample s) {
    require_algo(OnlineAlgorithm::LotNvg, "update_nvg");
    append_sample(s);
    std::vector<Edge> added;
    const TickIndex t = s.index;
    const double st = s.value;
    if (window_.size() > 1) {
        // traverse from back, keeping the minimum chord slope into t as
        // numerator/denominator; (1, 0) stands for +infinity, so the
        // neighbor t-1 always connects
        double min_num = 1.0;
        double min_den = 0.0;
        for (TickIndex i = t; i-- > window_.first_index();) {
            ++counters_.comparisons;
            const double num = st - window_[i];
            const double den = static_cast<double>(t - i);
            if (num * min_den < min_num * den) {
                graph_.add_edge(i, t);
                added.emplace_back(i, t);
                min_num = num;
                min_den = den;
            }
        }
    }
    return added;
}

std::vector<Edge> OnlineState::update_hvg(Sample s) {
    require_algo(OnlineAlgorithm::LotHvg, "update_hvg");
    append_sample(s);
    std::vector<Edge> added;
    const TickIndex t = s.index;
    const double st = s.value;
    if (window_.size() > 1) {
        double tallest = -std::numeric_limits<double>::infinity();
        for (TickIndex i = t; i-- > window_.first_index();) {
            ++counters_.comparisons;
            const double si = window_[i];
            if (std::min(si, st) > tallest) {
                graph_.add_edge(i, t);
                added.emplace_back(i, t);
            }
            if (si > tallest) tallest = si;
            // a blocker at least as tall as s_t ends the traversal
            if (si >= st) break;
        }
    }
    return added;
}

std::vector<Edge> OnlineState::update_hvg_msopt(Sample s) {
    require_algo(OnlineAlgorithm::LotHvgMsOpt, "update_hvg_msopt");
    append_sample(s);
    std::vector<Edge> added;
    detail::msopt_push(
        stack_, s.index, s.value, [&](TickIndex i) { return window_[i]; },
        [&](TickIndex i, TickIndex j) {
            graph_.add_edge(i, j);
            added.emplace_back(i, j);
        },
        counters_.stack_pushes, counters_.stack_pops);
    return added;
}

GraphDelta OnlineState::advance(double value) {
    if (!window_.full()) throw WarmupError("advance requires a warmed-up (full) window");
    GraphDelta delta;
    const Sample next{window_.last_index() + 1, value};
    delta.removed_node = eliminate_oldest();
    delta.added_node = next.index;
    switch (algo_) {
        case OnlineAlgorithm::LotNvg: delta.added_edges = update_nvg(next); break;
        case OnlineAlgorithm::LotHvg: delta.added_edges = update_hvg(next); break;
        case OnlineAlgorithm::LotHvgMsOpt: delta.added_edges = update_hvg_msopt(next); break;
    }
    return delta;
}

}  // namespace vgs
