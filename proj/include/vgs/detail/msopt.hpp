#pragma once

// Monotonic-stack step shared by the offline single-pass HVG builder and the
// online MSopt updater. The stack holds tick indices in increasing index
// order with strictly decreasing values bottom to top.

#include <cstdint>

#include "vgs/graph.hpp"

namespace vgs::detail {

// Applies the pop rule for the arriving tick t with value st, then pushes t.
//
//   while value(top) < st: emit (top, t), pop
//   then value(top) > st:  emit (top, t)
//   or   value(top) == st: emit (top, t), pop, stop
//
// Emitted pairs are exactly the horizontal-visibility edges between t and the
// older in-window ticks, in decreasing order of the older index.
template <class Stack, class ValueOf, class Emit>
void msopt_push(Stack& stack, TickIndex t, double st, ValueOf value_of, Emit emit,
                std::uint64_t& pushes, std::uint64_t& pops) {
    while (!stack.empty()) {
        const TickIndex top = stack.back();
        const double v = value_of(top);
        if (v < st) {
            emit(top, t);
            stack.pop_back();
            ++pops;
            continue;
        }
        emit(top, t);
        if (v == st) {
            stack.pop_back();
            ++pops;
        }
        break;
    }
    stack.push_back(t);
    ++pushes;
}

}  // namespace vgs::detail
