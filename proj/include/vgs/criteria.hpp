#pragma once

// The two visibility predicates and the quadratic builder that serves as the
// ground-truth reference for every faster algorithm.

#include <string_view>

#include "vgs/graph.hpp"

namespace vgs {

enum class CriterionKind { Natural, Horizontal };

const char* to_string(CriterionKind kind);

// True iff every sample strictly between i and j lies strictly below the
// chord from (i, s_i) to (j, s_j). Adjacent pairs are always visible.
// Comparisons are done in cross-multiplied form, no division.
bool natural_visible(const Window& w, TickIndex i, TickIndex j);

// True iff every sample strictly between i and j is strictly below both
// endpoint values.
bool horizontal_visible(const Window& w, TickIndex i, TickIndex j);

bool visible(const Window& w, TickIndex i, TickIndex j, CriterionKind kind);

// From-scratch O(N^2) build, input-independent: one pass per start node with
// a running extremum, one comparison per pair. Its edge set is exactly
// { (i,j) : i < j, visible under kind } and defines correctness for all the
// other builders.
VisibilityGraph basic_build(const Window& w, CriterionKind kind);

}  // namespace vgs
