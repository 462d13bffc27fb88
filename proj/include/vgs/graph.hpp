#pragma once

// Core value types shared by every builder: tick-indexed samples, the sliding
// window ring and the adjacency-set visibility graph with in-place node
// elimination.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vgs/errors.hpp"

namespace vgs {

// Absolute 0-based stream position. Never reused after eviction, so index
// arithmetic (j - i) is exact over the stream lifetime.
using TickIndex = std::uint64_t;

// Undirected edge, stored as (lower index, higher index).
using Edge = std::pair<TickIndex, TickIndex>;

struct Sample {
    TickIndex index = 0;
    double value = 0.0;
};

// Contiguous run of the most recent samples, ring-buffered so that eviction
// and append never move surviving values. Indices are absolute stream
// positions; samples[m+1].index == samples[m].index + 1 always holds.
class Window {
public:
    explicit Window(std::size_t capacity);

    // Window filled from a span; first value gets index `first`.
    static Window over(std::span<const double> values, TickIndex first = 0);

    std::size_t capacity() const { return buf_.size(); }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool full() const { return size_ == buf_.size(); }

    TickIndex first_index() const;
    TickIndex last_index() const;
    bool contains(TickIndex i) const;

    // Value at an absolute stream position; throws RangeError when outside
    // the window.
    double operator[](TickIndex i) const;

    // Appends a sample. Rejects non-finite values (DomainError), index gaps
    // (StreamGapError) and appending past capacity.
    void push_back(Sample s);

    // Removes and returns the oldest sample.
    Sample pop_front();

    std::vector<double> to_vector() const;

private:
    std::vector<double> buf_;
    TickIndex first_ = 0;   // absolute index of the oldest sample
    std::size_t head_ = 0;  // ring slot of the oldest sample
    std::size_t size_ = 0;
};

// Undirected graph keyed by absolute tick index; each node maps to the set of
// its neighbors. Symmetry and no-self-loop are enforced at the mutation
// boundary. `mutations()` counts structural changes (node or edge inserted or
// erased) for the complexity assertions in the tests.
class VisibilityGraph {
public:
    using NeighborSet = std::unordered_set<TickIndex>;

    VisibilityGraph() = default;

    void reserve(std::size_t nodes) { adj_.reserve(nodes); }

    // Returns true when the node was newly inserted.
    bool add_node(TickIndex i);

    // Inserts the undirected edge {i, j}. Idempotent on duplicates; throws
    // SelfLoopError when i == j and UnknownNodeError when either endpoint is
    // not a node.
    void add_edge(TickIndex i, TickIndex j);

    // Erases node i and every incident edge, touching only the adjacency
    // entries of i's neighbors: cost proportional to degree(i) + 1.
    void remove_node(TickIndex i);

    bool has_node(TickIndex i) const { return adj_.find(i) != adj_.end(); }
    bool has_edge(TickIndex i, TickIndex j) const;

    std::size_t degree(TickIndex i) const;
    const NeighborSet& neighbors(TickIndex i) const;

    std::size_t node_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }
    std::uint64_t mutations() const { return mutations_; }

    // Every undirected edge exactly once as (i, j) with i < j, sorted
    // lexicographically. Canonical form for equality tests and export.
    std::vector<Edge> edges_sorted() const;

    std::vector<TickIndex> nodes_sorted() const;

    const std::unordered_map<TickIndex, NeighborSet>& adjacency() const { return adj_; }

private:
    std::unordered_map<TickIndex, NeighborSet> adj_;
    std::size_t edges_ = 0;
    std::uint64_t mutations_ = 0;
};

// Change produced by one advance of the online state: the evicted node, the
// appended node and the edges attached to it.
struct GraphDelta {
    std::optional<TickIndex> removed_node;
    TickIndex added_node = 0;
    std::vector<Edge> added_edges;  // every edge has added_node as an endpoint
};

}  // namespace vgs
