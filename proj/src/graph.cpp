#include "vgs/graph.hpp"

#include <algorithm>
#include <cmath>

namespace vgs {

Window::Window(std::size_t capacity) {
    if (capacity == 0) throw ConfigError("window capacity must be at least 1");
    buf_.resize(capacity);
}

Window Window::over(std::span<const double> values, TickIndex first) {
    if (values.empty()) throw EmptyInputError("cannot build a window from an empty sequence");
    Window w(values.size());
    TickIndex i = first;
    for (double v : values) w.push_back({i++, v});
    return w;
}

TickIndex Window::first_index() const {
    if (empty()) throw EmptyInputError("window is empty");
    return first_;
}

TickIndex Window::last_index() const {
    if (empty()) throw EmptyInputError("window is empty");
    return first_ + size_ - 1;
}

bool Window::contains(TickIndex i) const {
    return size_ > 0 && i >= first_ && i - first_ < size_;
}

double Window::operator[](TickIndex i) const {
    if (!contains(i)) throw RangeError("tick " + std::to_string(i) + " is outside the window");
    std::size_t slot = head_ + static_cast<std::size_t>(i - first_);
    if (slot >= buf_.size()) slot -= buf_.size();
    return buf_[slot];
}

void Window::push_back(Sample s) {
    if (!std::isfinite(s.value))
        throw DomainError("non-finite value at tick " + std::to_string(s.index));
    if (full()) throw Error("window is at capacity; evict before appending");
    if (size_ > 0 && s.index != first_ + size_)
        throw StreamGapError("expected tick " + std::to_string(first_ + size_) + ", got " +
                             std::to_string(s.index));
    if (size_ == 0) {
        first_ = s.index;
        head_ = 0;
    }
    std::size_t slot = head_ + size_;
    if (slot >= buf_.size()) slot -= buf_.size();
    buf_[slot] = s.value;
    ++size_;
}

Sample Window::pop_front() {
    if (empty()) throw EmptyInputError("window is empty");
    Sample s{first_, buf_[head_]};
    ++head_;
    if (head_ == buf_.size()) head_ = 0;
    ++first_;
    --size_;
    return s;
}

std::vector<double> Window::to_vector() const {
    std::vector<double> out;
    out.reserve(size_);
    for (std::size_t m = 0; m < size_; ++m) out.push_back((*this)[first_ + m]);
    return out;
}

bool VisibilityGraph::add_node(TickIndex i) {
    if (adj_.try_emplace(i).second) {
        ++mutations_;
        return true;
    }
    return false;
}

void VisibilityGraph::add_edge(TickIndex i, TickIndex j) {
    if (i == j) throw SelfLoopError("self loop at node " + std::to_string(i));
    auto it_i = adj_.find(i);
    auto it_j = adj_.find(j);
    if (it_i == adj_.end() || it_j == adj_.end())
        throw UnknownNodeError("edge endpoint not in graph: " +
                               std::to_string(it_i == adj_.end() ? i : j));
    if (it_i->second.insert(j).second) {
        it_j->second.insert(i);
        ++edges_;
        ++mutations_;
    }
}

void VisibilityGraph::remove_node(TickIndex i) {
    auto it = adj_.find(i);
    if (it == adj_.end()) throw UnknownNodeError("unknown node " + std::to_string(i));
    for (TickIndex n : it->second) {
        adj_.find(n)->second.erase(i);  // neighbor key exists by symmetry
        ++mutations_;
    }
    edges_ -= it->second.size();
    adj_.erase(it);
    ++mutations_;
}

bool VisibilityGraph::has_edge(TickIndex i, TickIndex j) const {
    auto it = adj_.find(i);
    return it != adj_.end() && it->second.count(j) > 0;
}

std::size_t VisibilityGraph::degree(TickIndex i) const {
    auto it = adj_.find(i);
    if (it == adj_.end()) throw UnknownNodeError("unknown node " + std::to_string(i));
    return it->second.size();
}

const VisibilityGraph::NeighborSet& VisibilityGraph::neighbors(TickIndex i) const {
    auto it = adj_.find(i);
    if (it == adj_.end()) throw UnknownNodeError("unknown node " + std::to_string(i));
    return it->second;
}

std::vector<Edge> VisibilityGraph::edges_sorted() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (const auto& [i, nbrs] : adj_)
        for (TickIndex j : nbrs)
            if (i < j) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TickIndex> VisibilityGraph::nodes_sorted() const {
    std::vector<TickIndex> out;
    out.reserve(adj_.size());
    for (const auto& [i, nbrs] : adj_) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vgs
