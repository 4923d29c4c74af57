#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "nbs/search.hpp"

namespace nbs {

// Binary min-heap of node ids with O(log n) arbitrary removal.
//
// `Less` compares two node ids. Every comparison and every element move adds
// one to the shared operation counter, which the amortized-cost checks read.
template <typename Less>
class IndexedHeap {
  public:
    explicit IndexedHeap(Less less, std::uint64_t* ops = nullptr) : less_(std::move(less)), ops_(ops) {}

    [[nodiscard]] bool empty() const { return heap_.empty(); }
    [[nodiscard]] std::size_t size() const { return heap_.size(); }
    [[nodiscard]] NodeId top() const {
        assert(!heap_.empty());
        return heap_.front();
    }
    [[nodiscard]] bool contains(NodeId id) const { return id < pos_.size() && pos_[id] != absent; }
    [[nodiscard]] const std::vector<NodeId>& items() const { return heap_; }

    void push(NodeId id) {
        if (id >= pos_.size()) pos_.resize(static_cast<std::size_t>(id) + 1, absent);
        assert(pos_[id] == absent);
        pos_[id] = static_cast<std::uint32_t>(heap_.size());
        heap_.push_back(id);
        sift_up(heap_.size() - 1);
    }

    NodeId pop() {
        const NodeId id = top();
        erase_at(0);
        return id;
    }

    void erase(NodeId id) {
        assert(contains(id));
        erase_at(pos_[id]);
    }

    void clear() {
        for (NodeId id : heap_) pos_[id] = absent;
        heap_.clear();
    }

  private:
    static constexpr std::uint32_t absent = std::numeric_limits<std::uint32_t>::max();

    bool less(NodeId a, NodeId b) {
        count();
        return less_(a, b);
    }
    void count() {
        if (ops_ != nullptr) ++*ops_;
    }
    void place(std::size_t i, NodeId id) {
        heap_[i] = id;
        pos_[id] = static_cast<std::uint32_t>(i);
        count();
    }

    void erase_at(std::size_t i) {
        const NodeId removed = heap_[i];
        pos_[removed] = absent;
        const NodeId last = heap_.back();
        heap_.pop_back();
        if (i == heap_.size()) return;
        place(i, last);
        if (i > 0 && less(last, heap_[(i - 1) / 2]))
            sift_up(i);
        else
            sift_down(i);
    }

    void sift_up(std::size_t i) {
        const NodeId id = heap_[i];
        while (i > 0) {
            const std::size_t parent = (i - 1) / 2;
            if (!less(id, heap_[parent])) break;
            place(i, heap_[parent]);
            i = parent;
        }
        place(i, id);
    }

    void sift_down(std::size_t i) {
        const NodeId id = heap_[i];
        const std::size_t n = heap_.size();
        for (;;) {
            std::size_t child = 2 * i + 1;
            if (child >= n) break;
            if (child + 1 < n && less(heap_[child + 1], heap_[child])) ++child;
            if (!less(heap_[child], id)) break;
            place(i, heap_[child]);
            i = child;
        }
        place(i, id);
    }

    Less less_;
    std::uint64_t* ops_;
    std::vector<NodeId> heap_;
    std::vector<std::uint32_t> pos_;
};

// Orderings shared by the algorithms. All break remaining ties on the state
// encoding so runs are deterministic.
struct ByFHighG {
    const NodeStore* store;
    bool operator()(NodeId a, NodeId b) const {
        const SearchNode& x = (*store)[a];
        const SearchNode& y = (*store)[b];
        if (x.f != y.f) return x.f < y.f;
        if (x.g != y.g) return y.g < x.g;
        return x.state < y.state;
    }
};

struct ByLowG {
    const NodeStore* store;
    bool operator()(NodeId a, NodeId b) const {
        const SearchNode& x = (*store)[a];
        const SearchNode& y = (*store)[b];
        if (x.g != y.g) return x.g < y.g;
        return x.state < y.state;
    }
};

}  // namespace nbs
