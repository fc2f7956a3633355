#ifndef QTENSOR_UNION_FIND_HPP
#define QTENSOR_UNION_FIND_HPP

#include <numeric>
#include <vector>

namespace qtensor {

// Disjoint-set forest with path halving and union by size.
// Elements are 0..n-1; find() is amortized near-constant.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true when a and b were in different sets.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    std::size_t element_count() const { return parent_.size(); }

    // Set ids numbered by first (smallest) element, so the ordering is
    // independent of merge history.
    std::vector<int> canonical_ids() {
        std::vector<int> id(parent_.size(), -1);
        std::vector<int> ids(parent_.size(), -1);
        int next = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            int r = find(static_cast<int>(i));
            if (id[r] < 0) id[r] = next++;
            ids[i] = id[r];
        }
        return ids;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

} // namespace qtensor

#endif
