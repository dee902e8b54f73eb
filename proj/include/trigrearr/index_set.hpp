#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace trigrearr {

/// Ordered permutation of frequencies (position i holds the frequency placed i-th).
using Permutation = std::vector<int>;

/// Sorted set of distinct frequencies inside [1, n].
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(int n);
    /// Throws DomainError on duplicates or elements outside [1, n].
    IndexSet(int n, std::vector<int> elements);
    IndexSet(int n, std::initializer_list<int> elements);

    static IndexSet full(int n);

    int ambient() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(int k) const;

    std::span<const int> elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    void insert(int k);
    void erase(int k);

    IndexSet united(const IndexSet& other) const;
    IndexSet minus(const IndexSet& other) const;
    IndexSet intersected(const IndexSet& other) const;
    /// {1..n} minus this set.
    IndexSet complement() const;
    bool disjoint(const IndexSet& other) const;

    bool operator==(const IndexSet& other) const = default;

private:
    int n_ = 0;
    std::vector<int> elems_;
};

} // namespace trigrearr
