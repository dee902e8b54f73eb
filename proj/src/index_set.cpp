#include "trigrearr/index_set.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "trigrearr/errors.hpp"

namespace trigrearr {

IndexSet::IndexSet(int n) : n_(n)
{
    if (n < 0)
        throw DomainError("IndexSet: negative ambient degree");
}

IndexSet::IndexSet(int n, std::vector<int> elements) : IndexSet(n)
{
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw DomainError("IndexSet: repeated element");
    if (!elements.empty() && (elements.front() < 1 || elements.back() > n))
        throw DomainError("IndexSet: element outside [1, " + std::to_string(n) + "]");
    elems_ = std::move(elements);
}

IndexSet::IndexSet(int n, std::initializer_list<int> elements)
    : IndexSet(n, std::vector<int>(elements))
{
}

IndexSet IndexSet::full(int n)
{
    IndexSet s(n);
    s.elems_.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        s.elems_[static_cast<std::size_t>(k - 1)] = k;
    return s;
}

bool IndexSet::contains(int k) const
{
    return std::binary_search(elems_.begin(), elems_.end(), k);
}

void IndexSet::insert(int k)
{
    if (k < 1 || k > n_)
        throw DomainError("IndexSet: element outside range");
    auto it = std::lower_bound(elems_.begin(), elems_.end(), k);
    if (it == elems_.end() || *it != k)
        elems_.insert(it, k);
}

void IndexSet::erase(int k)
{
    auto it = std::lower_bound(elems_.begin(), elems_.end(), k);
    if (it != elems_.end() && *it == k)
        elems_.erase(it);
}

IndexSet IndexSet::united(const IndexSet& other) const
{
    IndexSet out(std::max(n_, other.n_));
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                   std::back_inserter(out.elems_));
    return out;
}

IndexSet IndexSet::minus(const IndexSet& other) const
{
    IndexSet out(n_);
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out.elems_));
    return out;
}

IndexSet IndexSet::intersected(const IndexSet& other) const
{
    IndexSet out(n_);
    std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                          std::back_inserter(out.elems_));
    return out;
}

IndexSet IndexSet::complement() const { return full(n_).minus(*this); }

bool IndexSet::disjoint(const IndexSet& other) const { return intersected(other).empty(); }

} // namespace trigrearr
