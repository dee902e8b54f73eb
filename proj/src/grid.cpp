#include "trigrearr/grid.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <utility>
#include <numbers>
#include <stdexcept>

namespace trigrearr {

GridTable::GridTable(std::size_t M) : cos_(M), sin_(M)
{
    if (M == 0)
        throw std::invalid_argument("GridTable: empty grid");
    for (std::size_t q = 0; q < M; ++q) {
        const double x = 2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(M);
        cos_[q] = std::cos(x);
        sin_[q] = std::sin(x);
    }
}

void GridTable::accumulate(const TrigTerm& t, double scale, std::span<double> out) const
{
    const std::size_t M = cos_.size();
    const double a = scale * t.d * std::cos(t.phi);
    const double b = scale * t.d * std::sin(t.phi);
    const std::size_t step = static_cast<std::size_t>(t.k) % M;
    std::size_t q = 0;
    for (std::size_t l = 0; l < out.size(); ++l) {
        out[l] += a * cos_[q] - b * sin_[q];
        q += step;
        if (q >= M)
            q -= M;
    }
}

std::shared_ptr<const GridTable> shared_grid_table(std::size_t M)
{
    constexpr std::size_t kCapacity = 8;
    static std::mutex mu;
    static std::deque<std::pair<std::size_t, std::shared_ptr<const GridTable>>> cache;
    std::lock_guard lock(mu);
    for (const auto& [size, table] : cache)
        if (size == M)
            return table;
    auto table = std::make_shared<const GridTable>(M);
    cache.emplace_back(M, table);
    if (cache.size() > kCapacity)
        cache.pop_front();
    return table;
}

double sup_abs(std::span<const double> v)
{
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

} // namespace trigrearr
