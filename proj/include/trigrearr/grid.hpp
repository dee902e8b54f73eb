#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "trigrearr/trigpoly.hpp"

namespace trigrearr {

/// Cosine/sine tables for the uniform grid x_l = 2 pi l / M. A term
/// d cos(k x_l + phi) is read back exactly from the tables through
/// the index (k l) mod M, which keeps grid sums free of angle drift.
class GridTable {
public:
    explicit GridTable(std::size_t M);

    std::size_t size() const { return cos_.size(); }

    double term_at(const TrigTerm& t, std::size_t l) const
    {
        const std::size_t q = static_cast<std::size_t>(
            (static_cast<std::uint64_t>(t.k) * l) % cos_.size());
        return t.d * (std::cos(t.phi) * cos_[q] - std::sin(t.phi) * sin_[q]);
    }

    /// a cos(k x_l) - b sin(k x_l); callers cache a = d cos phi, b = d sin phi.
    double at(int k, double a, double b, std::size_t l) const
    {
        const std::size_t q = static_cast<std::size_t>(
            (static_cast<std::uint64_t>(k) * l) % cos_.size());
        return a * cos_[q] - b * sin_[q];
    }

    /// out[l] += scale * d cos(k x_l + phi) for every grid point.
    void accumulate(const TrigTerm& t, double scale, std::span<double> out) const;

private:
    std::vector<double> cos_;
    std::vector<double> sin_;
};

/// Shared table for grid size M from a small process-wide cache.
std::shared_ptr<const GridTable> shared_grid_table(std::size_t M);

/// max_i |v_i|.
double sup_abs(std::span<const double> v);

/// Grid size pi l / (5n) * refine, i.e. 10 n refine points.
inline std::size_t norm_grid_size(int degree, int refine) { return 10u * static_cast<std::size_t>(degree) * static_cast<std::size_t>(refine); }

} // namespace trigrearr
