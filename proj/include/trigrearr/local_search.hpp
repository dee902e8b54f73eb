#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trigrearr/grid.hpp"
#include "trigrearr/random.hpp"

namespace trigrearr {

/// Explicit row vectors, all of the same dimension.
class DenseRows {
public:
    explicit DenseRows(std::vector<std::vector<double>> rows);

    std::size_t count() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    double value(std::size_t j, std::size_t i) const { return rows_[j][i]; }
    double bound(std::size_t j) const { return bounds_[j]; }
    void add(std::size_t j, double scale, std::span<double> out) const;

private:
    std::vector<std::vector<double>> rows_;
    std::vector<double> bounds_;
    std::size_t dim_ = 0;
};

/// Rows a_j cos(k_j x_l) - b_j sin(k_j x_l) on a uniform grid, optionally
/// followed by one extra coordinate with a fixed value per row. Nothing is
/// materialized; values come from the shared GridTable.
class TermRows {
public:
    struct Row {
        int k;
        double a;
        double b;
        double extra;
    };

    TermRows(std::shared_ptr<const GridTable> table, std::vector<Row> rows, bool withExtra);

    std::size_t count() const { return rows_.size(); }
    std::size_t dim() const { return table_->size() + (withExtra_ ? 1 : 0); }
    double value(std::size_t j, std::size_t i) const
    {
        const Row& r = rows_[j];
        return i < table_->size() ? table_->at(r.k, r.a, r.b, i) : r.extra;
    }
    double bound(std::size_t j) const { return bounds_[j]; }
    void add(std::size_t j, double scale, std::span<double> out) const;

private:
    std::shared_ptr<const GridTable> table_;
    std::vector<Row> rows_;
    std::vector<double> bounds_;
    bool withExtra_ = false;
};

struct SearchOptions {
    std::uint64_t seed = 0;
    int restarts = 1;
    /// Cap on accepted flips per restart.
    long long maxFlips = 1'000'000;
};

struct SearchOutcome {
    /// Entries are +1 or -1.
    std::vector<int> x;
    /// sup_i |offset_i + sum_j x_j v_j(i)|, recomputed from scratch.
    double value = 0.0;
    long long flips = 0;
    bool budgetHit = false;
};

namespace detail {

template <class Rows>
std::vector<double> combine_rows(const Rows& rows, std::span<const double> offset, std::span<const int> x)
{
    std::vector<double> S(rows.dim(), 0.0);
    if (!offset.empty())
        std::copy(offset.begin(), offset.end(), S.begin());
    for (std::size_t j = 0; j < rows.count(); ++j)
        rows.add(j, static_cast<double>(x[j]), S);
    return S;
}

/// Steepest single-flip descent from x, followed at each local minimum by a
/// short tabu walk: up to min(r, 8) non-improving flips, each variable
/// blocked for r/4 steps after it flips unless flipping it beats the best
/// value seen. Leaves x and S at the best signs visited; returns accepted
/// flip count.
template <class Rows>
long long descend(const Rows& rows, std::vector<double>& S, std::vector<int>& x,
                  std::span<const char> frozen, long long maxFlips, bool& budgetHit)
{
    const std::size_t r = rows.count();
    double maxBound = 0.0;
    for (std::size_t j = 0; j < r; ++j)
        if (frozen.empty() || !frozen[j])
            maxBound = std::max(maxBound, rows.bound(j));

    const long long tenure = std::max<long long>(1, static_cast<long long>(r) / 4);
    const long long walkCap = std::min<long long>(static_cast<long long>(r), 8);
    std::vector<long long> tabuUntil(r, -1);
    std::vector<int> bestX = x;
    std::vector<double> bestS = S;
    double bestValue = sup_abs(S);
    long long walked = 0;

    std::vector<std::pair<double, std::size_t>> active;
    long long flips = 0;
    for (long long step = 0;; ++step) {
        const double cur = sup_abs(S);
        // A flip moves each coordinate by at most 2 * maxBound, so coordinates
        // at or below cur - 4 * maxBound can never carry the new maximum.
        const double threshold = cur - 4.0 * maxBound;
        active.clear();
        for (std::size_t i = 0; i < S.size(); ++i) {
            const double a = std::abs(S[i]);
            if (a > threshold)
                active.emplace_back(a, i);
        }
        std::sort(active.begin(), active.end(), [](const auto& p, const auto& q) {
            return p.first != q.first ? p.first > q.first : p.second < q.second;
        });

        double best = std::numeric_limits<double>::infinity();
        std::optional<std::size_t> bestJ;
        for (std::size_t j = 0; j < r; ++j) {
            if (!frozen.empty() && frozen[j])
                continue;
            const double cutoff = tabuUntil[j] > step ? std::min(best, bestValue) : best;
            const double reach = 2.0 * rows.bound(j);
            const double coef = -2.0 * static_cast<double>(x[j]);
            double candidate = 0.0;
            bool rejected = false;
            for (const auto& [a, i] : active) {
                if (a + reach <= candidate)
                    break;
                const double v = std::abs(S[i] + coef * rows.value(j, i));
                if (v > candidate) {
                    candidate = v;
                    if (candidate >= cutoff) {
                        rejected = true;
                        break;
                    }
                }
            }
            if (!rejected) {
                best = candidate;
                bestJ = j;
            }
        }
        if (!bestJ)
            break;
        if (best >= cur && walked >= walkCap)
            break;
        if (flips >= maxFlips) {
            budgetHit = true;
            break;
        }
        if (best >= cur)
            ++walked;
        rows.add(*bestJ, -2.0 * static_cast<double>(x[*bestJ]), S);
        x[*bestJ] = -x[*bestJ];
        tabuUntil[*bestJ] = step + tenure;
        ++flips;
        if (best < bestValue) {
            bestValue = best;
            bestX = x;
            bestS = S;
        }
    }
    x = std::move(bestX);
    S = std::move(bestS);
    return flips;
}

} // namespace detail

/// Minimizes sup |offset + sum_j x_j v_j| over x in {-1,+1}^count by
/// restart + steepest single-flip descent. Restart 0 starts from `init`
/// when given, later restarts from seeded random signs. Frozen variables
/// keep their initial value (+1 when no init is given). The winner is the
/// first restart reaching the smallest value.
template <class Rows>
SearchOutcome minimize_sup(const Rows& rows, std::span<const double> offset, std::span<const int> init,
                           std::span<const char> frozen, const SearchOptions& opt)
{
    const std::size_t r = rows.count();
    SearchOutcome best;
    best.value = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < std::max(1, opt.restarts); ++restart) {
        std::vector<int> x(r, 1);
        Rng rng(opt.seed, static_cast<std::uint64_t>(restart));
        for (std::size_t j = 0; j < r; ++j) {
            const bool keep = !frozen.empty() && frozen[j];
            if ((restart == 0 || keep) && !init.empty())
                x[j] = init[j];
            else if (!keep)
                x[j] = rng.coin() ? 1 : -1;
        }
        auto S = detail::combine_rows(rows, offset, x);
        bool budgetHit = false;
        const long long flips = detail::descend(rows, S, x, frozen, opt.maxFlips, budgetHit);
        const double value = sup_abs(detail::combine_rows(rows, offset, x));
        best.flips += flips;
        best.budgetHit = best.budgetHit || budgetHit;
        if (value < best.value) {
            best.value = value;
            best.x = std::move(x);
        }
    }
    return best;
}

} // namespace trigrearr
