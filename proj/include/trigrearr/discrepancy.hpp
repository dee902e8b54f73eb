#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trigrearr/index_set.hpp"
#include "trigrearr/trigpoly.hpp"

namespace trigrearr {

/// Knobs for the randomized signing search that replaces the existence
/// argument for balanced signs.
struct DiscrepancyConfig {
    std::uint64_t seed = 0;
    int restarts = 16;
    long long maxFlips = 1'000'000;
    /// Reporting constant in C (r log(2n/r))^{1/2} max|d|.
    double constantC = 6.0;
    /// Grid refinement used when measuring achieved norms.
    int refine = kDefaultRefine;
    /// Throw BudgetError instead of flagging when maxFlips is reached.
    bool strictBudget = false;
};

struct SignVector {
    std::vector<int> signs;
    /// |sum_j signs_j u_j|_inf.
    double discrepancy = 0.0;
    bool budgetHit = false;
};

struct Split {
    IndexSet Kplus;
    IndexSet Kminus;
    /// Estimated || sum_{K+} A_k - sum_{K-} A_k ||.
    double deviation = 0.0;
    /// Discrepancy of the raw signing (in units of max|d_k|).
    double signDiscrepancy = 0.0;
    /// Elements moved from the minus side to restore |K+| = floor(r/2).
    int repaired = 0;
    /// C (r log(2n/r))^{1/2} max|d_k|.
    double bound = 0.0;
};

struct RoundingResult {
    IndexSet K;
    std::vector<long long> betas;
    /// Estimated || sum (alpha_k - beta_k) A_k ||.
    double error = 0.0;
    double bound = 0.0;
};

struct OrderingResult {
    /// sigma[j] is the frequency placed (j+1)-th.
    Permutation sigma;
    /// deviations[m-1] = || sum_{j<=m} A_sigma(j) - (m/r) sum_K A_k ||, estimated.
    std::vector<double> prefixDeviations;
    /// prefixNorms[m-1] = || sum_{j<=m} A_sigma(j) ||, estimated.
    std::vector<double> prefixNorms;
    double maxDeviation = 0.0;
    /// (4C + 4) (r log(2n/r))^{1/2} max|d_k|.
    double bound = 0.0;
    /// r <= n/5; outside that range the bound is reported, not promised.
    bool guaranteed = false;
};

/// (r log(2n/r))^{1/2}, the common scale of every bound in this module.
double discrepancy_scale(std::size_t r, int n);

/// Searches signs minimizing |sum sigma_j u_j|_inf. Requires r >= 1 vectors
/// of equal dimension with |u_j|_inf <= 1.
SignVector balance_signs(std::span<const std::vector<double>> u, const DiscrepancyConfig& config);

/// u_k = (A_k(pi l/(5n)) / d for l = 0..10n-1, then 1), n = T.degree(),
/// d = max_{k in K} |d_k|.
std::vector<std::vector<double>> embed_terms(const TrigPolynomial& T, const IndexSet& K);

/// Half/half split with |K+| = floor(|K|/2) and small signed sum.
Split split_terms(const TrigPolynomial& T, const IndexSet& K, const DiscrepancyConfig& config);

/// beta_k in {floor(alpha_k), floor(alpha_k) + 1} with small || sum (alpha-beta) A ||.
/// alphas are aligned with K.elements().
RoundingResult round_coefficients(const TrigPolynomial& T, const IndexSet& K, std::span<const double> alphas,
                                  const DiscrepancyConfig& config);

/// Recursive halving order whose prefixes track (m/r) of the total.
OrderingResult balanced_ordering(const TrigPolynomial& T, const IndexSet& K, const DiscrepancyConfig& config);

} // namespace trigrearr
