#pragma once

#include <functional>
#include <vector>

#include "trigrearr/discrepancy.hpp"
#include "trigrearr/index_set.hpp"
#include "trigrearr/trigpoly.hpp"

namespace trigrearr {

/// A periodic function known through its samples together with the real
/// series extracted from them.
struct Target {
    SampledFunction samples;
    TrigPolynomial series;
    /// Highest extracted frequency.
    int budget = 0;

    /// Extracts coefficients up to maxk (default: (N - 2) / 2).
    static Target from_samples(SampledFunction f, int maxk = -1);
    /// Samples T on N points (N > 2 deg T).
    static Target from_polynomial(const TrigPolynomial& T, std::size_t N);

    int max_degree() const { return budget; }
};

/// delta_lambda for level lambda >= 1.
using SlackSchedule = std::function<double(int)>;

inline double default_slack(int level) { return 1.0 / level; }

struct BlockChoice {
    /// N_1 = 1 < N_2 < ...
    std::vector<int> N;
    /// vpErrors[i] = estimated || V_{N_i, N_{i+1}} - f ||.
    std::vector<double> vpErrors;
    /// The coefficient budget ran out before `levels` were produced.
    bool truncated = false;
};

/// N_{l+1} = argmin over n in (N_l, ceil((1 + delta_l) N_l) + 1] of
/// || V_{N_l, n} - f ||, evaluated on the sample grid; ties go to the smaller n.
/// Produces levels + 1 breakpoints unless maxDegree cuts it short.
BlockChoice choose_blocks(const Target& f, int levels, const SlackSchedule& slack = default_slack,
                          int maxDegree = -1);

struct BlockRounding {
    IndexSet L;
    std::vector<long long> betas; ///< for k = m+1..n
    double roundError = 0.0;
};

/// L = {1..m} u {k in (m, n] : beta_k = 1} from rounding the tail weights
/// (n-k)/(n-m) to {0, 1}. Requires m < n.
BlockRounding vp_round_block(const TrigPolynomial& series, int m, int n, const DiscrepancyConfig& config);

/// Balanced ordering of `block` for the series truncated to ambient degree n.
Permutation order_block(const TrigPolynomial& series, const IndexSet& block, int n, const DiscrepancyConfig& config);

struct BlockSchedule {
    std::vector<int> N;
    std::vector<IndexSet> L;
    std::vector<Permutation> orderings;
    std::vector<double> vpErrors;
    std::vector<double> roundErrors;
    /// roundError / ((n-m)/n log(2n/(n-m)))^{1/2} per level.
    std::vector<double> roundScaled;
    bool truncated = false;
};

struct PrefixError {
    std::size_t length = 0;
    double error = 0.0;
    bool boundary = false;
};

struct RearrangePlan {
    BlockSchedule schedule;
    Permutation permutationPrefix;
    std::vector<PrefixError> prefixErrors;
    /// sup_k k^{1/2} |d_k| over the extracted series.
    double hypothesisConstant = 0.0;

    /// Errors at block boundaries, in level order.
    std::vector<double> boundary_errors() const;
};

struct PlanConfig {
    int levels = 1000;
    /// Highest frequency the plan may use; -1 means every extracted one.
    int maxDegree = -1;
    SlackSchedule slack = default_slack;
    DiscrepancyConfig discrepancy;
};

RearrangePlan build_plan(const Target& f, const PlanConfig& config);

} // namespace trigrearr
