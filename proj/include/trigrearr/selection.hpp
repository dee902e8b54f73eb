#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigrearr/discrepancy.hpp"
#include "trigrearr/egyptian.hpp"
#include "trigrearr/index_set.hpp"
#include "trigrearr/trigpoly.hpp"

namespace trigrearr {

/// {k in [1, n] : k = j or k = -j (mod l)}.
IndexSet residue_class(int n, long long l, long long j);

/// Estimated norm of the subsum of T over residue_class(deg T, l, j).
double class_subsum_norm(const TrigPolynomial& T, long long l, long long j, int refine = kDefaultRefine);

struct PrimeReport {
    int p = 3;
    /// S(p) = sum over k1 != k2, k1 = k2 (mod p) of d_k1^2 d_k2^2.
    double collisionWeight = 0.0;
    /// S(p) log^2(n+1), expected to stay bounded by a constant.
    double scaledWeight = 0.0;
    /// 2 log^3(n+3).
    double searchBound = 0.0;
    std::vector<std::pair<int, double>> candidates;
};

/// Odd prime p <= 2 log^3(n+3) (at least p = 3) minimizing S(p), ties to the
/// smallest p. An optional cap further restricts the candidates.
PrimeReport find_prime(const TrigPolynomial& T, std::optional<int> cap = std::nullopt);

/// S(p) for a single modulus.
double collision_weight(const TrigPolynomial& T, int p);

struct ClassOrdering {
    Permutation tau;
    /// max_m || sum_{j<=m} A_tau(j) || / (1 + ||T||).
    double constant = 0.0;
    double maxPrefixNorm = 0.0;
};

/// Order of a residue class with bounded prefix subsums; delegates to
/// balanced_ordering and reports the measured constant.
/// normT, when given, is used as ||T|| instead of re-estimating it.
ClassOrdering class_ordering(const TrigPolynomial& T, const IndexSet& cls, const DiscrepancyConfig& config,
                             std::optional<double> normT = std::nullopt);

struct ResidueClassUse {
    std::string kind; ///< "base", "egyptian" or "prime"
    BigInt modulus = 0;
    long long residue = 0;
    /// Elements this class contributed to K.
    IndexSet members;
};

struct SelectionResult {
    int n = 0;
    int m = 0;
    IndexSet K;
    int l0 = 0;
    int g = 0;
    int s = 0;
    double gamma = 0.0;
    double alpha = 0.0;
    std::vector<BigInt> denominators;
    std::vector<ResidueClassUse> classesUsed;
    /// |K'| before padding.
    int coreSize = 0;
    int padded = 0;
    bool complemented = false;
    bool fallback = false;
    std::string fallbackReason;
    std::optional<PrimeReport> prime;
    double orderingConstant = 0.0;
    double subsumNorm = 0.0;
    double polynomialNorm = 0.0;
    /// subsumNorm / polynomialNorm (0 when T = 0).
    double normRatio = 0.0;
};

struct SelectionConfig {
    /// Search settings for class orderings; its refine applies to the
    /// prefix measurements made while padding.
    DiscrepancyConfig discrepancy{.refine = 2};
    /// Refinement for the reported norms.
    int refine = kDefaultRefine;
};

/// Picks exactly m of the n = deg T frequencies with small subsum norm.
SelectionResult select_terms(const TrigPolynomial& T, int m, const SelectionConfig& config = {});

/// log log log x with natural logarithms.
double log3(double x);

} // namespace trigrearr
