#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trigrearr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Denominator size at which the greedy expansion stops.
inline constexpr std::size_t kEgyptianBitBudget = 4096;

/// alpha = 1/l_1 + ... + 1/l_s + r_s with greedily minimal l_j.
struct EgyptianDecomposition {
    Rational alpha;
    std::vector<BigInt> denominators;
    /// remainders[j] = alpha - sum_{i<=j} 1/l_i.
    std::vector<Rational> remainders;
    /// Set when the bit budget cut the expansion short of s terms.
    bool truncated = false;
};

/// Greedy expansion: l_j = min{ l : r_{j-1} - 1/l > 0 } = floor(1/r_{j-1}) + 1.
/// Requires 0 < alpha <= 1 and s >= 1 (DomainError otherwise).
EgyptianDecomposition egyptian_greedy(const Rational& alpha, int s,
                                      std::size_t bitBudget = kEgyptianBitBudget);

/// Exact rational value of a finite double.
Rational exact_rational(double x);

/// 2^{-2^{s-1}} as an exact rational.
Rational egyptian_remainder_bound(int s);

} // namespace trigrearr
