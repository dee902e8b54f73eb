#pragma once

#include <complex>
#include <span>
#include <vector>

#include "trigrearr/index_set.hpp"

namespace trigrearr {

/// Refinement factor applied on top of the 10n grid when reporting norms.
inline constexpr int kDefaultRefine = 8;

/// Amplitudes below this are treated as absent after coefficient extraction.
inline constexpr double kAmplitudeFloor = 1e-15;

/// One real-form term d cos(kx + phi), k >= 1.
struct TrigTerm {
    int k = 1;
    double d = 0.0;
    double phi = 0.0;

    /// Brings (d, phi) to d >= 0, phi in [0, 2pi).
    static TrigTerm canonical(int k, double d, double phi);

    bool operator==(const TrigTerm&) const = default;
};

/// d0 + sum_k d_k cos(kx + phi_k) with pairwise distinct frequencies.
class TrigPolynomial {
public:
    TrigPolynomial() = default;
    /// Canonicalizes every term and sorts by frequency. Throws DomainError
    /// for k < 1 or repeated frequencies.
    TrigPolynomial(double d0, std::vector<TrigTerm> terms);

    double d0() const { return d0_; }
    std::span<const TrigTerm> terms() const { return terms_; }
    /// Largest stored frequency, 0 when there are no terms.
    int degree() const { return terms_.empty() ? 0 : terms_.back().k; }
    bool empty() const { return terms_.empty() && d0_ == 0.0; }

    const TrigTerm* find(int k) const;
    bool has(int k) const { return find(k) != nullptr; }
    /// |d_k|, zero for absent frequencies.
    double amplitude(int k) const;
    double max_amplitude() const;
    double max_amplitude(const IndexSet& K) const;

    /// Stored frequencies as an IndexSet over [1, degree()].
    IndexSet frequencies() const;

    /// Same polynomial with explicit zero terms for absent k in [1, n].
    TrigPolynomial densified(int n) const;
    /// Terms with frequency <= n (constant kept).
    TrigPolynomial truncated(int n) const;
    TrigPolynomial without_constant() const { return {0.0, terms_}; }
    TrigPolynomial scaled(double factor) const;

    TrigPolynomial operator+(const TrigPolynomial& other) const;
    TrigPolynomial operator-(const TrigPolynomial& other) const;
    bool operator==(const TrigPolynomial&) const = default;

private:
    double d0_ = 0.0;
    std::vector<TrigTerm> terms_;
};

/// c_k for k in [-n, n], stored at index k + n.
struct ComplexCoeffs {
    int n = 0;
    std::vector<std::complex<double>> c;

    std::complex<double> at(int k) const { return c.at(static_cast<std::size_t>(k + n)); }
};

/// Bracket for the sup norm obtained from equispaced samples.
struct NormEstimate {
    double lower = 0.0;
    double upper = 0.0;
    long long gridSize = 0;
};

/// Samples of a 2pi-periodic function at x_j = 2 pi j / N.
struct SampledFunction {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

double evaluate(const TrigPolynomial& T, double x);

/// lower: max |T| over refine*10n points pi l / (refine 5n).
/// upper: 3 * max |T| over the base 10n points.
NormEstimate sup_norm(const TrigPolynomial& T, int refine = kDefaultRefine);

/// Shorthand for sup_norm(T, refine).lower.
double norm_estimate(const TrigPolynomial& T, int refine = kDefaultRefine);

ComplexCoeffs to_complex(const TrigPolynomial& T);
/// Throws DomainError unless c_{-k} = conj(c_k) within 1e-12 and c_0 is real.
TrigPolynomial from_complex(const ComplexCoeffs& C);

/// Terms indexed by K, constant dropped. Throws DomainError if some k in K
/// is not a stored frequency of T.
TrigPolynomial subsum(const TrigPolynomial& T, const IndexSet& K);

/// Weight of A_k in V_{m,n}.
double vallee_poussin_weight(int k, int m, int n);

/// V_{m,n} = sum_{k<=m} A_k + sum_{m<k<=n} (n-k)/(n-m) A_k. Zero-weight terms
/// are omitted. Throws DomainError unless 0 <= m < n.
TrigPolynomial vallee_poussin(const TrigPolynomial& source, int m, int n);

/// Coefficients d_k, phi_k for k = 0..maxk from N uniform samples.
/// Requires N >= 2 maxk + 2.
TrigPolynomial fourier_coeffs(const SampledFunction& f, int maxk);

/// T at x_j = 2 pi j / N for j = 0..N-1.
std::vector<double> sample(const TrigPolynomial& T, std::size_t N);

} // namespace trigrearr
