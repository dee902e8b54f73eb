#pragma once

// Reference computations for tests. Everything here is deliberately naive
// (direct cosine sums, exhaustive enumeration, textbook quadrature) and shares
// no code with the library's grid tables or FFT paths.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trigrearr/trigpoly.hpp"

namespace oracle {

using trigrearr::TrigPolynomial;
using trigrearr::TrigTerm;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double eval(const TrigPolynomial& T, double x)
{
    double s = T.d0();
    for (const auto& t : T.terms())
        s += t.d * std::cos(t.k * x + t.phi);
    return s;
}

/// Values of T at x_l = 2 pi l / M by rotating phasors (exact up to rounding).
inline std::vector<double> grid_values(const TrigPolynomial& T, std::size_t M)
{
    std::vector<double> v(M, T.d0());
    for (const auto& t : T.terms())
        for (std::size_t l = 0; l < M; ++l)
            v[l] += t.d * std::cos(kTwoPi * static_cast<double>((static_cast<std::uint64_t>(t.k) * l) % M) /
                                       static_cast<double>(M) + t.phi);
    return v;
}

/// True sup norm to ~1e-12: dense scan, then golden-section refinement of
/// the largest grid peaks inside their neighbouring grid cells.
inline double dense_norm(const TrigPolynomial& T, std::size_t pointsPerDegree = 32, std::size_t peaks = 12)
{
    if (T.terms().empty())
        return std::abs(T.d0());
    const std::size_t M = std::max<std::size_t>(256, pointsPerDegree * static_cast<std::size_t>(T.degree()));
    const auto v = grid_values(T, M);
    std::vector<std::pair<double, std::size_t>> cand;
    for (std::size_t l = 0; l < M; ++l) {
        const double a = std::abs(v[l]);
        if (a >= std::abs(v[(l + M - 1) % M]) && a >= std::abs(v[(l + 1) % M]))
            cand.emplace_back(a, l);
    }
    std::sort(cand.rbegin(), cand.rend());
    if (cand.size() > peaks)
        cand.resize(peaks);
    const double h = kTwoPi / static_cast<double>(M);
    double best = cand.empty() ? 0.0 : cand.front().first;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    for (const auto& [a, l] : cand) {
        double lo = h * (static_cast<double>(l) - 1.0);
        double hi = h * (static_cast<double>(l) + 1.0);
        auto f = [&](double x) { return std::abs(eval(T, x)); };
        double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + ratio * (hi - lo);
                f2 = f(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - ratio * (hi - lo);
                f1 = f(x1);
            }
        }
        best = std::max({best, a, f1, f2});
    }
    return best;
}

/// Trapezoid-rule coefficient of cos/sin on N samples: d_k and phi_k.
inline std::pair<double, double> quadrature_coeff(const std::vector<double>& f, int k)
{
    const std::size_t N = f.size();
    double a = 0.0, b = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        const double x = kTwoPi * static_cast<double>(j) / static_cast<double>(N);
        a += f[j] * std::cos(k * x);
        b += f[j] * std::sin(k * x);
    }
    const double scale = (k == 0 ? 1.0 : 2.0) / static_cast<double>(N);
    a *= scale;
    b *= scale;
    // d cos(kx + phi) = d cos(phi) cos(kx) - d sin(phi) sin(kx)
    double phi = std::atan2(-b, a);
    if (phi < 0)
        phi += kTwoPi;
    return {std::hypot(a, b), phi};
}

/// Greedy Egyptian fractions by linear scan over candidate denominators.
struct Greedy {
    std::vector<boost::multiprecision::cpp_int> l;
    std::vector<boost::multiprecision::cpp_rational> rem;
};

inline Greedy egyptian_scan(boost::multiprecision::cpp_rational alpha, int s)
{
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    Greedy g;
    cpp_int start = 1;
    for (int j = 0; j < s; ++j) {
        cpp_int l = start;
        // jump close to 1/alpha then walk, so the scan stays cheap
        const cpp_int guess = boost::multiprecision::denominator(alpha) / boost::multiprecision::numerator(alpha);
        if (guess > l + 2)
            l = guess - 2;
        while (!(alpha - cpp_rational(1, l) > 0))
            ++l;
        alpha -= cpp_rational(1, l);
        g.l.push_back(l);
        g.rem.push_back(alpha);
        start = l + 1;
    }
    return g;
}

/// min over x in {+-1}^r of |offset + sum x_j u_j|_inf, with Gray-code updates.
inline double exhaustive_signs(const std::vector<std::vector<double>>& u, const std::vector<double>& offset = {},
                               std::vector<int>* argmin = nullptr)
{
    const std::size_t r = u.size();
    const std::size_t D = u.front().size();
    std::vector<double> S(D, 0.0);
    if (!offset.empty())
        S = offset;
    std::vector<int> x(r, 1);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < D; ++i)
            S[i] += u[j][i];
    auto value = [&] {
        double m = 0.0;
        for (double s : S)
            m = std::max(m, std::abs(s));
        return m;
    };
    double best = value();
    if (argmin)
        *argmin = x;
    const std::uint64_t total = std::uint64_t{1} << r;
    for (std::uint64_t c = 1; c < total; ++c) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(c));
        x[j] = -x[j];
        for (std::size_t i = 0; i < D; ++i)
            S[i] += 2.0 * x[j] * u[j][i];
        const double v = value();
        if (v < best) {
            best = v;
            if (argmin)
                *argmin = x;
        }
    }
    return best;
}

/// Calls visit(subset) for every size-m subset of items, in lexicographic order.
inline void for_each_subset(const std::vector<int>& items, std::size_t m,
                            const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (pick.size() == m) {
            visit(pick);
            return;
        }
        for (std::size_t i = from; i + (m - pick.size()) <= items.size(); ++i) {
            pick.push_back(items[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

/// Polynomial with the listed frequencies of T multiplied by the given factors.
inline TrigPolynomial weighted(const TrigPolynomial& T, const std::vector<int>& ks, const std::vector<double>& w)
{
    std::vector<TrigTerm> terms;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        const auto* t = T.find(ks[j]);
        if (t && w[j] != 0.0)
            terms.push_back({t->k, t->d * w[j], t->phi});
    }
    return TrigPolynomial(0.0, std::move(terms));
}

/// Seeded polynomial with d_k = k^{-a} (a = 0: constant 1) and uniform phases.
inline TrigPolynomial random_poly(int n, std::uint64_t seed, double a = 0.0, double d0 = 0.0)
{
    std::mt19937_64 eng(seed * 7919 + 17);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    std::vector<TrigTerm> terms;
    for (int k = 1; k <= n; ++k)
        terms.push_back({k, std::pow(static_cast<double>(k), -a), phase(eng)});
    return TrigPolynomial(d0, std::move(terms));
}

} // namespace oracle
