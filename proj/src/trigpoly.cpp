#include "trigrearr/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "trigrearr/errors.hpp"
#include "trigrearr/grid.hpp"

namespace trigrearr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi)
{
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    if (w >= kTwoPi)
        w = 0.0;
    return w;
}

std::complex<double> phasor(const TrigTerm& t) { return std::polar(t.d, t.phi); }

TrigTerm from_phasor(int k, std::complex<double> z)
{
    return TrigTerm::canonical(k, std::abs(z), std::arg(z));
}

TrigPolynomial combine(const TrigPolynomial& a, const TrigPolynomial& b, double sign)
{
    std::vector<TrigTerm> out;
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i].k < tb[j].k)) {
            out.push_back(ta[i++]);
        } else if (i == ta.size() || tb[j].k < ta[i].k) {
            out.push_back(TrigTerm::canonical(tb[j].k, sign * tb[j].d, tb[j].phi));
            ++j;
        } else {
            out.push_back(from_phasor(ta[i].k, phasor(ta[i]) + sign * phasor(tb[j])));
            ++i;
            ++j;
        }
    }
    return {a.d0() + sign * b.d0(), std::move(out)};
}

} // namespace

TrigTerm TrigTerm::canonical(int k, double d, double phi)
{
    if (d < 0.0) {
        d = -d;
        phi += std::numbers::pi;
    }
    if (d == 0.0)
        phi = 0.0;
    return {k, d, wrap_phase(phi)};
}

TrigPolynomial::TrigPolynomial(double d0, std::vector<TrigTerm> terms) : d0_(d0), terms_(std::move(terms))
{
    for (auto& t : terms_) {
        if (t.k < 1)
            throw DomainError("TrigPolynomial: frequency " + std::to_string(t.k) + " < 1");
        if (!std::isfinite(t.d) || !std::isfinite(t.phi))
            throw DomainError("TrigPolynomial: non-finite term");
        t = TrigTerm::canonical(t.k, t.d, t.phi);
    }
    if (!std::isfinite(d0_))
        throw DomainError("TrigPolynomial: non-finite constant");
    std::sort(terms_.begin(), terms_.end(), [](const TrigTerm& a, const TrigTerm& b) { return a.k < b.k; });
    auto dup = std::adjacent_find(terms_.begin(), terms_.end(),
                                  [](const TrigTerm& a, const TrigTerm& b) { return a.k == b.k; });
    if (dup != terms_.end())
        throw DomainError("TrigPolynomial: repeated frequency " + std::to_string(dup->k));
}

const TrigTerm* TrigPolynomial::find(int k) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const TrigTerm& t, int key) { return t.k < key; });
    return it != terms_.end() && it->k == k ? &*it : nullptr;
}

double TrigPolynomial::amplitude(int k) const
{
    const auto* t = find(k);
    return t ? t->d : 0.0;
}

double TrigPolynomial::max_amplitude() const
{
    double d = 0.0;
    for (const auto& t : terms_)
        d = std::max(d, t.d);
    return d;
}

double TrigPolynomial::max_amplitude(const IndexSet& K) const
{
    double d = 0.0;
    for (int k : K)
        d = std::max(d, amplitude(k));
    return d;
}

IndexSet TrigPolynomial::frequencies() const
{
    std::vector<int> ks;
    ks.reserve(terms_.size());
    for (const auto& t : terms_)
        ks.push_back(t.k);
    return IndexSet(degree(), std::move(ks));
}

TrigPolynomial TrigPolynomial::densified(int n) const
{
    std::vector<TrigTerm> out;
    out.reserve(static_cast<std::size_t>(std::max(n, degree())));
    std::size_t i = 0;
    for (int k = 1; k <= std::max(n, degree()); ++k) {
        if (i < terms_.size() && terms_[i].k == k)
            out.push_back(terms_[i++]);
        else if (k <= n)
            out.push_back({k, 0.0, 0.0});
    }
    return {d0_, std::move(out)};
}

TrigPolynomial TrigPolynomial::truncated(int n) const
{
    std::vector<TrigTerm> out;
    for (const auto& t : terms_)
        if (t.k <= n)
            out.push_back(t);
    return {d0_, std::move(out)};
}

TrigPolynomial TrigPolynomial::scaled(double factor) const
{
    std::vector<TrigTerm> out(terms_);
    for (auto& t : out)
        t.d *= factor;
    return {d0_ * factor, std::move(out)};
}

TrigPolynomial TrigPolynomial::operator+(const TrigPolynomial& other) const { return combine(*this, other, 1.0); }

TrigPolynomial TrigPolynomial::operator-(const TrigPolynomial& other) const { return combine(*this, other, -1.0); }

double evaluate(const TrigPolynomial& T, double x)
{
    double s = T.d0();
    for (const auto& t : T.terms())
        s += t.d * std::cos(static_cast<double>(t.k) * x + t.phi);
    return s;
}

std::vector<double> sample(const TrigPolynomial& T, std::size_t N)
{
    if (N > 2 * static_cast<std::size_t>(T.degree()))
        return detail::synthesize(T.d0(), T.terms(), N);
    // Coarse grid: exact table evaluation (aliasing is the correct answer here).
    std::vector<double> out(N, T.d0());
    if (N == 0)
        return out;
    GridTable table(N);
    for (const auto& t : T.terms())
        table.accumulate(t, 1.0, out);
    return out;
}

NormEstimate sup_norm(const TrigPolynomial& T, int refine)
{
    if (refine < 1)
        throw DomainError("sup_norm: refine must be positive");
    const int n = T.degree();
    if (n == 0) {
        const double v = std::abs(T.d0());
        return {v, v, 1};
    }
    const std::size_t M = norm_grid_size(n, refine);
    const auto values = detail::synthesize(T.d0(), T.terms(), M);
    double fine = 0.0;
    double base = 0.0;
    for (std::size_t l = 0; l < M; ++l) {
        const double a = std::abs(values[l]);
        fine = std::max(fine, a);
        if (l % static_cast<std::size_t>(refine) == 0)
            base = std::max(base, a);
    }
    return {fine, 3.0 * base, static_cast<long long>(M)};
}

double norm_estimate(const TrigPolynomial& T, int refine) { return sup_norm(T, refine).lower; }

ComplexCoeffs to_complex(const TrigPolynomial& T)
{
    ComplexCoeffs C;
    C.n = T.degree();
    C.c.assign(static_cast<std::size_t>(2 * C.n + 1), {0.0, 0.0});
    C.c[static_cast<std::size_t>(C.n)] = T.d0();
    for (const auto& t : T.terms()) {
        const auto ck = std::polar(0.5 * t.d, t.phi);
        C.c[static_cast<std::size_t>(C.n + t.k)] = ck;
        C.c[static_cast<std::size_t>(C.n - t.k)] = std::conj(ck);
    }
    return C;
}

TrigPolynomial from_complex(const ComplexCoeffs& C)
{
    if (C.n < 0 || C.c.size() != static_cast<std::size_t>(2 * C.n + 1))
        throw DomainError("from_complex: expected 2n+1 coefficients");
    constexpr double tol = 1e-12;
    const auto c0 = C.at(0);
    if (std::abs(c0.imag()) > tol * std::max(1.0, std::abs(c0)))
        throw DomainError("from_complex: c_0 is not real");
    std::vector<TrigTerm> terms;
    for (int k = 1; k <= C.n; ++k) {
        const auto ck = C.at(k);
        const auto cm = C.at(-k);
        if (std::abs(cm - std::conj(ck)) > tol * std::max(1.0, std::abs(ck)))
            throw DomainError("from_complex: c_{-" + std::to_string(k) + "} != conj(c_" + std::to_string(k) + ")");
        const double d = 2.0 * std::abs(ck);
        if (d >= kAmplitudeFloor)
            terms.push_back(TrigTerm::canonical(k, d, std::arg(ck)));
    }
    return {c0.real(), std::move(terms)};
}

TrigPolynomial subsum(const TrigPolynomial& T, const IndexSet& K)
{
    std::vector<TrigTerm> out;
    out.reserve(K.size());
    for (int k : K) {
        const auto* t = T.find(k);
        if (t == nullptr)
            throw DomainError("subsum: frequency " + std::to_string(k) + " not present");
        out.push_back(*t);
    }
    return {0.0, std::move(out)};
}

double vallee_poussin_weight(int k, int m, int n)
{
    if (k <= m)
        return 1.0;
    if (k >= n)
        return 0.0;
    return static_cast<double>(n - k) / static_cast<double>(n - m);
}

TrigPolynomial vallee_poussin(const TrigPolynomial& source, int m, int n)
{
    if (m < 0 || m >= n)
        throw DomainError("vallee_poussin: requires 0 <= m < n");
    std::vector<TrigTerm> out;
    for (const auto& t : source.terms()) {
        if (t.k >= n)
            break;
        const double w = vallee_poussin_weight(t.k, m, n);
        out.push_back(w == 1.0 ? t : TrigTerm{t.k, w * t.d, t.phi});
    }
    return {source.d0(), std::move(out)};
}

TrigPolynomial fourier_coeffs(const SampledFunction& f, int maxk)
{
    const std::size_t N = f.size();
    if (maxk < 0)
        throw DomainError("fourier_coeffs: maxk must be non-negative");
    if (N < 2 * static_cast<std::size_t>(maxk) + 2)
        throw DomainError("fourier_coeffs: need N >= 2 maxk + 2 samples, got " + std::to_string(N));
    const auto bins = detail::analyze(f.values);
    const double inv = 1.0 / static_cast<double>(N);
    std::vector<TrigTerm> terms;
    for (int k = 1; k <= maxk; ++k) {
        const auto ck = bins[static_cast<std::size_t>(k)] * inv;
        const double d = 2.0 * std::abs(ck);
        if (d >= kAmplitudeFloor)
            terms.push_back(TrigTerm::canonical(k, d, std::arg(ck)));
    }
    return {bins[0].real() * inv, std::move(terms)};
}

} // namespace trigrearr
