#include "trigrearr/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trigrearr/errors.hpp"
#include "trigrearr/grid.hpp"
#include "trigrearr/local_search.hpp"
#include "trigrearr/random.hpp"

namespace trigrearr {

namespace {

std::vector<int> odd_primes_up_to(int limit)
{
    std::vector<int> out;
    if (limit < 3)
        return out;
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    for (int p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)])
            continue;
        if (p > 2)
            out.push_back(p);
        for (long long q = static_cast<long long>(p) * p; q <= limit; q += p)
            composite[static_cast<std::size_t>(q)] = 1;
    }
    return out;
}

/// Zeroes the terms indexed by K (the polynomial "outside K").
TrigPolynomial zero_out(const TrigPolynomial& T, const IndexSet& K)
{
    std::vector<TrigTerm> terms(T.terms().begin(), T.terms().end());
    for (auto& t : terms)
        if (K.contains(t.k))
            t = {t.k, 0.0, 0.0};
    return {0.0, std::move(terms)};
}

/// One element at a time, drop (grow = false) or add (grow = true) the
/// frequency that leaves the smallest grid norm, until |K| = m.
void greedy_adjust(const TrigPolynomial& T, IndexSet& K, int m)
{
    const auto table = shared_grid_table(norm_grid_size(T.degree(), 1));
    std::vector<double> S(table->size(), 0.0);
    for (int k : K)
        table->accumulate(*T.find(k), 1.0, S);

    std::vector<std::pair<double, std::size_t>> active;
    while (static_cast<int>(K.size()) != m) {
        const bool grow = static_cast<int>(K.size()) < m;
        const double coef = grow ? 1.0 : -1.0;
        std::vector<int> candidates;
        for (int k = 1; k <= T.degree(); ++k)
            if (K.contains(k) != grow)
                candidates.push_back(k);

        double maxD = 0.0;
        for (int k : candidates)
            maxD = std::max(maxD, T.amplitude(k));
        const double cur = sup_abs(S);
        active.clear();
        for (std::size_t i = 0; i < S.size(); ++i) {
            const double a = std::abs(S[i]);
            if (a > cur - 2.0 * maxD)
                active.emplace_back(a, i);
        }
        std::sort(active.begin(), active.end(), [](const auto& p, const auto& q) {
            return p.first != q.first ? p.first > q.first : p.second < q.second;
        });

        double best = std::numeric_limits<double>::infinity();
        int bestK = candidates.front();
        for (int k : candidates) {
            const auto& t = *T.find(k);
            const double a = coef * t.d * std::cos(t.phi);
            const double b = coef * t.d * std::sin(t.phi);
            double value = 0.0;
            bool rejected = false;
            for (const auto& [mag, i] : active) {
                if (mag + t.d <= value)
                    break;
                const double v = std::abs(S[i] + table->at(k, a, b, i));
                if (v > value) {
                    value = v;
                    if (value >= best) {
                        rejected = true;
                        break;
                    }
                }
            }
            if (!rejected) {
                best = value;
                bestK = k;
            }
        }
        table->accumulate(*T.find(bestK), coef, S);
        if (grow)
            K.insert(bestK);
        else
            K.erase(bestK);
    }
}

SelectionResult select_core(const TrigPolynomial& T, int m, const SelectionConfig& config)
{
    const int n = T.degree();
    SelectionResult res;
    res.n = n;
    res.m = m;
    res.K = IndexSet(n);
    if (m == 0)
        return res;

    IndexSet core(n);
    const double logn = std::log(static_cast<double>(n));
    const double log3n = logn * logn * logn;
    const bool tiny = n < 3 || static_cast<double>(m) <= 0.2 * static_cast<double>(n) / log3n;
    if (tiny) {
        res.fallbackReason = n < 3 ? "degree too small for residue classes" : "m below 0.2 n / log^3 n";
    } else {
        const double lll = log3(static_cast<double>(n));
        res.l0 = std::max(2, static_cast<int>(std::floor(5.0 * lll)));
        res.s = std::max(1, static_cast<int>(std::floor(2.0 * lll)));
        res.gamma = std::max(0.0, res.l0 * static_cast<double>(m) / n - 0.1 / log3n);
        res.g = static_cast<int>(std::floor(res.gamma));
        res.alpha = res.gamma - res.g;

        const long long base = 2LL * res.l0;
        for (int j = 1; j <= res.g; ++j)
            res.classesUsed.push_back({"base", BigInt(base), j, residue_class(n, base, j)});
        if (res.alpha > 0.0) {
            const auto eg = egyptian_greedy(exact_rational(res.alpha), res.s);
            res.denominators = eg.denominators;
            for (std::size_t j = 0; j < eg.denominators.size(); ++j) {
                const long long residue = res.g + static_cast<long long>(j) + 1;
                const BigInt modulus = BigInt(base) * eg.denominators[j];
                // Beyond n + residue the class is just {residue} within [1, n].
                const long long limit = static_cast<long long>(n) + residue + 1;
                const long long effective = modulus > limit ? limit : static_cast<long long>(modulus);
                res.classesUsed.push_back({"egyptian", modulus, residue, residue_class(n, effective, residue)});
            }
        }

        bool disjoint = true;
        for (const auto& c : res.classesUsed) {
            disjoint = disjoint && core.disjoint(c.members);
            core = core.united(c.members);
        }
        if (res.g + res.s < res.l0 - 1 && !disjoint)
            throw std::logic_error("select_terms: residue classes overlap despite g + s < l0 - 1");
        if (!disjoint) {
            res.fallback = true;
            res.fallbackReason = "residue classes overlap";
            res.classesUsed.clear();
            core = IndexSet(n);
        }
    }
    res.coreSize = static_cast<int>(core.size());

    IndexSet K = core;
    const int need = m - static_cast<int>(core.size());
    if (need > 0) {
        const TrigPolynomial outside = zero_out(T, core);
        res.prime = find_prime(outside);
        const int p = res.prime->p;

        struct Candidate {
            int residue;
            IndexSet cls;
            std::size_t fresh;
        };
        std::vector<Candidate> classes;
        for (int j = 0; j <= p / 2; ++j) {
            auto cls = residue_class(n, p, j);
            const std::size_t fresh = cls.minus(core).size();
            if (fresh > 0)
                classes.push_back({j, std::move(cls), fresh});
        }
        std::stable_sort(classes.begin(), classes.end(),
                         [](const Candidate& a, const Candidate& b) { return a.fresh > b.fresh; });

        const double outsideNorm = norm_estimate(outside, config.discrepancy.refine);
        int remaining = need;
        for (const auto& c : classes) {
            if (remaining == 0)
                break;
            DiscrepancyConfig dc = config.discrepancy;
            dc.seed = mix_seed(config.discrepancy.seed, static_cast<std::uint64_t>(c.residue));
            const auto ord = class_ordering(outside, c.cls, dc, outsideNorm);
            res.orderingConstant = std::max(res.orderingConstant, ord.constant);
            ResidueClassUse use{"prime", BigInt(p), c.residue, IndexSet(n)};
            for (int k : ord.tau) {
                if (remaining == 0)
                    break;
                if (!K.contains(k)) {
                    K.insert(k);
                    use.members.insert(k);
                    --remaining;
                }
            }
            res.padded += static_cast<int>(use.members.size());
            res.classesUsed.push_back(std::move(use));
        }
    }

    if (static_cast<int>(K.size()) != m) {
        res.fallback = true;
        res.fallbackReason = static_cast<int>(K.size()) > m ? "core exceeds m" : "padding exhausted";
        greedy_adjust(T, K, m);
        for (auto& c : res.classesUsed)
            c.members = c.members.intersected(K);
    }
    res.K = std::move(K);
    return res;
}

} // namespace

double log3(double x) { return std::log(std::log(std::log(x))); }

IndexSet residue_class(int n, long long l, long long j)
{
    if (l < 1)
        throw DomainError("residue_class: modulus must be >= 1");
    if (n < 0)
        throw DomainError("residue_class: negative degree");
    const long long a = ((j % l) + l) % l;
    const long long b = (l - a) % l;
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) {
        const long long r = k % l;
        if (r == a || r == b)
            out.push_back(k);
    }
    return IndexSet(n, std::move(out));
}

double class_subsum_norm(const TrigPolynomial& T, long long l, long long j, int refine)
{
    const auto K = residue_class(T.degree(), l, j).intersected(T.frequencies());
    return norm_estimate(subsum(T, K), refine);
}

double collision_weight(const TrigPolynomial& T, int p)
{
    std::vector<double> sum(static_cast<std::size_t>(p), 0.0);
    std::vector<double> sumSq(static_cast<std::size_t>(p), 0.0);
    for (const auto& t : T.terms()) {
        const double w = t.d * t.d;
        const auto r = static_cast<std::size_t>(t.k % p);
        sum[r] += w;
        sumSq[r] += w * w;
    }
    double S = 0.0;
    for (std::size_t r = 0; r < sum.size(); ++r)
        S += sum[r] * sum[r] - sumSq[r];
    return S;
}

PrimeReport find_prime(const TrigPolynomial& T, std::optional<int> cap)
{
    const int n = T.degree();
    if (n < 2)
        throw DomainError("find_prime: degree must be >= 2");
    PrimeReport rep;
    const double l = std::log(static_cast<double>(n) + 3.0);
    rep.searchBound = 2.0 * l * l * l;
    int limit = std::max(3, static_cast<int>(std::floor(rep.searchBound)));
    if (cap)
        limit = std::max(3, std::min(limit, *cap));
    double best = std::numeric_limits<double>::infinity();
    for (int p : odd_primes_up_to(limit)) {
        const double S = collision_weight(T, p);
        rep.candidates.emplace_back(p, S);
        if (S < best) {
            best = S;
            rep.p = p;
        }
    }
    rep.collisionWeight = best;
    const double l1 = std::log(static_cast<double>(n) + 1.0);
    rep.scaledWeight = best * l1 * l1;
    return rep;
}

ClassOrdering class_ordering(const TrigPolynomial& T, const IndexSet& cls, const DiscrepancyConfig& config,
                             std::optional<double> normT)
{
    ClassOrdering out;
    if (cls.empty())
        return out;
    const double norm = normT ? *normT : norm_estimate(T, config.refine);
    if (T.max_amplitude(cls) == 0.0) {
        out.tau.assign(cls.begin(), cls.end());
        return out;
    }
    const auto ord = balanced_ordering(T, cls, config);
    out.tau = ord.sigma;
    out.maxPrefixNorm = *std::max_element(ord.prefixNorms.begin(), ord.prefixNorms.end());
    out.constant = out.maxPrefixNorm / (1.0 + norm);
    return out;
}

SelectionResult select_terms(const TrigPolynomial& T, int m, const SelectionConfig& config)
{
    const int n = T.degree();
    if (m < 0 || m > n)
        throw DomainError("select_terms: need 0 <= m <= n = " + std::to_string(n));
    const TrigPolynomial dense = T.densified(n).without_constant();

    SelectionResult res;
    if (2 * m > n) {
        res = select_core(dense, n - m, config);
        res.K = res.K.complement();
        res.complemented = true;
        res.m = m;
    } else {
        res = select_core(dense, m, config);
    }
    res.polynomialNorm = norm_estimate(T, config.refine);
    res.subsumNorm = norm_estimate(subsum(dense, res.K), config.refine);
    res.normRatio = res.polynomialNorm > 0.0 ? res.subsumNorm / res.polynomialNorm : 0.0;
    return res;
}

} // namespace trigrearr
