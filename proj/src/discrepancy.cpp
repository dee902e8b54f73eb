#include "trigrearr/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "trigrearr/errors.hpp"
#include "trigrearr/grid.hpp"
#include "trigrearr/local_search.hpp"
#include "trigrearr/random.hpp"

namespace trigrearr {

namespace {

constexpr std::size_t kBaseCaseSize = 8;

void require_subset(const TrigPolynomial& T, const IndexSet& K, const char* op)
{
    for (int k : K)
        if (!T.has(k))
            throw DomainError(std::string(op) + ": frequency " + std::to_string(k) + " not present");
}

SearchOptions search_options(const DiscrepancyConfig& c)
{
    if (c.restarts < 1)
        throw DomainError("DiscrepancyConfig: restarts must be >= 1");
    return {c.seed, c.restarts, c.maxFlips};
}

void check_budget(const SearchOutcome& found, const DiscrepancyConfig& c)
{
    if (found.budgetHit && c.strictBudget)
        throw BudgetError("sign search exceeded maxFlips = " + std::to_string(c.maxFlips));
}

std::shared_ptr<const GridTable> embedding_table(const TrigPolynomial& T)
{
    return shared_grid_table(norm_grid_size(T.degree(), 1));
}

double signed_norm(const TrigPolynomial& T, const IndexSet& plus, const IndexSet& minus, int refine)
{
    std::vector<TrigTerm> terms;
    terms.reserve(plus.size() + minus.size());
    for (int k : plus)
        terms.push_back(*T.find(k));
    for (int k : minus) {
        auto t = *T.find(k);
        t.d = -t.d;
        terms.push_back(t);
    }
    return norm_estimate(TrigPolynomial(0.0, std::move(terms)), refine);
}

Split split_with_table(const TrigPolynomial& T, const IndexSet& K, const DiscrepancyConfig& config,
                       const std::shared_ptr<const GridTable>& table)
{
    const std::size_t r = K.size();
    if (r == 0)
        throw DomainError("split_terms: empty index set");
    const int n = T.degree();
    const double d = T.max_amplitude(K);
    const std::size_t half = r / 2;

    Split out{IndexSet(K.ambient()), IndexSet(K.ambient())};
    out.bound = config.constantC * discrepancy_scale(r, n) * d;

    std::vector<int> sigma(r, -1);
    if (d > 0.0) {
        std::vector<TermRows::Row> rows;
        rows.reserve(r);
        for (int k : K) {
            const auto* t = T.find(k);
            rows.push_back({k, t->d * std::cos(t->phi) / d, t->d * std::sin(t->phi) / d, 1.0});
        }
        const auto found = minimize_sup(TermRows(table, std::move(rows), true), {}, {}, {}, search_options(config));
        check_budget(found, config);
        sigma = found.x;
        out.signDiscrepancy = found.value;
        long long total = 0;
        for (int s : sigma)
            total += s;
        if (total > 0)
            for (int& s : sigma)
                s = -s;
    }

    std::vector<int> minusSide;
    for (std::size_t j = 0; j < r; ++j) {
        if (sigma[j] == 1)
            out.Kplus.insert(K.elements()[j]);
        else
            minusSide.push_back(K.elements()[j]);
    }
    // Repair: move the smallest frequencies of the minus side across.
    const std::size_t need = half - out.Kplus.size();
    for (std::size_t i = 0; i < minusSide.size(); ++i) {
        if (i < need)
            out.Kplus.insert(minusSide[i]);
        else
            out.Kminus.insert(minusSide[i]);
    }
    out.repaired = static_cast<int>(need);
    out.deviation = signed_norm(T, out.Kplus, out.Kminus, config.refine);
    return out;
}

Permutation order_recursive(const TrigPolynomial& T, const IndexSet& K, const DiscrepancyConfig& config,
                            const std::shared_ptr<const GridTable>& table, std::uint64_t node)
{
    if (K.size() <= kBaseCaseSize)
        return Permutation(K.begin(), K.end());
    DiscrepancyConfig local = config;
    local.seed = mix_seed(config.seed, node);
    const Split split = split_with_table(T, K, local, table);
    Permutation sigma = order_recursive(T, split.Kplus, config, table, 2 * node + 1);
    const Permutation minus = order_recursive(T, split.Kminus, config, table, 2 * node + 2);
    sigma.insert(sigma.end(), minus.rbegin(), minus.rend());
    return sigma;
}

} // namespace

double discrepancy_scale(std::size_t r, int n)
{
    if (r == 0)
        return 0.0;
    const double rr = static_cast<double>(r);
    return std::sqrt(rr * std::log(2.0 * static_cast<double>(n) / rr));
}

SignVector balance_signs(std::span<const std::vector<double>> u, const DiscrepancyConfig& config)
{
    if (u.empty())
        throw DomainError("balance_signs: no vectors");
    for (const auto& v : u)
        for (double x : v)
            if (!(std::abs(x) <= 1.0 + 1e-12))
                throw DomainError("balance_signs: vectors must satisfy |u|_inf <= 1");
    const DenseRows rows(std::vector<std::vector<double>>(u.begin(), u.end()));
    const auto found = minimize_sup(rows, {}, {}, {}, search_options(config));
    check_budget(found, config);
    return {found.x, found.value, found.budgetHit};
}

std::vector<std::vector<double>> embed_terms(const TrigPolynomial& T, const IndexSet& K)
{
    if (K.empty())
        throw DomainError("embed_terms: empty index set");
    require_subset(T, K, "embed_terms");
    const double d = T.max_amplitude(K);
    if (d <= 0.0)
        throw DomainError("embed_terms: all amplitudes are zero");
    const std::size_t M = norm_grid_size(T.degree(), 1);
    const GridTable table(M);
    std::vector<std::vector<double>> out;
    out.reserve(K.size());
    for (int k : K) {
        std::vector<double> u(M + 1, 0.0);
        table.accumulate(*T.find(k), 1.0 / d, std::span<double>(u.data(), M));
        u[M] = 1.0;
        out.push_back(std::move(u));
    }
    return out;
}

Split split_terms(const TrigPolynomial& T, const IndexSet& K, const DiscrepancyConfig& config)
{
    require_subset(T, K, "split_terms");
    return split_with_table(T, K, config, embedding_table(T));
}

RoundingResult round_coefficients(const TrigPolynomial& T, const IndexSet& K, std::span<const double> alphas,
                                  const DiscrepancyConfig& config)
{
    require_subset(T, K, "round_coefficients");
    if (alphas.size() != K.size())
        throw DomainError("round_coefficients: one weight per frequency required");
    for (double a : alphas)
        if (!std::isfinite(a))
            throw DomainError("round_coefficients: non-finite weight");

    const std::size_t r = K.size();
    RoundingResult out{K, std::vector<long long>(r, 0)};
    if (r == 0)
        return out;
    const int n = T.degree();

    // With b_k in {0,1} and x_k = 2 b_k - 1:
    // sum (frac_k - b_k) A_k = sum (frac_k - 1/2) A_k + sum x_k (-A_k / 2).
    auto table = embedding_table(T);
    std::vector<double> offset(table->size(), 0.0);
    std::vector<TermRows::Row> rows;
    std::vector<int> init(r);
    std::vector<char> frozen(r, 0);
    std::vector<double> floors(r);
    for (std::size_t j = 0; j < r; ++j) {
        const auto& t = *T.find(K.elements()[j]);
        floors[j] = std::floor(alphas[j]);
        const double frac = alphas[j] - floors[j];
        table->accumulate(t, frac - 0.5, offset);
        rows.push_back({t.k, -0.5 * t.d * std::cos(t.phi), -0.5 * t.d * std::sin(t.phi), 0.0});
        init[j] = frac > 0.5 ? 1 : -1;
        if (t.d == 0.0) {
            frozen[j] = 1;
            init[j] = -1;
        }
    }
    const auto found = minimize_sup(TermRows(table, std::move(rows), false), offset, init, frozen,
                                    search_options(config));
    check_budget(found, config);

    std::vector<TrigTerm> residual;
    for (std::size_t j = 0; j < r; ++j) {
        out.betas[j] = static_cast<long long>(floors[j]) + (found.x[j] == 1 ? 1 : 0);
        auto t = *T.find(K.elements()[j]);
        t.d *= alphas[j] - static_cast<double>(out.betas[j]);
        residual.push_back(t);
    }
    out.error = norm_estimate(TrigPolynomial(0.0, std::move(residual)), config.refine);
    out.bound = config.constantC * discrepancy_scale(r, n) * T.max_amplitude(K);
    return out;
}

OrderingResult balanced_ordering(const TrigPolynomial& T, const IndexSet& K, const DiscrepancyConfig& config)
{
    if (K.empty())
        throw DomainError("balanced_ordering: empty index set");
    require_subset(T, K, "balanced_ordering");
    const std::size_t r = K.size();
    const int n = T.degree();

    OrderingResult out;
    out.sigma = r <= kBaseCaseSize ? Permutation(K.begin(), K.end())
                                   : order_recursive(T, K, config, embedding_table(T), 0);

    const auto fineTable = shared_grid_table(norm_grid_size(n, config.refine));
    const GridTable& fine = *fineTable;
    std::vector<double> total(fine.size(), 0.0);
    for (int k : K)
        fine.accumulate(*T.find(k), 1.0, total);
    std::vector<double> prefix(fine.size(), 0.0);
    const double rr = static_cast<double>(r);
    for (std::size_t m = 1; m <= r; ++m) {
        fine.accumulate(*T.find(out.sigma[m - 1]), 1.0, prefix);
        const double share = static_cast<double>(m) / rr;
        double dev = 0.0;
        if (m < r)
            for (std::size_t l = 0; l < prefix.size(); ++l)
                dev = std::max(dev, std::abs(prefix[l] - share * total[l]));
        out.prefixDeviations.push_back(dev);
        out.prefixNorms.push_back(sup_abs(prefix));
        out.maxDeviation = std::max(out.maxDeviation, dev);
    }
    out.bound = (4.0 * config.constantC + 4.0) * discrepancy_scale(r, n) * T.max_amplitude(K);
    out.guaranteed = 5 * r <= static_cast<std::size_t>(n);
    return out;
}

} // namespace trigrearr
