#include "trigrearr/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trigrearr/errors.hpp"
#include "trigrearr/grid.hpp"
#include "trigrearr/random.hpp"

namespace trigrearr {

namespace {

void subtract_terms(const GridTable& table, const TrigPolynomial& series, int from, int to, std::vector<double>& R)
{
    for (int k = from; k <= to; ++k)
        if (const auto* t = series.find(k))
            table.accumulate(*t, -1.0, R);
}

double round_scaling(int m, int n)
{
    const double gap = static_cast<double>(n - m);
    const double nn = static_cast<double>(n);
    return std::sqrt(gap / nn * std::log(2.0 * nn / gap));
}

} // namespace

Target Target::from_samples(SampledFunction f, int maxk)
{
    const int N = static_cast<int>(f.size());
    if (maxk < 0)
        maxk = std::max(0, (N - 2) / 2);
    Target t;
    t.series = fourier_coeffs(f, maxk);
    t.samples = std::move(f);
    t.budget = maxk;
    return t;
}

Target Target::from_polynomial(const TrigPolynomial& T, std::size_t N)
{
    if (N <= 2 * static_cast<std::size_t>(T.degree()))
        throw DomainError("Target: sample grid too coarse for the polynomial");
    Target t;
    t.samples.values = sample(T, N);
    t.series = T;
    t.budget = static_cast<int>((N - 2) / 2);
    return t;
}

std::vector<double> RearrangePlan::boundary_errors() const
{
    std::vector<double> out;
    for (const auto& e : prefixErrors)
        if (e.boundary)
            out.push_back(e.error);
    return out;
}

BlockChoice choose_blocks(const Target& f, int levels, const SlackSchedule& slack, int maxDegree)
{
    if (levels < 0)
        throw DomainError("choose_blocks: negative level count");
    const int D = maxDegree < 0 ? f.max_degree() : std::min(maxDegree, f.max_degree());
    const auto& series = f.series;
    const std::size_t Ns = f.samples.size();
    const auto table = shared_grid_table(Ns);

    BlockChoice out;
    out.N.push_back(1);
    // R = f - sum_{k <= N_lambda} A_k on the sample grid.
    std::vector<double> R(f.samples.values);
    for (double& v : R)
        v -= series.d0();
    subtract_terms(*table, series, 1, 1, R);

    std::vector<double> partial(Ns), weighted(Ns), trial(Ns);
    for (int level = 1; level <= levels; ++level) {
        const int m = out.N.back();
        const double delta = slack(level);
        const int hi = std::min(static_cast<int>(std::ceil((1.0 + delta) * m)) + 1, D);
        if (hi <= m) {
            out.truncated = true;
            break;
        }
        // weighted = sum_{m<k<n} (n-k) A_k, partial = sum_{m<k<n} A_k, built as n grows.
        std::fill(partial.begin(), partial.end(), 0.0);
        std::fill(weighted.begin(), weighted.end(), 0.0);
        double best = std::numeric_limits<double>::infinity();
        int bestN = m + 1;
        for (int n = m + 1; n <= hi; ++n) {
            if (n > m + 1) {
                if (const auto* t = series.find(n - 1))
                    table->accumulate(*t, 1.0, partial);
                for (std::size_t i = 0; i < Ns; ++i)
                    weighted[i] += partial[i];
            }
            const double inv = 1.0 / static_cast<double>(n - m);
            double err = 0.0;
            for (std::size_t i = 0; i < Ns; ++i)
                err = std::max(err, std::abs(R[i] - inv * weighted[i]));
            if (err < best) {
                best = err;
                bestN = n;
            }
        }
        out.N.push_back(bestN);
        out.vpErrors.push_back(best);
        subtract_terms(*table, series, m + 1, bestN, R);
    }
    return out;
}

BlockRounding vp_round_block(const TrigPolynomial& series, int m, int n, const DiscrepancyConfig& config)
{
    if (m < 0 || m >= n)
        throw DomainError("vp_round_block: requires 0 <= m < n");
    const TrigPolynomial local = series.truncated(n).densified(n).without_constant();
    std::vector<int> tail;
    std::vector<double> alphas;
    for (int k = m + 1; k <= n; ++k) {
        tail.push_back(k);
        alphas.push_back(vallee_poussin_weight(k, m, n));
    }
    const IndexSet K(n, tail);
    const auto rc = round_coefficients(local, K, alphas, config);

    BlockRounding out;
    out.L = IndexSet(n);
    std::vector<int> members;
    for (int k = 1; k <= m; ++k)
        members.push_back(k);
    for (std::size_t j = 0; j < tail.size(); ++j)
        if (rc.betas[j] == 1)
            members.push_back(tail[j]);
    out.L = IndexSet(n, std::move(members));
    out.betas = rc.betas;
    out.roundError = rc.error;
    return out;
}

Permutation order_block(const TrigPolynomial& series, const IndexSet& block, int n, const DiscrepancyConfig& config)
{
    if (block.empty())
        throw DomainError("order_block: empty block");
    const TrigPolynomial local = series.truncated(n).densified(n).without_constant();
    if (block.size() == 1)
        return Permutation(block.begin(), block.end());
    return balanced_ordering(local, IndexSet(n, std::vector<int>(block.begin(), block.end())), config).sigma;
}

RearrangePlan build_plan(const Target& f, const PlanConfig& config)
{
    const auto choice = choose_blocks(f, config.levels, config.slack, config.maxDegree);
    const auto& series = f.series;
    const std::size_t Ns = f.samples.size();
    const auto table = shared_grid_table(Ns);

    RearrangePlan plan;
    auto& sched = plan.schedule;
    sched.N = choice.N;
    sched.vpErrors = choice.vpErrors;
    sched.truncated = choice.truncated;

    std::vector<double> R(f.samples.values);
    for (double& v : R)
        v -= series.d0();

    IndexSet previous(0);
    for (std::size_t level = 1; level < choice.N.size(); ++level) {
        const int m = choice.N[level - 1];
        const int n = choice.N[level];
        DiscrepancyConfig dc = config.discrepancy;
        dc.seed = mix_seed(config.discrepancy.seed, level);

        const auto rounded = vp_round_block(series, m, n, dc);
        const IndexSet block = rounded.L.minus(previous);
        Permutation order = block.empty() ? Permutation{} : order_block(series, block, n, dc);

        const std::size_t stride = std::max<std::size_t>(1, (block.size() + 7) / 8);
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (const auto* t = series.find(order[i]))
                table->accumulate(*t, -1.0, R);
            plan.permutationPrefix.push_back(order[i]);
            if ((i + 1) % stride == 0 && i + 1 < order.size())
                plan.prefixErrors.push_back({plan.permutationPrefix.size(), sup_abs(R), false});
        }
        plan.prefixErrors.push_back({plan.permutationPrefix.size(), sup_abs(R), true});

        sched.L.push_back(rounded.L);
        sched.orderings.push_back(std::move(order));
        sched.roundErrors.push_back(rounded.roundError);
        sched.roundScaled.push_back(rounded.roundError / round_scaling(m, n));
        previous = rounded.L;
    }

    for (const auto& t : series.terms())
        if (t.k <= f.max_degree())
            plan.hypothesisConstant = std::max(plan.hypothesisConstant, std::sqrt(static_cast<double>(t.k)) * t.d);
    return plan;
}

} // namespace trigrearr
