// Acceptance gates. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. `acceptance 3 7` runs a subset.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include "oracles.hpp"
#include "trigrearr/bench.hpp"
#include "trigrearr/corpus.hpp"
#include "trigrearr/discrepancy.hpp"
#include "trigrearr/egyptian.hpp"
#include "trigrearr/io.hpp"
#include "trigrearr/random.hpp"
#include "trigrearr/rearrange.hpp"
#include "trigrearr/selection.hpp"

using namespace trigrearr;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass)
            detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

IndexSet random_subset(int n, std::size_t r, Rng& rng)
{
    std::vector<int> ks;
    while (ks.size() < r) {
        const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (std::find(ks.begin(), ks.end(), k) == ks.end())
            ks.push_back(k);
    }
    return IndexSet(n, ks);
}

TrigPolynomial corpus_poly(int n, std::uint64_t seed, double exponent)
{
    CorpusSpec s;
    s.degree = n;
    s.seed = seed;
    s.exponent = exponent;
    return generate(s);
}

// 1. Egyptian remainders in exact arithmetic.
void egyptian(Outcome& o)
{
    const auto one = egyptian_greedy(Rational(1), 3);
    o.require(one.denominators == std::vector<BigInt>{2, 3, 7} && one.remainders.back() == Rational(BigInt(1), BigInt(42)),
              "alpha = 1 must give 2, 3, 7 with remainder 1/42");
    Rng rng(2024);
    int prefixes = 0;
    for (int i = 0; i < 1000; ++i) {
        const long long q = 1 + static_cast<long long>(rng.below(1'000'000));
        const long long p = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(q)));
        const Rational alpha{BigInt(p), BigInt(q)};
        const int s = 1 + i % 5;
        const auto e = egyptian_greedy(alpha, s);
        const auto ref = oracle::egyptian_scan(alpha, s);
        o.require(!e.truncated && e.denominators.size() == static_cast<std::size_t>(s), "full decomposition");
        Rational rem = alpha;
        for (int j = 0; j < s && j < static_cast<int>(e.denominators.size()); ++j) {
            rem -= Rational(BigInt(1), e.denominators[j]);
            o.require(e.denominators[j] == ref.l[j], "greedy denominator matches the scan oracle");
            o.require(rem > 0 && rem <= egyptian_remainder_bound(j + 1),
                      "0 < remainder <= 2^-2^(s-1) for alpha = " + std::to_string(p) + "/" + std::to_string(q));
            ++prefixes;
        }
    }
    o.detail << prefixes << " prefixes checked";
}

// 2. Residue-class subsums stay within twice the norm.
void residue_classes(Outcome& o)
{
    double worst = 0.0;
    int classes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed, 2);
        const int n = 2 + static_cast<int>(rng.below(511));
        const auto T = corpus_poly(n, seed, 0.25 * static_cast<double>(seed % 4));
        const double normT = norm_estimate(T);
        for (int l = 1; l <= 8; ++l)
            for (int j = 0; j < l; ++j) {
                const double ratio = class_subsum_norm(T, l, j) / normT;
                worst = std::max(worst, ratio);
                ++classes;
            }
    }
    o.require(worst <= 2.05, "class subsum norm <= 2.05 ||T||");
    o.detail << classes << " classes, worst ratio " << worst;
}

// 3. Local search against exhaustive signings.
void sign_search(Outcome& o)
{
    DiscrepancyConfig cfg;
    cfg.restarts = 50;
    int exact = 0;
    double worst = 1.0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        Rng rng(static_cast<std::uint64_t>(t), 3);
        const std::size_t r = 4 + rng.below(13);
        std::vector<std::vector<double>> u;
        if (t % 2 == 0) {
            const std::size_t D = 10 + rng.below(31);
            u.assign(r, std::vector<double>(D));
            for (auto& v : u)
                for (double& x : v)
                    x = std::clamp(rng.gaussian(), -1.0, 1.0);
        } else {
            const int n = 32 + static_cast<int>(rng.below(33));
            u = embed_terms(corpus_poly(n, static_cast<std::uint64_t>(t), 0.5), random_subset(n, r, rng));
        }
        cfg.seed = static_cast<std::uint64_t>(t);
        const double got = balance_signs(u, cfg).discrepancy;
        const double best = oracle::exhaustive_signs(u);
        if (got <= best + 1e-12 * std::max(1.0, best))
            ++exact;
        worst = std::max(worst, best > 0 ? got / best : (got > 1e-12 ? 1e300 : 1.0));
    }
    const double rate = static_cast<double>(exact) / trials;
    o.require(rate >= 0.95, "exact optimum in >= 95% of trials");
    o.require(worst <= 1.5, "never worse than 1.5x the optimum");
    o.detail << exact << "/" << trials << " exact, worst ratio " << worst;
}

// 4. Split and ordering deviations on the standard corpus.
void split_and_ordering_bounds(Outcome& o)
{
    const int degrees[] = {64, 128, 256, 512};
    const std::size_t sizes[] = {8, 16, 32, 64};
    DiscrepancyConfig cfg;
    double splitC = 0.0, orderC = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        for (int n : degrees)
            for (std::size_t r : sizes) {
                Rng rng(seed, static_cast<std::uint64_t>(n) * 100 + r);
                const auto T = corpus_poly(n, seed, 0.5);
                const auto K = random_subset(n, r, rng);
                cfg.seed = seed;
                const double scale = discrepancy_scale(r, n) * T.max_amplitude(K);

                const auto s = split_terms(T, K, cfg);
                std::vector<int> ks(K.begin(), K.end());
                std::vector<double> w(ks.size());
                for (std::size_t j = 0; j < ks.size(); ++j)
                    w[j] = s.Kplus.contains(ks[j]) ? 1.0 : -1.0;
                splitC = std::max(splitC, oracle::dense_norm(oracle::weighted(T, ks, w), 16) / scale);

                const auto ord = balanced_ordering(T, K, cfg);
                orderC = std::max(orderC, ord.maxDeviation / scale);
            }
    }
    o.require(splitC <= 6.0, "split deviation <= 6 (r log(2n/r))^(1/2) max|d|");
    o.require(orderC <= 6.0, "ordering maxDeviation <= 6 (r log(2n/r))^(1/2) max|d|");
    o.detail << "smallest working constant: split " << splitC << ", ordering " << orderC;
}

// 5. Base case of the ordering recursion, r <= 8.
void base_case(Outcome& o)
{
    int checks = 0;
    double worst = 0.0;
    for (std::size_t r = 1; r <= 8; ++r)
        for (int n : {static_cast<int>(5 * r), static_cast<int>(5 * r) + 7, 64, 512})
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                Rng rng(seed, 500 + r);
                const auto T = corpus_poly(n, seed, 0.3);
                const auto K = random_subset(n, r, rng);
                const double d = T.max_amplitude(K);
                const double chainTop = 4.0 * discrepancy_scale(r, n) * d;
                o.require(2.0 * static_cast<double>(r) * d <= chainTop, "2rd <= 4 (r log(2n/r))^(1/2) d");

                std::vector<Permutation> orders{balanced_ordering(T, K, DiscrepancyConfig{}).sigma};
                for (int extra = 0; extra < 5; ++extra) {
                    Permutation p(K.begin(), K.end());
                    for (std::size_t i = p.size(); i > 1; --i)
                        std::swap(p[i - 1], p[rng.below(i)]);
                    orders.push_back(p);
                }
                const std::vector<int> ks(K.begin(), K.end());
                for (const auto& sigma : orders) {
                    for (std::size_t m = 1; m <= r; ++m) {
                        std::vector<double> w(r, -static_cast<double>(m) / static_cast<double>(r));
                        for (std::size_t i = 0; i < m; ++i)
                            w[static_cast<std::size_t>(std::find(ks.begin(), ks.end(), sigma[i]) - ks.begin())] += 1.0;
                        const double dev = oracle::dense_norm(oracle::weighted(T, ks, w));
                        o.require(dev <= 2.0 * static_cast<double>(m) * d * (1 + 1e-12), "prefix deviation <= 2md");
                        worst = std::max(worst, dev / chainTop);
                        ++checks;
                    }
                }
            }
    o.detail << checks << " prefixes, worst deviation / (4 (r log(2n/r))^(1/2) d) = " << worst;
}

// 6. Selection sweep and the n = 16 exhaustive comparison.
void selection_sweep(Outcome& o)
{
    constexpr double kPinned = 10.0;
    BenchSweep sweep;
    sweep.methods = {"select"};
    sweep.recordTime = false;
    const auto rows = run_bench(sweep);
    double worst = 0.0;
    for (const auto& r : rows) {
        o.require(r.error.empty(), "cell n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) + ": " + r.error);
        worst = std::max(worst, r.impliedConstant);
    }
    o.require(worst <= kPinned, "normRatio / log log log(n+20) below the pinned constant");

    double worstOpt = 0.0;
    std::vector<int> all(16);
    std::iota(all.begin(), all.end(), 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto T = corpus_poly(16, seed, 0.5);
        double best = 1e300;
        oracle::for_each_subset(all, 8, [&](const std::vector<int>& K) {
            best = std::min(best, oracle::dense_norm(subsum(T, IndexSet(16, K)), 16, 4));
        });
        SelectionConfig sc;
        sc.discrepancy.seed = seed;
        const auto res = select_terms(T, 8, sc);
        o.require(res.K.size() == 8, "|K| = m at n = 16");
        worstOpt = std::max(worstOpt, oracle::dense_norm(subsum(T, res.K)) / best);
    }
    o.require(worstOpt <= 3.0, "n = 16 selection within 3x the optimal subset");
    o.detail << rows.size() << " cells, |K| = m everywhere, max implied constant " << worst << " (pinned "
             << kPinned << "); n = 16 worst ratio to optimum " << worstOpt;
}

// 7. Vallee Poussin identity and the scaled rounding error.
void vallee_poussin_rounding(Outcome& o)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int m = 1 + static_cast<int>(seed) * 3;
        const auto S = corpus_poly(m, seed, 0.6);
        for (int n : {m + 1, m + 2, 2 * m + 5}) {
            const auto V = vallee_poussin(S, m, n);
            bool same = V.terms().size() == S.terms().size() && V.d0() == S.d0();
            for (std::size_t i = 0; same && i < S.terms().size(); ++i)
                same = std::abs(V.terms()[i].d - S.terms()[i].d) <= 1e-12 &&
                       std::abs(V.terms()[i].phi - S.terms()[i].phi) <= 1e-12 && V.terms()[i].k == S.terms()[i].k;
            o.require(same, "V_{m,n} is the identity on degree <= m");
        }
    }
    const auto T = corpus_poly(1024, 7, 0.6);
    PlanConfig cfg;
    cfg.maxDegree = 1024;
    const auto plan = build_plan(Target::from_polynomial(T, 4096), cfg);
    const auto& scaled = plan.schedule.roundScaled;
    const double worst = scaled.empty() ? 0.0 : *std::max_element(scaled.begin(), scaled.end());
    o.require(worst <= 6.0, "scaled rounding error bounded by 6");
    o.detail << "identity exact on 150 cases; " << scaled.size() << " levels, max scaled rounding error " << worst;
}

// 8. Block-boundary error trend.
void rearrangement_trend(Outcome& o)
{
    const auto T = corpus_poly(2048, 1, 0.6);
    PlanConfig cfg;
    cfg.maxDegree = 2048;
    cfg.discrepancy.seed = 1;
    const auto plan = build_plan(Target::from_samples({sample(T, 8192)}), cfg);
    const auto e = plan.boundary_errors();
    o.require(e.size() >= 3, "at least three levels");
    double worstRatio = 0.0;
    for (std::size_t i = 2; i + 1 < e.size(); ++i)
        worstRatio = std::max(worstRatio, e[i + 1] / e[i]);
    o.require(worstRatio <= 1.1, "boundary errors non-increasing after level 2 within 10%");
    o.require(!e.empty() && e.back() < e.front() / 5.0, "final error < first error / 5");
    o.detail << e.size() << " levels to N = " << plan.schedule.N.back() << ", first " << e.front() << ", final "
             << e.back() << ", worst consecutive ratio " << worstRatio;
}

// 9. Byte-identical CLI output on re-runs.
void determinism(Outcome& o)
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("trigrearr-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string bin = TRIGREARR_BIN;
    const auto path = [&](const std::string& name) { return (dir / name).string(); };

    auto sh = [&](const std::string& args) {
        const std::string cmd = bin + " " + args + " 2>/dev/null";
        return std::system(cmd.c_str());
    };
    o.require(sh("gen --corpus random:power:0.5 --degree 96 --seed 3 --out " + path("p.json")) == 0, "gen polynomial");
    o.require(sh("gen --corpus random:power:0.6 --degree 300 --seed 3 --samples 1024 --out " + path("f.csv")) == 0,
              "gen samples");
    io::write_file(path("w.csv"), "k,alpha\n1,0.5\n2,1.25\n3,-0.75\n4,2.5\n");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"gen", "gen --corpus salem --degree 64"},
        {"norm", "norm " + path("p.json")},
        {"select", "select " + path("p.json") + " --m 30"},
        {"split", "split " + path("p.json")},
        {"round-weights", "round " + path("p.json") + " --weights " + path("w.csv")},
        {"round-vp", "round " + path("p.json") + " --vp 40,96"},
        {"order", "order " + path("p.json")},
        {"order-csv", "order " + path("p.json") + " --format csv"},
        {"rearrange", "rearrange " + path("f.csv") + " --levels 60 --max-degree 300"},
        {"bench", "bench --degrees 64,128 --fractions 0.25,0.5 --seeds 2 --no-timing"},
    };
    int compared = 0;
    for (const auto& [name, args] : commands) {
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            const auto out = path(name + std::to_string(run) + ".out");
            std::string extra = " --seed 5 --out " + out;
            if (name == "rearrange")
                extra += " --csv " + path(name + std::to_string(run) + ".perm.csv");
            o.require(sh(args + extra) == 0, name + " exits 0");
            outputs[run] = io::read_file(out);
            if (name == "rearrange")
                outputs[run] += io::read_file(path(name + std::to_string(run) + ".perm.csv"));
        }
        o.require(!outputs[0].empty() && outputs[0] == outputs[1], name + " output is byte-identical");
        ++compared;
    }
    fs::remove_all(dir);
    o.detail << compared << " command lines compared";
}

struct Criterion {
    int id;
    const char* name;
    double budgetSeconds;
    std::function<void(Outcome&)> run;
};

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria{
        {1, "Egyptian remainders exact", 10, egyptian},
        {2, "residue-class subsums <= 2.05 ||T||", 120, residue_classes},
        {3, "sign search vs exhaustive optimum", 120, sign_search},
        {4, "split/ordering within 6 (r log(2n/r))^(1/2) max|d|", 300, split_and_ordering_bounds},
        {5, "ordering base case r <= 8", 10, base_case},
        {6, "selection sweep and n = 16 optimum", 900, selection_sweep},
        {7, "Vallee Poussin identity and rounding scale", 120, vallee_poussin_rounding},
        {8, "rearrangement error trend", 600, rearrangement_trend},
        {9, "CLI determinism", 600, determinism},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));

    bool all = true;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id))
            continue;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(secs <= c.budgetSeconds, "runtime budget");
        all = all && o.pass;
        std::printf("criterion %d: %s  %s | %s (%.1fs of %.0fs)\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                    o.detail.str().c_str(), secs, c.budgetSeconds);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
