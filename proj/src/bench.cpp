#include "trigrearr/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>
#include <tuple>

#include "trigrearr/errors.hpp"
#include "trigrearr/io.hpp"
#include "trigrearr/selection.hpp"

namespace trigrearr {

unsigned worker_threads(unsigned requested)
{
    unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    if (const char* env = std::getenv("TRIGREARR_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1)
            n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

BenchRow run_bench_cell(const BenchSweep& sweep, int n, int m, const std::string& method, std::uint64_t seed)
{
    BenchRow row;
    row.n = n;
    row.m = m;
    row.method = method;
    row.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    try {
        CorpusSpec spec = sweep.corpus;
        spec.degree = n;
        spec.seed = seed;
        const TrigPolynomial T = generate(spec);
        DiscrepancyConfig dc = sweep.discrepancy;
        dc.seed = seed;
        const double lll = log3(n + 20.0);
        if (method == "select") {
            SelectionConfig sc;
            sc.discrepancy = dc;
            const auto res = select_terms(T, m, sc);
            if (static_cast<int>(res.K.size()) != m)
                throw std::logic_error("select: returned " + std::to_string(res.K.size()) + " terms");
            row.normRatio = res.normRatio;
            row.bound = dc.constantC * lll;
        } else if (method == "order") {
            if (m < 1)
                throw DomainError("order: needs m >= 1");
            const auto ord = balanced_ordering(T, IndexSet::full(m), dc);
            const double scale = discrepancy_scale(static_cast<std::size_t>(m), n) * T.max_amplitude(IndexSet::full(m));
            row.normRatio = scale > 0.0 ? ord.maxDeviation / scale : 0.0;
            row.bound = 4.0 * dc.constantC + 4.0;
        } else {
            throw DomainError("bench: unknown method '" + method + "'");
        }
        row.impliedConstant = row.normRatio / lll;
    } catch (const std::exception& e) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.normRatio = row.bound = row.impliedConstant = nan;
        row.error = e.what();
    }
    if (sweep.recordTime)
        row.wallTimeMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::vector<BenchRow> run_bench(const BenchSweep& sweep)
{
    struct Cell {
        int n;
        int m;
        std::string method;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (int n : sweep.degrees)
        for (double frac : sweep.fractions)
            for (const auto& method : sweep.methods)
                for (int s = 0; s < sweep.seeds; ++s)
                    cells.push_back({n, static_cast<int>(std::floor(frac * n)), method,
                                     sweep.firstSeed + static_cast<std::uint64_t>(s)});

    std::vector<BenchRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++)
            rows[i] = run_bench_cell(sweep, cells[i].n, cells[i].m, cells[i].method, cells[i].seed);
    };
    const unsigned threads = std::min<std::size_t>(worker_threads(sweep.threads), std::max<std::size_t>(1, cells.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.n, a.m, a.method, a.seed) < std::tie(b.n, b.m, b.method, b.seed);
    });
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows)
{
    std::ostringstream os;
    os << kBenchHeader << '\n';
    for (const auto& r : rows)
        os << r.n << ',' << r.m << ',' << r.method << ',' << io::format_double(r.normRatio) << ','
           << io::format_double(r.bound) << ',' << io::format_double(r.impliedConstant) << ',' << r.seed << ','
           << io::format_double(r.wallTimeMs) << '\n';
    return os.str();
}

} // namespace trigrearr
