#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigrearr/corpus.hpp"
#include "trigrearr/discrepancy.hpp"

namespace trigrearr {

inline constexpr const char* kBenchHeader = "n,m,method,normRatio,bound,impliedConstant,seed,wallTimeMs";

inline CorpusSpec constant_corpus()
{
    CorpusSpec c;
    c.law = AmplitudeLaw::Constant;
    return c;
}

struct BenchSweep {
    std::vector<int> degrees{64, 128, 256, 512, 1024, 2048, 4096};
    std::vector<double> fractions{0.125, 0.25, 0.5, 0.75};
    std::vector<std::string> methods{"select", "order"};
    int seeds = 10;
    std::uint64_t firstSeed = 0;
    CorpusSpec corpus = constant_corpus();
    DiscrepancyConfig discrepancy{.restarts = 4, .refine = 2};
    /// Write 0 instead of measured wall time (for byte-stable files).
    bool recordTime = true;
    /// 0: hardware concurrency, further capped by TRIGREARR_THREADS.
    unsigned threads = 0;
};

/// One measurement. For "select", normRatio = ||sum_K A_k|| / ||T|| and
/// bound = C log log log(n+20). For "order" (K = {1..m}), normRatio is the
/// achieved constant maxDeviation / ((r log(2n/r))^{1/2} max|d|) and
/// bound = 4C + 4. impliedConstant = normRatio / log log log(n+20).
struct BenchRow {
    int n = 0;
    int m = 0;
    std::string method;
    double normRatio = 0.0;
    double bound = 0.0;
    double impliedConstant = 0.0;
    std::uint64_t seed = 0;
    double wallTimeMs = 0.0;
    /// Non-empty when the cell failed; numeric fields are then NaN.
    std::string error;
};

BenchRow run_bench_cell(const BenchSweep& sweep, int n, int m, const std::string& method, std::uint64_t seed);

/// All cells, sorted by (n, m, method, seed).
std::vector<BenchRow> run_bench(const BenchSweep& sweep);

std::string bench_csv(const std::vector<BenchRow>& rows);

/// Thread count after applying TRIGREARR_THREADS.
unsigned worker_threads(unsigned requested);

} // namespace trigrearr
