#include "fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <fftw3.h>

namespace trigrearr::detail {

namespace {

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuffer<T> allocate(std::size_t count)
{
    auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * (count == 0 ? 1 : count)));
    if (p == nullptr)
        throw std::bad_alloc();
    return FftwBuffer<T>(p);
}

enum class Kind { C2R, R2C };

// FFTW's planner is not thread-safe; plans are created once per size under
// a lock and then executed concurrently through the new-array interface.
class PlanCache {
public:
    static PlanCache& instance()
    {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(Kind kind, std::size_t n)
    {
        std::lock_guard lock(mu_);
        auto key = std::make_pair(kind, n);
        if (auto it = plans_.find(key); it != plans_.end())
            return it->second;
        auto real = allocate<double>(n);
        auto cplx = allocate<fftw_complex>(n / 2 + 1);
        fftw_plan plan = kind == Kind::C2R
            ? fftw_plan_dft_c2r_1d(static_cast<int>(n), cplx.get(), real.get(), FFTW_ESTIMATE)
            : fftw_plan_dft_r2c_1d(static_cast<int>(n), real.get(), cplx.get(), FFTW_ESTIMATE);
        if (plan == nullptr)
            throw std::runtime_error("fftw planning failed");
        plans_.emplace(key, plan);
        return plan;
    }

    ~PlanCache()
    {
        for (auto& [key, plan] : plans_)
            fftw_destroy_plan(plan);
    }

private:
    std::mutex mu_;
    std::map<std::pair<Kind, std::size_t>, fftw_plan> plans_;
};

} // namespace

std::vector<double> synthesize(double d0, std::span<const TrigTerm> terms, std::size_t M)
{
    if (M == 0)
        return {};
    const std::size_t half = M / 2 + 1;
    auto spec = allocate<fftw_complex>(half);
    for (std::size_t i = 0; i < half; ++i)
        spec[i][0] = spec[i][1] = 0.0;
    spec[0][0] = d0;
    for (const auto& t : terms) {
        const auto k = static_cast<std::size_t>(t.k);
        if (2 * k >= M)
            throw std::logic_error("synthesize: grid too coarse for degree");
        spec[k][0] += 0.5 * t.d * std::cos(t.phi);
        spec[k][1] += 0.5 * t.d * std::sin(t.phi);
    }
    auto out = allocate<double>(M);
    fftw_execute_dft_c2r(PlanCache::instance().get(Kind::C2R, M), spec.get(), out.get());
    return std::vector<double>(out.get(), out.get() + M);
}

std::vector<std::complex<double>> analyze(std::span<const double> samples)
{
    const std::size_t N = samples.size();
    if (N == 0)
        return {};
    auto in = allocate<double>(N);
    for (std::size_t i = 0; i < N; ++i)
        in[i] = samples[i];
    const std::size_t half = N / 2 + 1;
    auto spec = allocate<fftw_complex>(half);
    fftw_execute_dft_r2c(PlanCache::instance().get(Kind::R2C, N), in.get(), spec.get());
    std::vector<std::complex<double>> bins(half);
    for (std::size_t i = 0; i < half; ++i)
        bins[i] = {spec[i][0], spec[i][1]};
    return bins;
}

} // namespace trigrearr::detail
