#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trigrearr/trigpoly.hpp"

namespace trigrearr {

enum class CorpusKind { RandomPhase, Fejer, DirichletLike, SalemStyle };

enum class AmplitudeLaw { Power, Constant, Custom };

/// Recipe for a seeded test polynomial.
struct CorpusSpec {
    CorpusKind kind = CorpusKind::RandomPhase;
    AmplitudeLaw law = AmplitudeLaw::Power;
    /// d_k = k^{-exponent} for the power law.
    double exponent = 0.5;
    /// d_k = custom[k-1] for the custom law (cycled when shorter than degree).
    std::vector<double> custom;
    int degree = 1;
    std::uint64_t seed = 0;
};

/// randomPhase: d0 = 0, d_k from the law, phi_k uniform in [0, 2pi).
/// fejer: 1 + 2 sum (1 - k/(n+1)) cos kx (non-negative, peak at 0).
/// dirichletLike: sum cos kx.
/// salemStyle: non-increasing d_k = 1 / (sqrt(k) log(k + 2)) with seeded phases.
TrigPolynomial generate(const CorpusSpec& spec);

/// "random[:power:<a> | :constant | :custom:<d1>,<d2>,...]", "fejer",
/// "dirichlet", "salem". Degree and seed are filled in separately.
CorpusSpec parse_corpus(std::string_view text);

std::string describe(const CorpusSpec& spec);

} // namespace trigrearr
