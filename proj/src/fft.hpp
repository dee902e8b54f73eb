#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "trigrearr/trigpoly.hpp"

namespace trigrearr::detail {

/// Values of d0 + sum d_k cos(k x + phi_k) at x_l = 2 pi l / M.
/// Requires M > 2 * max k.
std::vector<double> synthesize(double d0, std::span<const TrigTerm> terms, std::size_t M);

/// Unnormalized forward DFT bins F_0 .. F_{N/2} of real samples.
std::vector<std::complex<double>> analyze(std::span<const double> samples);

} // namespace trigrearr::detail
