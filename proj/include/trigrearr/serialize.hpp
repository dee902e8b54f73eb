#pragma once

#include <json.hpp>

#include "trigrearr/discrepancy.hpp"
#include "trigrearr/rearrange.hpp"
#include "trigrearr/selection.hpp"
#include "trigrearr/trigpoly.hpp"

namespace trigrearr {

nlohmann::json to_json(const NormEstimate& e);
nlohmann::json to_json(const IndexSet& K);
nlohmann::json to_json(const PrimeReport& p);
nlohmann::json to_json(const SelectionResult& r);
nlohmann::json to_json(const Split& s);
nlohmann::json to_json(const RoundingResult& r);
nlohmann::json to_json(const OrderingResult& o);
/// {"N", "blocks", "prefixErrors", "hypothesisConstant", ...}.
nlohmann::json to_json(const RearrangePlan& p);

/// One frequency per row under the header `k`.
std::string permutation_csv(const Permutation& sigma);

} // namespace trigrearr
