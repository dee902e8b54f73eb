#include "trigrearr/serialize.hpp"

#include <sstream>

namespace trigrearr {

nlohmann::json to_json(const NormEstimate& e)
{
    return {{"lower", e.lower}, {"upper", e.upper}, {"gridSize", e.gridSize}};
}

nlohmann::json to_json(const IndexSet& K) { return std::vector<int>(K.begin(), K.end()); }

nlohmann::json to_json(const PrimeReport& p)
{
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& [prime, weight] : p.candidates)
        cands.push_back({{"p", prime}, {"weight", weight}});
    return {{"p", p.p},
            {"collisionWeight", p.collisionWeight},
            {"scaledWeight", p.scaledWeight},
            {"searchBound", p.searchBound},
            {"candidates", std::move(cands)}};
}

nlohmann::json to_json(const SelectionResult& r)
{
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : r.classesUsed)
        classes.push_back({{"kind", c.kind},
                           {"modulus", c.modulus.str()},
                           {"residue", c.residue},
                           {"members", to_json(c.members)}});
    nlohmann::json denominators = nlohmann::json::array();
    for (const auto& l : r.denominators)
        denominators.push_back(l.str());
    nlohmann::json j = {{"n", r.n},
                        {"m", r.m},
                        {"K", to_json(r.K)},
                        {"l0", r.l0},
                        {"g", r.g},
                        {"s", r.s},
                        {"gamma", r.gamma},
                        {"alpha", r.alpha},
                        {"denominators", std::move(denominators)},
                        {"classesUsed", std::move(classes)},
                        {"coreSize", r.coreSize},
                        {"padded", r.padded},
                        {"complemented", r.complemented},
                        {"fallback", r.fallback},
                        {"fallbackReason", r.fallbackReason},
                        {"orderingConstant", r.orderingConstant},
                        {"subsumNorm", r.subsumNorm},
                        {"polynomialNorm", r.polynomialNorm},
                        {"normRatio", r.normRatio}};
    j["prime"] = r.prime ? to_json(*r.prime) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const Split& s)
{
    return {{"Kplus", to_json(s.Kplus)},
            {"Kminus", to_json(s.Kminus)},
            {"deviation", s.deviation},
            {"signDiscrepancy", s.signDiscrepancy},
            {"repaired", s.repaired},
            {"bound", s.bound}};
}

nlohmann::json to_json(const RoundingResult& r)
{
    return {{"K", to_json(r.K)}, {"betas", r.betas}, {"error", r.error}, {"bound", r.bound}};
}

nlohmann::json to_json(const OrderingResult& o)
{
    return {{"sigma", o.sigma},
            {"prefixDeviations", o.prefixDeviations},
            {"maxDeviation", o.maxDeviation},
            {"bound", o.bound},
            {"guaranteed", o.guaranteed}};
}

nlohmann::json to_json(const RearrangePlan& p)
{
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : p.schedule.orderings)
        blocks.push_back(b);
    nlohmann::json errors = nlohmann::json::array();
    for (const auto& e : p.prefixErrors)
        errors.push_back({{"length", e.length}, {"error", e.error}, {"boundary", e.boundary}});
    nlohmann::json L = nlohmann::json::array();
    for (const auto& l : p.schedule.L)
        L.push_back(to_json(l));
    return {{"N", p.schedule.N},
            {"blocks", std::move(blocks)},
            {"prefixErrors", std::move(errors)},
            {"hypothesisConstant", p.hypothesisConstant},
            {"L", std::move(L)},
            {"vpErrors", p.schedule.vpErrors},
            {"roundErrors", p.schedule.roundErrors},
            {"roundScaled", p.schedule.roundScaled},
            {"truncated", p.schedule.truncated}};
}

std::string permutation_csv(const Permutation& sigma)
{
    std::ostringstream os;
    os << "k\n";
    for (int k : sigma)
        os << k << '\n';
    return os.str();
}

} // namespace trigrearr
