#include "trigrearr/corpus.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "trigrearr/errors.hpp"
#include "trigrearr/random.hpp"

namespace trigrearr {

namespace {

double parse_number(std::string_view s)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("corpus: bad number '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

} // namespace

TrigPolynomial generate(const CorpusSpec& spec)
{
    if (spec.degree < 1)
        throw DomainError("corpus: degree must be >= 1");
    const int n = spec.degree;
    Rng rng(spec.seed, 0x636f72707573ULL);
    std::vector<TrigTerm> terms;
    terms.reserve(static_cast<std::size_t>(n));
    double d0 = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        double d = 0.0;
        double phi = 0.0;
        switch (spec.kind) {
        case CorpusKind::RandomPhase:
            switch (spec.law) {
            case AmplitudeLaw::Power:
                d = std::pow(kk, -spec.exponent);
                break;
            case AmplitudeLaw::Constant:
                d = 1.0;
                break;
            case AmplitudeLaw::Custom:
                if (spec.custom.empty())
                    throw DomainError("corpus: custom amplitude list is empty");
                d = spec.custom[static_cast<std::size_t>(k - 1) % spec.custom.size()];
                break;
            }
            phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
            break;
        case CorpusKind::Fejer:
            d0 = 1.0;
            d = 2.0 * (1.0 - kk / (n + 1.0));
            break;
        case CorpusKind::DirichletLike:
            d = 1.0;
            break;
        case CorpusKind::SalemStyle:
            d = 1.0 / (std::sqrt(kk) * std::log(kk + 2.0));
            phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
            break;
        }
        if (!std::isfinite(d))
            throw DomainError("corpus: amplitude law produced a non-finite value");
        terms.push_back({k, d, phi});
    }
    return {d0, std::move(terms)};
}

CorpusSpec parse_corpus(std::string_view text)
{
    const auto parts = split(text, ':');
    CorpusSpec spec;
    if (parts[0] == "fejer") {
        spec.kind = CorpusKind::Fejer;
    } else if (parts[0] == "dirichlet") {
        spec.kind = CorpusKind::DirichletLike;
    } else if (parts[0] == "salem") {
        spec.kind = CorpusKind::SalemStyle;
    } else if (parts[0] == "random") {
        spec.kind = CorpusKind::RandomPhase;
        if (parts.size() >= 2) {
            if (parts[1] == "power") {
                spec.law = AmplitudeLaw::Power;
                if (parts.size() >= 3)
                    spec.exponent = parse_number(parts[2]);
            } else if (parts[1] == "constant") {
                spec.law = AmplitudeLaw::Constant;
            } else if (parts[1] == "custom" && parts.size() >= 3) {
                spec.law = AmplitudeLaw::Custom;
                for (auto v : split(parts[2], ','))
                    spec.custom.push_back(parse_number(v));
            } else {
                throw ParseError("corpus: unknown amplitude law '" + std::string(parts[1]) + "'");
            }
        }
    } else {
        throw ParseError("corpus: unknown kind '" + std::string(parts[0]) + "'");
    }
    return spec;
}

std::string describe(const CorpusSpec& spec)
{
    std::ostringstream os;
    os.precision(17);
    switch (spec.kind) {
    case CorpusKind::Fejer:
        os << "fejer";
        break;
    case CorpusKind::DirichletLike:
        os << "dirichlet";
        break;
    case CorpusKind::SalemStyle:
        os << "salem";
        break;
    case CorpusKind::RandomPhase:
        os << "random:";
        if (spec.law == AmplitudeLaw::Power)
            os << "power:" << spec.exponent;
        else if (spec.law == AmplitudeLaw::Constant)
            os << "constant";
        else {
            os << "custom:";
            for (std::size_t i = 0; i < spec.custom.size(); ++i)
                os << (i ? "," : "") << spec.custom[i];
        }
        break;
    }
    return os.str();
}

} // namespace trigrearr
