#include "trigrearr/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "trigrearr/errors.hpp"

namespace trigrearr::io {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> lines(std::string_view text)
{
    std::vector<std::string_view> out;
    for (auto line : split(text, '\n'))
        if (!line.empty())
            out.push_back(line);
    return out;
}

double to_double(std::string_view s, std::size_t line)
{
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw ParseError("line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    return v;
}

int to_int(std::string_view s, std::size_t line)
{
    int v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw ParseError("line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
    return v;
}

} // namespace

std::string format_double(double x)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

nlohmann::json polynomial_to_json(const TrigPolynomial& T)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : T.terms())
        terms.push_back({{"k", t.k}, {"d", t.d}, {"phi", t.phi}});
    return {{"d0", T.d0()}, {"terms", std::move(terms)}};
}

TrigPolynomial polynomial_from_json(const nlohmann::json& j)
{
    try {
        std::vector<TrigTerm> terms;
        for (const auto& t : j.at("terms"))
            terms.push_back({t.at("k").get<int>(), t.at("d").get<double>(), t.value("phi", 0.0)});
        return {j.value("d0", 0.0), std::move(terms)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
}

std::string polynomial_to_csv(const TrigPolynomial& T)
{
    std::ostringstream os;
    os << "k,d,phi\n";
    os << "0," << format_double(T.d0()) << ",0\n";
    for (const auto& t : T.terms())
        os << t.k << ',' << format_double(t.d) << ',' << format_double(t.phi) << '\n';
    return os.str();
}

TrigPolynomial polynomial_from_csv(std::string_view text)
{
    const auto rows = lines(text);
    if (rows.empty() || split(rows[0], ',') != std::vector<std::string_view>{"k", "d", "phi"})
        throw ParseError("polynomial CSV: expected header k,d,phi");
    double d0 = 0.0;
    std::vector<TrigTerm> terms;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cols = split(rows[i], ',');
        if (cols.size() != 3)
            throw ParseError("line " + std::to_string(i + 1) + ": expected 3 columns");
        const int k = to_int(cols[0], i + 1);
        const double d = to_double(cols[1], i + 1);
        if (k == 0)
            d0 = d;
        else
            terms.push_back({k, d, to_double(cols[2], i + 1)});
    }
    try {
        return {d0, std::move(terms)};
    } catch (const DomainError& e) {
        throw ParseError(std::string("polynomial CSV: ") + e.what());
    }
}

TrigPolynomial parse_polynomial(std::string_view text)
{
    const auto body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("polynomial JSON: ") + e.what());
        }
        return polynomial_from_json(j);
    }
    return polynomial_from_csv(body);
}

std::string samples_to_csv(const SampledFunction& f)
{
    std::ostringstream os;
    os << "value\n";
    for (double v : f.values)
        os << format_double(v) << '\n';
    return os.str();
}

SampledFunction samples_from_csv(std::string_view text)
{
    const auto rows = lines(text);
    if (rows.empty() || rows[0] != "value")
        throw ParseError("samples CSV: expected header value");
    SampledFunction f;
    f.values.reserve(rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); ++i)
        f.values.push_back(to_double(rows[i], i + 1));
    if (f.values.empty())
        throw ParseError("samples CSV: no rows");
    return f;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path);
    out << contents;
}

} // namespace trigrearr::io
