#include "trigrearr/cli.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "trigrearr/bench.hpp"
#include "trigrearr/corpus.hpp"
#include "trigrearr/errors.hpp"
#include "trigrearr/io.hpp"
#include "trigrearr/rearrange.hpp"
#include "trigrearr/selection.hpp"
#include "trigrearr/serialize.hpp"

namespace trigrearr {

namespace {

struct CommonOptions {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    int refine = kDefaultRefine;
    int restarts = 16;
    long long maxFlips = 1'000'000;

    DiscrepancyConfig discrepancy() const
    {
        DiscrepancyConfig c;
        c.seed = seed;
        c.restarts = restarts;
        c.maxFlips = maxFlips;
        c.refine = refine;
        c.strictBudget = true;
        return c;
    }
};

void add_common(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("--seed", o.seed, "Seed for all randomized searches");
    cmd->add_option("--out", o.out, "Write the result to this file instead of stdout");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--refine", o.refine, "Grid refinement factor for reported norms")->check(CLI::PositiveNumber);
    cmd->add_option("--restarts", o.restarts, "Restarts of the sign search")->check(CLI::PositiveNumber);
    cmd->add_option("--max-flips", o.maxFlips, "Flip budget per restart (exceeding it exits with 4)");
}

template <class T>
std::vector<T> parse_list(const std::string& text)
{
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        T v{};
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size())
            throw ParseError("bad list element '" + item + "'");
        out.push_back(v);
    }
    return out;
}

IndexSet resolve_set(const TrigPolynomial& T, const std::string& text)
{
    if (text.empty())
        return T.frequencies();
    try {
        return IndexSet(T.degree(), parse_list<int>(text));
    } catch (const DomainError& e) {
        throw DomainError(std::string("--set: ") + e.what());
    }
}

void emit(const CommonOptions& o, const std::string& text, std::ostream& out)
{
    if (o.out.empty())
        out << text;
    else
        io::write_file(o.out, text);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string csv_column(const char* header, std::span<const int> values)
{
    std::ostringstream os;
    os << header << '\n';
    for (int v : values)
        os << v << '\n';
    return os.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Trigonometric polynomial term selection, balancing and rearrangement"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string file;

    auto* norm = app.add_subcommand("norm", "Bracket the sup norm of a polynomial");
    norm->add_option("file", file, "Polynomial (JSON or CSV)")->required();
    add_common(norm, common);

    int m = 0;
    auto* select = app.add_subcommand("select", "Choose m terms with a small subsum norm");
    select->add_option("file", file)->required();
    select->add_option("--m", m, "Number of terms")->required();
    add_common(select, common);

    std::string set;
    auto* split = app.add_subcommand("split", "Split terms into two balanced halves");
    split->add_option("file", file)->required();
    split->add_option("--set", set, "Comma-separated frequencies (default: all)");
    add_common(split, common);

    std::string weights;
    std::string vp;
    auto* round = app.add_subcommand("round", "Round coefficient weights to neighbouring integers");
    round->add_option("file", file)->required();
    auto* wopt = round->add_option("--weights", weights, "CSV with header k,alpha");
    round->add_option("--vp", vp, "Vallee Poussin tail weights for 'm,n'")->excludes(wopt);
    add_common(round, common);

    auto* order = app.add_subcommand("order", "Balanced ordering of terms");
    order->add_option("file", file)->required();
    order->add_option("--set", set, "Comma-separated frequencies (default: all)");
    add_common(order, common);

    int levels = 1000;
    int maxDegree = -1;
    std::string csvOut;
    auto* rearrange = app.add_subcommand("rearrange", "Build a block rearrangement plan from samples");
    rearrange->add_option("file", file, "Samples CSV (column value)")->required();
    rearrange->add_option("--levels", levels, "Maximum number of levels")->check(CLI::NonNegativeNumber);
    rearrange->add_option("--max-degree", maxDegree, "Highest frequency used (default: all extracted)");
    rearrange->add_option("--csv", csvOut, "Also write the flattened permutation as CSV");
    add_common(rearrange, common);

    BenchSweep sweep;
    std::string degrees = "64,128,256,512,1024,2048,4096";
    std::string fractions = "0.125,0.25,0.5,0.75";
    std::string methods = "select,order";
    std::string corpus = "random:constant";
    bool noTiming = false;
    auto* bench = app.add_subcommand("bench", "Measure achieved constants over a sweep");
    bench->add_option("--degrees", degrees, "Comma-separated degrees n");
    bench->add_option("--fractions", fractions, "Comma-separated m/n fractions");
    bench->add_option("--methods", methods, "select,order");
    bench->add_option("--seeds", sweep.seeds, "Seeds per cell")->check(CLI::NonNegativeNumber);
    bench->add_option("--corpus", corpus, "Corpus recipe, e.g. random:power:0.5");
    bench->add_option("--threads", sweep.threads, "Worker threads (0: all cores)");
    bench->add_flag("--no-timing", noTiming, "Write 0 in the wallTimeMs column");
    add_common(bench, common);

    int degree = 1;
    std::size_t samples = 0;
    auto* gen = app.add_subcommand("gen", "Write a corpus polynomial or its samples");
    gen->add_option("--corpus", corpus, "Corpus recipe");
    gen->add_option("--degree", degree, "Degree n")->required();
    gen->add_option("--samples", samples, "Write N samples (CSV) instead of coefficients");
    add_common(gen, common);

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    try {
        const bool csv = common.format == "csv";
        if (norm->parsed()) {
            const auto T = io::parse_polynomial(io::read_file(file));
            const auto e = sup_norm(T, common.refine);
            if (csv)
                emit(common, "lower,upper,gridSize\n" + io::format_double(e.lower) + "," + io::format_double(e.upper) +
                                 "," + std::to_string(e.gridSize) + "\n", out);
            else
                emit(common, dump(to_json(e)), out);
        } else if (select->parsed()) {
            const auto T = io::parse_polynomial(io::read_file(file));
            SelectionConfig sc;
            sc.discrepancy = common.discrepancy();
            sc.discrepancy.refine = 2;
            sc.refine = common.refine;
            const auto res = select_terms(T, m, sc);
            emit(common, csv ? csv_column("k", res.K.elements()) : dump(to_json(res)), out);
        } else if (split->parsed()) {
            const auto T = io::parse_polynomial(io::read_file(file));
            const auto s = split_terms(T, resolve_set(T, set), common.discrepancy());
            if (csv) {
                std::ostringstream os;
                os << "k,side\n";
                for (int k : s.Kplus)
                    os << k << ",+\n";
                for (int k : s.Kminus)
                    os << k << ",-\n";
                emit(common, os.str(), out);
            } else {
                emit(common, dump(to_json(s)), out);
            }
        } else if (round->parsed()) {
            const auto T = io::parse_polynomial(io::read_file(file));
            std::vector<int> ks;
            std::vector<double> alphas;
            if (!vp.empty()) {
                const auto mn = parse_list<int>(vp);
                if (mn.size() != 2)
                    throw ParseError("--vp expects 'm,n'");
                if (mn[0] < 0 || mn[0] >= mn[1] || mn[1] > T.degree())
                    throw DomainError("--vp requires 0 <= m < n <= degree");
                for (int k = mn[0] + 1; k <= mn[1]; ++k) {
                    ks.push_back(k);
                    alphas.push_back(vallee_poussin_weight(k, mn[0], mn[1]));
                }
            } else if (!weights.empty()) {
                std::istringstream in(io::read_file(weights));
                std::string line;
                std::getline(in, line);
                if (line.rfind("k,alpha", 0) != 0)
                    throw ParseError("weights CSV: expected header k,alpha");
                std::vector<std::pair<int, double>> rows;
                while (std::getline(in, line)) {
                    if (line.empty() || line == "\r")
                        continue;
                    const auto comma = line.find(',');
                    if (comma == std::string::npos)
                        throw ParseError("weights CSV: expected two columns");
                    const auto k = parse_list<int>(line.substr(0, comma));
                    const auto a = parse_list<double>(line.substr(comma + 1));
                    if (k.size() != 1 || a.size() != 1)
                        throw ParseError("weights CSV: bad row '" + line + "'");
                    rows.emplace_back(k[0], a[0]);
                }
                std::sort(rows.begin(), rows.end());
                for (const auto& [k, a] : rows) {
                    ks.push_back(k);
                    alphas.push_back(a);
                }
            } else {
                throw ParseError("round: one of --weights or --vp is required");
            }
            const IndexSet K(T.degree(), ks);
            const auto T2 = T.densified(T.degree());
            const auto r = round_coefficients(T2, K, alphas, common.discrepancy());
            if (csv) {
                std::ostringstream os;
                os << "k,alpha,beta\n";
                for (std::size_t j = 0; j < ks.size(); ++j)
                    os << ks[j] << ',' << io::format_double(alphas[j]) << ',' << r.betas[j] << '\n';
                emit(common, os.str(), out);
            } else {
                emit(common, dump(to_json(r)), out);
            }
        } else if (order->parsed()) {
            const auto T = io::parse_polynomial(io::read_file(file));
            const auto o = balanced_ordering(T, resolve_set(T, set), common.discrepancy());
            emit(common, csv ? permutation_csv(o.sigma) : dump(to_json(o)), out);
        } else if (rearrange->parsed()) {
            const auto f = io::samples_from_csv(io::read_file(file));
            PlanConfig pc;
            pc.levels = levels;
            pc.maxDegree = maxDegree;
            pc.discrepancy = common.discrepancy();
            const auto plan = build_plan(Target::from_samples(f), pc);
            if (!csvOut.empty())
                io::write_file(csvOut, permutation_csv(plan.permutationPrefix));
            emit(common, csv ? permutation_csv(plan.permutationPrefix) : dump(to_json(plan)), out);
        } else if (bench->parsed()) {
            sweep.degrees = parse_list<int>(degrees);
            sweep.fractions = parse_list<double>(fractions);
            sweep.methods.clear();
            std::stringstream ss(methods);
            for (std::string item; std::getline(ss, item, ',');)
                if (!item.empty())
                    sweep.methods.push_back(item);
            sweep.corpus = parse_corpus(corpus);
            sweep.firstSeed = common.seed;
            sweep.discrepancy = common.discrepancy();
            sweep.discrepancy.strictBudget = false;
            if (bench->count("--restarts") == 0)
                sweep.discrepancy.restarts = 4;
            if (bench->count("--refine") == 0)
                sweep.discrepancy.refine = 2;
            sweep.recordTime = !noTiming;
            const auto rows = run_bench(sweep);
            for (const auto& r : rows)
                if (!r.error.empty())
                    err << "cell n=" << r.n << " m=" << r.m << " " << r.method << " seed=" << r.seed
                        << " failed: " << r.error << '\n';
            emit(common, bench_csv(rows), out);
        } else if (gen->parsed()) {
            auto spec = parse_corpus(corpus);
            spec.degree = degree;
            spec.seed = common.seed;
            const auto T = generate(spec);
            if (samples > 0)
                emit(common, io::samples_to_csv({sample(T, samples)}), out);
            else
                emit(common, csv ? io::polynomial_to_csv(T) : dump(io::polynomial_to_json(T)), out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

} // namespace trigrearr
