#include "cli.hpp"

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "densityseek/bench.hpp"
#include "densityseek/io.hpp"
#include "densityseek/random.hpp"
#include "densityseek/solve.hpp"

namespace densityseek::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

Problem parse_problem(const std::string& text)
{
    if (text == "fixed")
        return Problem::fixed;
    if (text == "bounded")
        return Problem::bounded;
    throw std::invalid_argument("unknown problem: " + text + " (expected fixed or bounded)");
}

Algorithm parse_algorithm_or_throw(const std::string& text)
{
    if (const auto alg = parse_algorithm(text))
        return *alg;
    throw std::invalid_argument("unknown algorithm: " + text);
}

std::size_t parse_count(const std::string& text)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a non-negative integer: " + text);
    try {
        return static_cast<std::size_t>(std::stoull(text));
    } catch (const std::exception&) {
        throw std::invalid_argument("integer out of range: " + text);
    }
}

struct FindArgs {
    std::string problem;
    std::string theta;
    std::string input;
    std::string format;
    std::string algorithm = "auto";
    std::string ambiguous = "zero";
    bool json = false;
};

int do_find(const FindArgs& a, std::ostream& out, std::ostream& err)
{
    const Problem problem = parse_problem(a.problem);
    const Ratio theta = parse_ratio(a.theta);
    const Algorithm requested = parse_algorithm_or_throw(a.algorithm);
    if (!algorithm_supports(requested, problem))
        throw std::invalid_argument(std::string(algorithm_name(requested))
                                    + " does not answer the "
                                    + (problem == Problem::fixed ? "fixed" : "bounded")
                                    + " problem");
    const Algorithm alg = resolve_algorithm(requested, problem);

    IngestOptions opt;
    opt.format = parse_format(a.format);
    opt.policy = parse_policy(a.ambiguous);
    const Bitstream s = ingest_file(a.input, opt, &err);

    const SpanResult r = solve(s, theta, problem, alg);
    if (a.json) {
        nlohmann::ordered_json j;
        if (r) {
            j["start"] = r->a;
            j["end"] = r->b;
            j["length"] = r->length();
        } else {
            j["start"] = nullptr;
            j["end"] = nullptr;
            j["length"] = 0;
        }
        j["theta"] = theta.text();
        j["algorithm"] = algorithm_name(alg);
        j["n"] = s.size();
        out << j.dump() << '\n';
    } else if (r) {
        out << r->a << ' ' << r->b << ' ' << r->length() << ' ' << theta.text() << '\n';
    } else {
        out << "none\n";
    }
    return exit_ok;
}

struct GenArgs {
    std::uint64_t seed = 1;
    std::uint64_t length = 0;
    std::string density;
    std::string out_path;
    std::string format;
};

int do_gen(const GenArgs& a, std::ostream&, std::ostream&)
{
    const Ratio rho = parse_ratio(a.density);
    const StreamFormat format = parse_format(a.format);
    const Bitstream s = random_bitstream(a.seed, a.length, rho);
    write_stream_file(a.out_path, s, format);
    return exit_ok;
}

struct BenchArgs {
    std::vector<std::string> lengths;
    std::vector<std::string> thetas;
    std::vector<std::string> algorithms;
    std::size_t repeats = 3;
    std::uint64_t seed = 1;
    std::string csv_path;
    std::string rho = "1/2";
    std::string problem = "fixed";
};

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err)
{
    BenchConfig cfg;
    for (const std::string& text : a.lengths)
        cfg.lengths.push_back(parse_count(text));
    for (const std::string& text : a.thetas)
        cfg.thetas.push_back(parse_ratio(text));
    for (const std::string& text : a.algorithms)
        cfg.algorithms.push_back(parse_algorithm_or_throw(text));
    cfg.repeats = a.repeats;
    cfg.seed = a.seed;
    cfg.rho = parse_ratio(a.rho);
    cfg.problem = parse_problem(a.problem);

    if (a.csv_path == "-") {
        run_bench(cfg, out, &err);
        return exit_ok;
    }
    std::ofstream csv(a.csv_path, std::ios::binary);
    if (!csv)
        throw IoError("cannot open " + a.csv_path + " for writing");
    run_bench(cfg, csv, &err);
    csv.flush();
    if (!csv)
        throw IoError("write failure on " + a.csv_path);
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app { "longest substring at a target ones density", "densityseek" };
    app.require_subcommand(1);

    FindArgs find_args;
    CLI::App* find_cmd = app.add_subcommand("find", "locate the longest qualifying substring");
    find_cmd->add_option("--problem", find_args.problem, "fixed|bounded")->required();
    find_cmd->add_option("--theta", find_args.theta, "target density A/B")->required();
    find_cmd->add_option("--input", find_args.input, "stream file")->required();
    find_cmd->add_option("--format", find_args.format, "ascii|packed|fasta")->required();
    find_cmd->add_option("--algorithm", find_args.algorithm,
                         "brute|skip-mismatch|dist-map|dist-sort|dist-matrix|position-sweep|auto");
    find_cmd->add_flag("--json", find_args.json, "emit a JSON object instead of the text line");
    find_cmd->add_option("--ambiguous", find_args.ambiguous,
                         "fasta policy for non-ACGT letters: zero|one|error");

    GenArgs gen_args;
    CLI::App* gen_cmd = app.add_subcommand("gen", "write a deterministic random stream");
    gen_cmd->add_option("--seed", gen_args.seed, "generator seed")->required();
    gen_cmd->add_option("--length", gen_args.length, "number of bits")->required();
    gen_cmd->add_option("--density", gen_args.density, "ones probability A/B")->required();
    gen_cmd->add_option("--out", gen_args.out_path, "output file")->required();
    gen_cmd->add_option("--format", gen_args.format, "ascii|packed|fasta")->required();

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "comparative timing runs with CSV output");
    bench_cmd->add_option("--lengths", bench_args.lengths, "stream lengths, comma separated")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--thetas", bench_args.thetas, "densities A/B, comma separated")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--algorithms", bench_args.algorithms, "solvers, comma separated")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--repeats", bench_args.repeats, "runs per case (default 3)");
    bench_cmd->add_option("--seed", bench_args.seed, "base seed (default 1)");
    bench_cmd->add_option("--csv", bench_args.csv_path, "CSV output path, or - for stdout")
        ->required();
    bench_cmd->add_option("--rho", bench_args.rho, "stream ones density (default 1/2)");
    bench_cmd->add_option("--problem", bench_args.problem, "fixed|bounded (default fixed)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("densityseek");
    for (const std::string& arg : args)
        argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (find_cmd->parsed())
            return do_find(find_args, out, err);
        if (gen_cmd->parsed())
            return do_gen(gen_args, out, err);
        if (bench_cmd->parsed())
            return do_bench(bench_args, out, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    err << "error: no command given\n";
    return exit_usage;
}

int run(int argc, const char* const* argv)
{
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

} // namespace densityseek::cli
