// tourpaths command-line interface.
//
// Exit codes: 0 success, 1 failed assertion, 2 parse/validation error,
// 3 infeasible request. Nothing else is ever returned.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "run_report.hpp"
#include "tourpaths/census.hpp"
#include "tourpaths/kernel.hpp"
#include "tourpaths/optimize.hpp"
#include "tourpaths/paths.hpp"
#include "tourpaths/stability.hpp"
#include "tourpaths/tournament.hpp"

namespace fs = std::filesystem;
using namespace tourpaths;
using tourpaths::cli::RunReport;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;

// Raised for an assertion failure that must end the run with a diagnostic.
struct AssertionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string echo(int argc, char** argv) {
    std::string out = "tourpaths";
    for (int i = 1; i < argc; ++i) {
        out += ' ';
        out += argv[i];
    }
    return out;
}

int finish(const RunReport& report) {
    report.print(std::cout, std::cerr);
    return report.passed() ? kExitOk : kExitAssertion;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// count ----------------------------------------------------------------------

struct CountArgs {
    std::string file;
    std::size_t k = 0;
    std::string engine = "dfs";
    bool check = false;
};

int run_count(const CountArgs& args, const std::string& command) {
    const std::string text = read_file(args.file);
    const Tournament t = parse_trn(text);
    RunReport report(command);
    report.input(args.file, text);
    report.field("n", std::to_string(t.size()));
    report.field("k", std::to_string(args.k));
    report.field("engine", args.engine);

    BigInt count;
    if (args.engine == "walks") {
        count = count_walks(t, args.k);
    } else {
        count = count_paths(t, args.k, args.engine == "dfs" ? Engine::Dfs : Engine::SubsetDp);
    }
    report.field("count", to_string(count));

    if (args.check) {
        const BoundPair b = bounds(t.size(), args.k);
        report.field("lower", to_string(b.lower));
        report.field("upper", to_string(b.upper));
        report.check("lower<=count", b.lower <= count);
        report.check("count<=upper",
                     count * power(2, args.k) <= power(BigInt(static_cast<unsigned long>(t.size())), args.k + 1));
    }
    return finish(report);
}

// generate -------------------------------------------------------------------

struct GenerateArgs {
    std::string kind;
    std::size_t size = 0;
    std::optional<std::uint64_t> seed;
};

int run_generate(const GenerateArgs& args) {
    Tournament t = [&] {
        if (args.kind == "transitive") return transitive(args.size);
        if (args.kind == "rotational") return rotational(args.size);
        if (args.kind == "paley") return paley(args.size);
        if (!args.seed) throw ValidationError("random generation requires --seed");
        return random_tournament(args.size, *args.seed);
    }();
    std::cout << to_trn(t);
    return kExitOk;
}

// kernel ---------------------------------------------------------------------

struct KernelArgs {
    std::string file;
    std::size_t k = 1;
    bool density = false;
    bool trace = false;
    bool regularity = false;
};

std::string render(const Rational& x) { return to_string(x); }
std::string render(double x) { return format_double(x); }

template <class Scalar>
void report_kernel(const BasicKernel<Scalar>& kernel, const KernelArgs& args, RunReport& report) {
    const bool want_density = args.density || (!args.trace && !args.regularity);
    if (want_density) {
        const Scalar density = path_density(kernel, args.k);
        report.field("density", render(density));
        report.field("bound", render(detail::two_to_minus<Scalar>(args.k)));
        bool ok;
        if constexpr (std::is_floating_point_v<Scalar>) {
            ok = density <= detail::two_to_minus<Scalar>(args.k) + kFloatInequalitySlack;
        } else {
            ok = density <= detail::two_to_minus<Scalar>(args.k);
        }
        report.check("density<=2^-k", ok);
    }
    if (args.trace) {
        const auto trace = chain_trace(kernel, args.k);
        report.field("edge_density", render(trace.edge_density));
        report.line("trace: t A_t ratio");
        for (const auto& step : trace.steps) {
            report.line("trace: " + std::to_string(step.t) + " " + render(step.a) + " " +
                        (step.ratio ? render(*step.ratio) : std::string("undefined")));
        }
        report.field("trace_density", render(trace.density));
        report.field("cauchy_schwarz_squared", render(trace.cauchy_schwarz_squared));
        if constexpr (std::is_floating_point_v<Scalar>) {
            report.field("cauchy_schwarz", render(std::sqrt(trace.cauchy_schwarz_squared)));
        }
        const ChainVerdict verdict = judge(trace);
        report.check("edge_density<=1/2", verdict.edge_density_at_most_half);
        report.check("A_t<=A_{t-1}/4", verdict.contraction);
        report.check("density<=sqrt(A_{k-1}*e)", verdict.cauchy_schwarz);
        report.check("sqrt(A_{k-1}*e)<=2^-k", verdict.final_bound);
    }
    if (args.regularity) {
        report.field("regularity_gap", render(regularity_gap(kernel)));
        report.field("out_regularity_gap", render(out_regularity_gap(kernel)));
    }
}

int run_kernel(const KernelArgs& args, const std::string& command) {
    const std::string text = read_file(args.file);
    const StepKernel kernel = parse_knl(text);
    if (args.trace && args.k < 2) throw ValidationError("--trace needs k >= 2");
    RunReport report(command);
    report.input(args.file, text);
    std::visit(
        [&](const auto& kern) {
            using K = std::decay_t<decltype(kern)>;
            report.field("m", std::to_string(kern.blocks()));
            report.field("k", std::to_string(args.k));
            report.field("mode", std::is_same_v<K, ExactKernel> ? "exact" : "float");
            report_kernel(kern, args, report);
        },
        kernel);
    if (!report.passed()) {
        report.line("note: a violated inequality here is a tourpaths bug; please report it");
    }
    return finish(report);
}

// census ---------------------------------------------------------------------

struct CensusArgs {
    std::size_t n = 0;
    std::optional<std::size_t> k;
    bool k_all = false;
    std::size_t jobs = 1;
    std::string out_dir;
    bool force = false;
};

// Writes `contents` to `path`. An existing file is only replaced when it is
// byte-identical or `force` is set.
void persist(const fs::path& path, const std::string& contents, bool force) {
    if (fs::exists(path) && !force) {
        if (read_file(path.string()) != contents) {
            throw AssertionFailure("existing record " + path.string() +
                                   " differs from this run (use --force to overwrite)");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << contents;
}

int run_census(const CensusArgs& args, const std::string& command) {
    if (args.k_all == args.k.has_value()) throw ValidationError("census needs exactly one of --k or --k-all");
    if (args.jobs == 0) throw ValidationError("--jobs must be positive");
    CensusOptions options{args.jobs, args.force};

    std::vector<CensusRecord> records;
    if (args.k_all) {
        records = census_all(args.n, options);
    } else {
        records.push_back(census(args.n, *args.k, options));
    }

    RunReport report(command);
    report.field("n", std::to_string(args.n));
    report.field("tournaments_scanned", std::to_string(records.front().tournaments_scanned));
    for (const auto& r : records) {
        const std::string tag = "k=" + std::to_string(r.k);
        report.line(tag + " min=" + to_string(r.min_count) + " max=" + to_string(r.max_count) +
                    " lower=" + to_string(r.bounds.lower) + " upper=" + to_string(r.bounds.upper) +
                    " nontransitive_ties_min=" + yes_no(r.nontransitive_ties_min));
        report.check(tag + " census", r.passed());
        if (r.k + 1 == r.n) {
            const HamiltonCensus h = hamilton_summary(r);
            report.line("hamilton min=" + to_string(h.min_h) + " max=" + to_string(h.max_h) +
                        " szele_lower=" + to_string(h.szele_lower));
            report.check("hamilton min>=1", h.min_h >= 1);
            report.check("hamilton max>=szele_lower", h.max_h >= h.szele_lower);
        }
    }

    if (!args.out_dir.empty()) {
        const fs::path dir(args.out_dir);
        fs::create_directories(dir);
        for (const auto& r : records) {
            const fs::path path = dir / ("census_n" + std::to_string(r.n) + "_k" + std::to_string(r.k) + ".json");
            persist(path, census_json(r), args.force);
            report.field("wrote", path.filename().string());
        }
        const std::string csv_name = args.k_all
                                         ? "census_n" + std::to_string(args.n) + ".csv"
                                         : "census_n" + std::to_string(args.n) + "_k" + std::to_string(*args.k) + ".csv";
        persist(dir / csv_name, census_csv(records), args.force);
        report.field("wrote", csv_name);
    }
    return finish(report);
}

// stability ------------------------------------------------------------------

struct StabilityArgs {
    std::string file;
    std::size_t k = 0;
    std::string engine = "dfs";
};

int run_stability(const StabilityArgs& args, const std::string& command) {
    const std::string text = read_file(args.file);
    const Tournament t = parse_trn(text);
    const auto cert = stability_check(t, args.k, args.engine == "dfs" ? Engine::Dfs : Engine::SubsetDp);
    RunReport report(command);
    report.input(args.file, text);
    report.field("n", std::to_string(cert.n));
    report.field("k", std::to_string(cert.k));
    report.field("epsilon", to_string(cert.epsilon));
    report.field("bound", to_string(cert.bound));
    report.field("count", to_string(cert.count));
    report.check("count<=(1-2eps^2)n^(k+1)/2^k", cert.holds);
    return finish(report);
}

// optimize -------------------------------------------------------------------

struct OptimizeArgs {
    std::size_t m = 1;
    std::size_t k = 1;
    std::size_t iterations = 5000;
    double step = 1.0;
    std::optional<std::uint64_t> seed;
    std::size_t starts = 1;
    std::string out_file;
};

int run_optimize(const OptimizeArgs& args, const std::string& command) {
    if (!args.seed) throw ValidationError("optimize requires --seed");
    const auto result =
        maximize_density_multistart(args.m, args.k, args.iterations, args.step, *args.seed, args.starts);
    const double target = std::ldexp(1.0, -static_cast<int>(args.k));
    RunReport report(command);
    report.field("m", std::to_string(args.m));
    report.field("k", std::to_string(args.k));
    report.field("best_seed", std::to_string(result.seed));
    report.field("best_iteration", std::to_string(result.best_iteration));
    report.field("density", format_double(result.density));
    report.field("target", format_double(target));
    report.field("gap", format_double(result.gap));
    report.field("regularity_gap", format_double(regularity_gap(result.kernel)));
    report.check("density<=2^-k+1e-9", result.density <= target + 1e-9);
    if (args.out_file.empty()) {
        std::istringstream lines(to_knl(result.kernel));
        for (std::string l; std::getline(lines, l);) report.line("kernel: " + l);
    } else {
        std::ofstream out(args.out_file, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("cannot write " + args.out_file);
        out << to_knl(result.kernel);
        report.field("kernel_file", args.out_file);
    }
    return finish(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed path counts in tournaments: exact counts, bounds, kernels, census"};
    app.require_subcommand(1);
    const std::string command = echo(argc, argv);
    std::function<int()> action;

    const std::vector<std::string> engines{"dfs", "subset-dp"};

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Count directed k-edge paths (or walks) in a .trn file");
    count_cmd->add_option("file", count_args.file, ".trn tournament file")->required();
    count_cmd->add_option("-k,--k", count_args.k, "path length in edges")->required();
    count_cmd->add_option("--engine", count_args.engine, "dfs, subset-dp or walks")
        ->check(CLI::IsMember({"dfs", "subset-dp", "walks"}));
    count_cmd->add_flag("--check", count_args.check, "certify binom(n,k+1) <= count <= n^(k+1)/2^k");
    count_cmd->callback([&] { action = [&] { return run_count(count_args, command); }; });

    GenerateArgs gen_args;
    std::uint64_t gen_seed = 0;
    auto* gen_cmd = app.add_subcommand("generate", "Write a tournament in .trn format to stdout");
    gen_cmd->add_option("kind", gen_args.kind, "transitive, rotational, paley or random")
        ->required()
        ->check(CLI::IsMember({"transitive", "rotational", "paley", "random"}));
    gen_cmd->add_option("size", gen_args.size, "n, or q for paley")->required();
    auto* gen_seed_opt = gen_cmd->add_option("--seed", gen_seed, "seed for random");
    gen_cmd->callback([&] {
        if (*gen_seed_opt) gen_args.seed = gen_seed;
        action = [&] { return run_generate(gen_args); };
    });

    KernelArgs kernel_args;
    auto* kernel_cmd = app.add_subcommand("kernel", "Evaluate path density functionals of a .knl kernel");
    kernel_cmd->add_option("file", kernel_args.file, ".knl kernel file")->required();
    kernel_cmd->add_option("-k,--k", kernel_args.k, "path length in edges")->required();
    kernel_cmd->add_flag("--density", kernel_args.density, "path density and 2^-k bound");
    kernel_cmd->add_flag("--trace", kernel_args.trace, "A_t contraction chain and Cauchy-Schwarz step");
    kernel_cmd->add_flag("--regularity-gap", kernel_args.regularity, "integral of |1 - 2 d(x)|");
    kernel_cmd->callback([&] { action = [&] { return run_kernel(kernel_args, command); }; });

    CensusArgs census_args;
    std::size_t census_k = 0;
    auto* census_cmd = app.add_subcommand("census", "Exhaustive extremal census over labeled tournaments");
    census_cmd->add_option("n", census_args.n, "vertex count")->required();
    auto* census_k_opt = census_cmd->add_option("-k,--k", census_k, "single path length");
    census_cmd->add_flag("--k-all", census_args.k_all, "all k = 0..n-1 in one pass");
    census_cmd->add_option("--jobs", census_args.jobs, "worker threads");
    census_cmd->add_option("--out", census_args.out_dir, "directory for JSON/CSV records");
    census_cmd->add_flag("--force", census_args.force, "allow n > 7 and overwrite differing records");
    census_cmd->callback([&] {
        if (*census_k_opt) census_args.k = census_k;
        action = [&] { return run_census(census_args, command); };
    });

    StabilityArgs stab_args;
    auto* stab_cmd = app.add_subcommand("stability", "Compare path count with (1-2eps^2) n (n/2)^k");
    stab_cmd->add_option("file", stab_args.file, ".trn tournament file")->required();
    stab_cmd->add_option("-k,--k", stab_args.k, "path length in edges")->required();
    stab_cmd->add_option("--engine", stab_args.engine, "dfs or subset-dp")->check(CLI::IsMember(engines));
    stab_cmd->callback([&] { action = [&] { return run_stability(stab_args, command); }; });

    OptimizeArgs opt_args;
    std::uint64_t opt_seed = 0;
    auto* opt_cmd = app.add_subcommand("optimize", "Projected gradient ascent of k-path density over m-step kernels");
    opt_cmd->add_option("m", opt_args.m, "block count")->required();
    opt_cmd->add_option("k", opt_args.k, "path length in edges")->required();
    opt_cmd->add_option("--iters", opt_args.iterations, "iterations per start");
    opt_cmd->add_option("--step", opt_args.step, "constant step size (default 1.0)");
    auto* opt_seed_opt = opt_cmd->add_option("--seed", opt_seed, "seed of the first start");
    opt_cmd->add_option("--starts", opt_args.starts, "independent starts");
    opt_cmd->add_option("--out", opt_args.out_file, "write the best kernel as .knl");
    opt_cmd->callback([&] {
        if (*opt_seed_opt) opt_args.seed = opt_seed;
        action = [&] { return run_optimize(opt_args, command); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        return action();
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const AssertionFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAssertion;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}
