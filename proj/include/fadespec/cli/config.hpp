#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "fadespec/dist/wigner.hpp"

namespace fadespec::cli {

enum class OutputFormat { Csv, Json };

inline const char* format_name(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

struct RunConfig {
    std::string subcommand;

    std::uint64_t seed = 0;
    std::size_t n = 0;
    double m = 1.0;
    std::optional<double> omega;
    double beta = 1.0;
    dist::EnsembleKind ensemble = dist::EnsembleKind::GOE;
    std::size_t size = 0;
    std::size_t count = 0;
    bool two_by_two = false;

    std::size_t bins = 40;
    std::optional<std::pair<double, double>> range;
    int degree = 7;
    double trim = 0.1;

    std::vector<double> distances;
    double tol = 0.3;
    std::string profile_path;
    std::size_t grid = 512;

    std::string input_path;
    std::string out_path = "-";
    OutputFormat format = OutputFormat::Csv;
};

struct ParseOutcome {
    enum class Status { Run, Help, UsageError };
    Status status = Status::Run;
    RunConfig config;
    std::string message;
};

namespace detail {

inline CLI::Validator at_least(double minimum, bool strict = false) {
    std::string description = std::string(strict ? "> " : ">= ") + CLI::detail::to_string(minimum);
    return CLI::Validator(
        [minimum, strict](std::string& input) -> std::string {
            double value{};
            if (!CLI::detail::lexical_cast(input, value)) {
                return "failed to parse '" + input + "' as a number";
            }
            const bool ok = strict ? (value > minimum) : (value >= minimum);
            if (!ok) {
                return "value " + input + " must be " + (strict ? "> " : ">= ") +
                       CLI::detail::to_string(minimum);
            }
            return {};
        },
        description);
}

}  // namespace detail

/// Build the command-line grammar and parse `args` (program name excluded).
/// Never throws on bad input: help requests and usage errors are reported in
/// the returned outcome so the caller controls exit codes and streams.
inline ParseOutcome parse_args(const std::vector<std::string>& args) {
    ParseOutcome outcome;
    RunConfig& cfg = outcome.config;

    CLI::App app{"Nakagami fading samples, Gaussian-ensemble spacing statistics, and the"
                 " distance-driven transition between them"};
    app.name("fadespec");
    app.require_subcommand(1);

    std::string ensemble_name = "goe";
    std::string format_name = "csv";
    std::vector<double> range_values;

    const auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed; equal seeds reproduce output exactly")
            ->required();
    };
    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "Output path, '-' for standard output")
            ->capture_default_str();
        sub->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };
    const auto add_range = [&](CLI::App* sub, const std::string& help) {
        return sub->add_option("--range", range_values, help)
            ->delimiter(',')
            ->expected(2)
            ->check(CLI::Number);
    };
    const auto require_increasing_range = [&](CLI::App* sub) {
        sub->callback([&range_values]() {
            if (range_values.size() == 2 && !(range_values[0] < range_values[1])) {
                throw CLI::ValidationError("--range", "lower bound must be below upper bound");
            }
        });
    };

    CLI::App* sample_nakagami =
        app.add_subcommand("sample-nakagami", "Draw Nakagami fading envelope samples");
    sample_nakagami->add_option("--m", cfg.m, "Shape parameter")
        ->required()
        ->check(detail::at_least(0.5));
    sample_nakagami
        ->add_option("--omega", cfg.omega,
                     "Spread parameter (default: the value giving unit mean for this m)")
        ->check(detail::at_least(0.0, true));
    sample_nakagami->add_option("--n", cfg.n, "Number of samples")
        ->required()
        ->check(CLI::PositiveNumber);
    add_seed(sample_nakagami);
    add_output(sample_nakagami);

    CLI::App* sample_ensemble =
        app.add_subcommand("sample-ensemble", "Sample Gaussian ensemble matrices and record"
                                              " their eigenvalues");
    sample_ensemble->add_option("--ensemble", ensemble_name, "Matrix ensemble")
        ->required()
        ->check(CLI::IsMember({"goe", "gue", "gse"}, CLI::ignore_case));
    sample_ensemble->add_option("--size", cfg.size, "Matrix dimension")
        ->required()
        ->check(detail::at_least(2.0));
    sample_ensemble->add_option("--count", cfg.count, "Number of matrices")
        ->required()
        ->check(CLI::PositiveNumber);
    add_seed(sample_ensemble);
    add_output(sample_ensemble);

    CLI::App* nnsd = app.add_subcommand(
        "nnsd", "Nearest-neighbour spacing histogram with surmise and fading overlays");
    nnsd->add_option("--ensemble", ensemble_name, "Matrix ensemble")
        ->required()
        ->check(CLI::IsMember({"goe", "gue", "gse"}, CLI::ignore_case));
    CLI::Option* nnsd_size =
        nnsd->add_option("--size", cfg.size, "Matrix dimension (bulk mode)")
            ->check(detail::at_least(2.0));
    nnsd->add_option("--count", cfg.count,
                     "Number of matrices, or number of spacings with --two-by-two")
        ->required()
        ->check(CLI::PositiveNumber);
    CLI::Option* nnsd_two =
        nnsd->add_flag("--two-by-two", cfg.two_by_two,
                       "Use exact 2x2 spacings instead of unfolded bulk spectra");
    nnsd->add_option("--bins", cfg.bins, "Histogram bin count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_range(nnsd, "Histogram range lo,hi (default: data extent)");
    nnsd->add_option("--degree", cfg.degree, "Unfolding polynomial degree")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    nnsd->add_option("--trim", cfg.trim, "Fraction of spacings trimmed at each spectrum edge")
        ->check(CLI::Range(0.0, 0.4))
        ->capture_default_str();
    add_seed(nnsd);
    add_output(nnsd);
    nnsd->callback([nnsd_size, nnsd_two, &range_values]() {
        if (nnsd_two->count() == 0 && nnsd_size->count() == 0) {
            throw CLI::ValidationError("--size", "required unless --two-by-two is given");
        }
        if (range_values.size() == 2 && !(range_values[0] < range_values[1])) {
            throw CLI::ValidationError("--range", "lower bound must be below upper bound");
        }
    });

    CLI::App* surmise =
        app.add_subcommand("surmise", "Tabulate the generalized spacing surmise density");
    surmise->add_option("--beta", cfg.beta, "Symmetry exponent")
        ->required()
        ->check(CLI::NonNegativeNumber);
    surmise->add_option("--grid", cfg.grid, "Number of grid points")
        ->check(detail::at_least(2.0))
        ->capture_default_str();
    add_range(surmise, "Evaluation range lo,hi (default: 0,4)");
    require_increasing_range(surmise);
    add_output(surmise);

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the fading/surmise density identity on a grid");
    verify->add_option("--m", cfg.m, "Shape parameter")
        ->required()
        ->check(detail::at_least(0.5));
    verify->add_option("--grid", cfg.grid, "Number of grid points")
        ->check(detail::at_least(2.0))
        ->capture_default_str();
    add_range(verify, "Evaluation range lo,hi (default: 0,6)");
    require_increasing_range(verify);
    verify->add_option("--tol", cfg.tol, "Maximum allowed |density difference|")
        ->check(detail::at_least(0.0, true));
    add_output(verify);

    CLI::App* fit = app.add_subcommand(
        "fit", "Estimate the fading shape from samples and classify the matching ensemble");
    fit->add_option("--input", cfg.input_path, "CSV file with one sample per line")
        ->required();
    fit->add_option("--tol", cfg.tol, "Classification acceptance band around the exponent")
        ->check(detail::at_least(0.0, true));
    add_output(fit);

    CLI::App* scenario = app.add_subcommand(
        "scenario", "Distance-driven fading transition across measurement windows");
    scenario->add_option("--distances", cfg.distances, "Comma-separated window distances")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    scenario->add_option("--n", cfg.n, "Samples per window")
        ->required()
        ->check(detail::at_least(100.0));
    scenario->add_option("--tol", cfg.tol, "Classification acceptance band around the exponent")
        ->check(detail::at_least(0.0, true));
    scenario->add_option("--profile", cfg.profile_path,
                         "JSON distance profile (default: built-in highway profile)");
    add_seed(scenario);
    add_output(scenario);
    scenario->callback([&cfg]() {
        std::set<double> unique(cfg.distances.begin(), cfg.distances.end());
        if (unique.size() != cfg.distances.size()) {
            throw CLI::ValidationError("--distances", "distances must be pairwise distinct");
        }
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("fadespec");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        const auto parsed = app.get_subcommands();
        if (!parsed.empty()) target = parsed.front();
        outcome.status = ParseOutcome::Status::Help;
        outcome.message = target->help();
        return outcome;
    } catch (const CLI::CallForAllHelp&) {
        outcome.status = ParseOutcome::Status::Help;
        outcome.message = app.help("", CLI::AppFormatMode::All);
        return outcome;
    } catch (const CLI::ParseError& error) {
        outcome.status = ParseOutcome::Status::UsageError;
        outcome.message = error.what();
        return outcome;
    }

    CLI::App* parsed = app.get_subcommands().front();
    cfg.subcommand = parsed->get_name();
    cfg.ensemble = dist::parse_ensemble(ensemble_name);
    cfg.format = format_name == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (range_values.size() == 2) {
        cfg.range = std::make_pair(range_values[0], range_values[1]);
    }
    if (parsed == verify && verify->count("--tol") == 0) cfg.tol = 1e-10;
    outcome.status = ParseOutcome::Status::Run;
    return outcome;
}

}  // namespace fadespec::cli
