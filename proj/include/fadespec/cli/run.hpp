#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fadespec/cli/config.hpp"
#include "fadespec/cli/emit.hpp"
#include "fadespec/dist/nakagami.hpp"
#include "fadespec/dist/wigner.hpp"
#include "fadespec/error.hpp"
#include "fadespec/gof/histogram.hpp"
#include "fadespec/gof/nakagami_fit.hpp"
#include "fadespec/numerics/random.hpp"
#include "fadespec/rmt/eigenvalues.hpp"
#include "fadespec/rmt/matrix_sampling.hpp"
#include "fadespec/rmt/spacings.hpp"
#include "fadespec/scenario/transition.hpp"

namespace fadespec::cli {

using ordered_json = nlohmann::ordered_json;

inline scenario::DistanceProfile load_profile(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw std::runtime_error("cannot open profile '" + path + "'");
    }
    ordered_json doc;
    try {
        stream >> doc;
    } catch (const nlohmann::json::exception& error) {
        throw std::runtime_error("profile '" + path + "': " + error.what());
    }
    if (!doc.is_object() || !doc.contains("segments") || !doc["segments"].is_array() ||
        doc["segments"].empty()) {
        throw std::runtime_error("profile '" + path +
                                 "': expected an object with a non-empty \"segments\" array");
    }
    std::vector<scenario::ProfileSegment> segments;
    for (const auto& entry : doc["segments"]) {
        if (!entry.is_object() || !entry.contains("m") || !entry["m"].is_number()) {
            throw std::runtime_error("profile '" + path +
                                     "': every segment needs a numeric \"m\"");
        }
        scenario::ProfileSegment segment{};
        segment.m = entry["m"].get<double>();
        if (entry.contains("max_distance") && !entry["max_distance"].is_null()) {
            if (!entry["max_distance"].is_number()) {
                throw std::runtime_error("profile '" + path +
                                         "': \"max_distance\" must be a number when present");
            }
            segment.max_distance = entry["max_distance"].get<double>();
        } else {
            segment.max_distance = std::numeric_limits<double>::infinity();
        }
        segments.push_back(segment);
    }
    try {
        return scenario::DistanceProfile(std::move(segments));
    } catch (const std::domain_error& error) {
        throw std::runtime_error("profile '" + path + "': " + error.what());
    }
}

/// Read one sample per line from a CSV file; only the first column is used
/// and a non-numeric first line is treated as a header.
inline std::vector<double> read_sample_column(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw std::runtime_error("cannot open input '" + path + "'");
    }
    std::vector<double> values;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(stream, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string field = line.substr(0, line.find(','));
        const auto begin = field.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const auto end = field.find_last_not_of(" \t");
        field = field.substr(begin, end - begin + 1);
        double value{};
        const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
        if (result.ec != std::errc{} || result.ptr != field.data() + field.size()) {
            if (line_number == 1) continue;
            throw std::runtime_error(path + ":" + std::to_string(line_number) +
                                     ": cannot parse '" + field + "' as a number");
        }
        values.push_back(value);
    }
    if (values.empty()) {
        throw std::runtime_error("input '" + path + "' contains no samples");
    }
    return values;
}

namespace detail {

inline std::string finish_json(ordered_json& doc) { return doc.dump(2) + "\n"; }

inline void run_sample_nakagami(const RunConfig& cfg) {
    const double omega = cfg.omega ? *cfg.omega : dist::omega_unit(cfg.m);
    const dist::NakagamiParams params(cfg.m, omega);
    numerics::RandomStream stream(cfg.seed, 0);
    const std::vector<double> samples = dist::nakagami_sample(stream, params, cfg.n);

    std::string content;
    if (cfg.format == OutputFormat::Csv) {
        content = "sample\n";
        for (double x : samples) {
            content += format_double(x);
            content += '\n';
        }
    } else {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["config"] = {{"subcommand", cfg.subcommand},
                         {"seed", cfg.seed},
                         {"m", cfg.m},
                         {"omega", omega},
                         {"n", cfg.n}};
        doc["results"] = samples;
        content = finish_json(doc);
    }
    write_output(content, cfg.out_path);
}

inline void run_sample_ensemble(const RunConfig& cfg) {
    std::string csv = "matrix_index,eigenvalue\n";
    ordered_json results = ordered_json::array();
    for (std::size_t i = 0; i < cfg.count; ++i) {
        numerics::RandomStream stream(cfg.seed, i);
        const auto sample = rmt::sample_matrix(stream, cfg.ensemble, static_cast<int>(cfg.size));
        const std::vector<double> eigenvalues = rmt::spectrum(sample).eigenvalues;
        if (cfg.format == OutputFormat::Csv) {
            const std::string index = std::to_string(i);
            for (double value : eigenvalues) {
                append_csv_row(csv, {index, format_double(value)});
            }
        } else {
            results.push_back({{"matrix_index", i}, {"eigenvalues", eigenvalues}});
        }
    }

    std::string content;
    if (cfg.format == OutputFormat::Csv) {
        content = std::move(csv);
    } else {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["config"] = {{"subcommand", cfg.subcommand},
                         {"seed", cfg.seed},
                         {"ensemble", std::string(dist::ensemble_name(cfg.ensemble))},
                         {"size", cfg.size},
                         {"count", cfg.count}};
        doc["results"] = std::move(results);
        content = finish_json(doc);
    }
    write_output(content, cfg.out_path);
}

inline void run_nnsd(const RunConfig& cfg) {
    rmt::SpacingSeries series;
    if (cfg.two_by_two) {
        numerics::RandomStream stream(cfg.seed, 0);
        series = rmt::spacings_2x2(stream, cfg.ensemble, cfg.count);
    } else {
        std::vector<rmt::SpacingSeries> parts;
        parts.reserve(cfg.count);
        for (std::size_t i = 0; i < cfg.count; ++i) {
            numerics::RandomStream stream(cfg.seed, i);
            const auto sample =
                rmt::sample_matrix(stream, cfg.ensemble, static_cast<int>(cfg.size));
            const std::vector<double> eigenvalues = rmt::spectrum(sample).eigenvalues;
            parts.push_back(rmt::unfold(eigenvalues, cfg.degree, cfg.trim));
        }
        series = rmt::pool_spacings(parts);
    }

    const gof::Histogram hist = gof::histogram(series.spacings, cfg.bins, cfg.range);
    const dist::WignerFamily family =
        dist::wigner_coefficients(dist::ensemble_beta(cfg.ensemble));
    const double m = dist::m_from_beta(family.beta);
    const dist::NakagamiParams params(m, dist::omega_unit(m));

    std::string csv = "bin_left,bin_right,density,surmise_density,nakagami_density\n";
    ordered_json results = ordered_json::array();
    for (std::size_t b = 0; b < hist.densities.size(); ++b) {
        const double left = hist.bin_edges[b];
        const double right = hist.bin_edges[b + 1];
        const double center = 0.5 * (left + right);
        const double surmise_density = dist::wigner_pdf(family, center);
        const double nakagami_density = dist::nakagami_pdf(params, center);
        if (cfg.format == OutputFormat::Csv) {
            append_csv_row(csv, {format_double(left), format_double(right),
                                 format_double(hist.densities[b]),
                                 format_double(surmise_density),
                                 format_double(nakagami_density)});
        } else {
            results.push_back({{"bin_left", left},
                               {"bin_right", right},
                               {"density", hist.densities[b]},
                               {"surmise_density", surmise_density},
                               {"nakagami_density", nakagami_density}});
        }
    }

    std::string content;
    if (cfg.format == OutputFormat::Csv) {
        content = std::move(csv);
    } else {
        ordered_json doc;
        doc["schema_version"] = 1;
        ordered_json config = {{"subcommand", cfg.subcommand},
                               {"seed", cfg.seed},
                               {"ensemble", std::string(dist::ensemble_name(cfg.ensemble))},
                               {"two_by_two", cfg.two_by_two},
                               {"count", cfg.count},
                               {"bins", cfg.bins}};
        if (!cfg.two_by_two) {
            config["size"] = cfg.size;
            config["degree"] = cfg.degree;
            config["trim"] = cfg.trim;
        }
        if (cfg.range) {
            config["range"] = {cfg.range->first, cfg.range->second};
        } else {
            config["range"] = nullptr;
        }
        doc["config"] = std::move(config);
        doc["summary"] = {{"spacing_count", hist.sample_count}};
        doc["results"] = std::move(results);
        content = finish_json(doc);
    }
    write_output(content, cfg.out_path);
}

inline void run_surmise(const RunConfig& cfg) {
    const auto [lo, hi] = cfg.range.value_or(std::make_pair(0.0, 4.0));
    const dist::WignerFamily family = dist::wigner_coefficients(cfg.beta);

    std::string csv = "s,density,cdf\n";
    ordered_json results = ordered_json::array();
    for (std::size_t i = 0; i < cfg.grid; ++i) {
        const double s =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cfg.grid - 1);
        const double density = dist::wigner_pdf(family, s);
        const double cdf = dist::wigner_cdf(family, s);
        if (cfg.format == OutputFormat::Csv) {
            append_csv_row(csv, {format_double(s), format_double(density), format_double(cdf)});
        } else {
            results.push_back({{"s", s}, {"density", density}, {"cdf", cdf}});
        }
    }

    std::string content;
    if (cfg.format == OutputFormat::Csv) {
        content = std::move(csv);
    } else {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["config"] = {{"subcommand", cfg.subcommand},
                         {"beta", cfg.beta},
                         {"grid", cfg.grid},
                         {"range", {lo, hi}}};
        doc["summary"] = {{"a_beta", family.a_beta}, {"b_beta", family.b_beta}};
        doc["results"] = std::move(results);
        content = finish_json(doc);
    }
    write_output(content, cfg.out_path);
}

inline void run_verify(const RunConfig& cfg) {
    const auto [lo, hi] = cfg.range.value_or(std::make_pair(0.0, 6.0));
    const double beta = dist::beta_from_m(cfg.m);
    const dist::WignerFamily family = dist::wigner_coefficients(beta);
    const dist::NakagamiParams params(cfg.m, dist::omega_unit(cfg.m));

    std::string csv = "x,nakagami_density,surmise_density,abs_diff\n";
    ordered_json results = ordered_json::array();
    double max_abs_diff = 0.0;
    for (std::size_t i = 0; i < cfg.grid; ++i) {
        const double x =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cfg.grid - 1);
        const double nakagami_density = dist::nakagami_pdf(params, x);
        const double surmise_density = dist::wigner_pdf(family, x);
        const double abs_diff = std::abs(nakagami_density - surmise_density);
        if (abs_diff > max_abs_diff) max_abs_diff = abs_diff;
        if (cfg.format == OutputFormat::Csv) {
            append_csv_row(csv, {format_double(x), format_double(nakagami_density),
                                 format_double(surmise_density), format_double(abs_diff)});
        } else {
            results.push_back({{"x", x},
                               {"nakagami_density", nakagami_density},
                               {"surmise_density", surmise_density},
                               {"abs_diff", abs_diff}});
        }
    }

    const bool pass = max_abs_diff <= cfg.tol;
    std::string content;
    if (cfg.format == OutputFormat::Csv) {
        content = std::move(csv);
    } else {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["config"] = {{"subcommand", cfg.subcommand},
                         {"m", cfg.m},
                         {"grid", cfg.grid},
                         {"range", {lo, hi}},
                         {"tol", cfg.tol}};
        doc["summary"] = {{"max_abs_diff", max_abs_diff}, {"tol", cfg.tol}, {"pass", pass}};
        doc["results"] = std::move(results);
        content = finish_json(doc);
    }
    write_output(content, cfg.out_path);
    if (!pass) {
        throw numeric_error("verify: max |density difference| " + format_double(max_abs_diff) +
                            " exceeds tolerance " + format_double(cfg.tol));
    }
}

inline void run_fit(const RunConfig& cfg) {
    const std::vector<double> samples = read_sample_column(cfg.input_path);
    const gof::FitReport report = gof::fit_report(samples, cfg.tol);

    std::string content;
    if (cfg.format == OutputFormat::Csv) {
        content = "n,m_hat_moment,m_hat_mle,beta_hat,ks_statistic,ks_p_value,classification\n";
        append_csv_row(content,
                       {std::to_string(samples.size()), format_double(report.m_hat_moment),
                        format_double(report.m_hat_mle), format_double(report.beta_hat),
                        format_double(report.ks.statistic), format_double(report.ks.p_value),
                        std::string(gof::class_name(report.classification))});
    } else {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["config"] = {{"subcommand", cfg.subcommand},
                         {"input", cfg.input_path},
                         {"tol", cfg.tol}};
        doc["results"] = ordered_json::array(
            {{{"n", samples.size()},
              {"m_hat_moment", report.m_hat_moment},
              {"m_hat_mle", report.m_hat_mle},
              {"beta_hat", report.beta_hat},
              {"ks_statistic", report.ks.statistic},
              {"ks_p_value", report.ks.p_value},
              {"classification", std::string(gof::class_name(report.classification))}}});
        content = finish_json(doc);
    }
    write_output(content, cfg.out_path);
}

inline void run_scenario(const RunConfig& cfg) {
    const scenario::DistanceProfile profile = cfg.profile_path.empty()
                                                  ? scenario::DistanceProfile::highway_default()
                                                  : load_profile(cfg.profile_path);
    numerics::RandomStream stream(cfg.seed, 0);
    const std::vector<scenario::WindowResult> windows =
        scenario::run_transition_scenario(stream, profile, cfg.distances, cfg.n, cfg.tol);

    std::string csv =
        "distance,m_true,status,m_hat_moment,m_hat_mle,beta_hat,ks_statistic,ks_p_value,"
        "classification,error\n";
    ordered_json results = ordered_json::array();
    for (const scenario::WindowResult& window : windows) {
        if (cfg.format == OutputFormat::Csv) {
            if (window.failed) {
                append_csv_row(csv, {format_double(window.distance),
                                     format_double(window.m_true), "failed", "", "", "", "", "",
                                     "", csv_escape(window.error)});
            } else {
                const gof::FitReport& fit = *window.fit;
                append_csv_row(csv,
                               {format_double(window.distance), format_double(window.m_true),
                                "ok", format_double(fit.m_hat_moment),
                                format_double(fit.m_hat_mle), format_double(fit.beta_hat),
                                format_double(fit.ks.statistic), format_double(fit.ks.p_value),
                                std::string(gof::class_name(fit.classification)), ""});
            }
        } else {
            if (window.failed) {
                results.push_back({{"distance", window.distance},
                                   {"m_true", window.m_true},
                                   {"status", "failed"},
                                   {"error", window.error}});
            } else {
                const gof::FitReport& fit = *window.fit;
                results.push_back(
                    {{"distance", window.distance},
                     {"m_true", window.m_true},
                     {"status", "ok"},
                     {"m_hat_moment", fit.m_hat_moment},
                     {"m_hat_mle", fit.m_hat_mle},
                     {"beta_hat", fit.beta_hat},
                     {"ks_statistic", fit.ks.statistic},
                     {"ks_p_value", fit.ks.p_value},
                     {"classification", std::string(gof::class_name(fit.classification))}});
            }
        }
    }

    std::string content;
    if (cfg.format == OutputFormat::Csv) {
        content = std::move(csv);
    } else {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["config"] = {{"subcommand", cfg.subcommand},
                         {"seed", cfg.seed},
                         {"distances", cfg.distances},
                         {"n", cfg.n},
                         {"tol", cfg.tol},
                         {"profile", cfg.profile_path.empty() ? "built-in-highway"
                                                              : cfg.profile_path}};
        doc["results"] = std::move(results);
        content = finish_json(doc);
    }
    write_output(content, cfg.out_path);
}

}  // namespace detail

inline void dispatch(const RunConfig& cfg) {
    if (cfg.subcommand == "sample-nakagami") return detail::run_sample_nakagami(cfg);
    if (cfg.subcommand == "sample-ensemble") return detail::run_sample_ensemble(cfg);
    if (cfg.subcommand == "nnsd") return detail::run_nnsd(cfg);
    if (cfg.subcommand == "surmise") return detail::run_surmise(cfg);
    if (cfg.subcommand == "verify") return detail::run_verify(cfg);
    if (cfg.subcommand == "fit") return detail::run_fit(cfg);
    if (cfg.subcommand == "scenario") return detail::run_scenario(cfg);
    throw std::logic_error("dispatch: unknown subcommand '" + cfg.subcommand + "'");
}

/// Exit codes: 0 success (including --help), 1 usage error, 2 runtime or
/// data error, or a requested check that did not hold.
inline int run(const std::vector<std::string>& args) {
    const ParseOutcome outcome = parse_args(args);
    if (outcome.status == ParseOutcome::Status::Help) {
        std::cout << outcome.message;
        return 0;
    }
    if (outcome.status == ParseOutcome::Status::UsageError) {
        std::cerr << "fadespec: " << outcome.message << '\n';
        return 1;
    }
    try {
        dispatch(outcome.config);
    } catch (const std::exception& error) {
        std::cerr << "fadespec: error: " << error.what() << '\n';
        return 2;
    }
    return 0;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 1 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace fadespec::cli
