#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fadespec/dist/nakagami.hpp"
#include "fadespec/dist/wigner.hpp"
#include "fadespec/error.hpp"
#include "fadespec/gof/histogram.hpp"
#include "fadespec/gof/kolmogorov_smirnov.hpp"
#include "fadespec/gof/nakagami_fit.hpp"
#include "fadespec/numerics/random.hpp"
#include "test_support.hpp"

using fadespec::dist::NakagamiParams;
using fadespec::dist::nakagami_sample;
using fadespec::dist::omega_unit;
using fadespec::numeric_error;
using fadespec::numerics::RandomStream;
using fadespec::gof::class_name;
using fadespec::gof::classify_ensemble;
using fadespec::gof::EnsembleClass;
using fadespec::gof::estimate_m_mle;
using fadespec::gof::estimate_m_moment;
using fadespec::gof::fit_report;
using fadespec::gof::Histogram;
using fadespec::gof::histogram;
using fadespec::gof::ks_pvalue;
using fadespec::gof::ks_statistic;
using fadespec::gof::ks_test;
namespace ref = testsupport::ref;

TEST_CASE("histogram bins and normalizes", "[gof]") {
    const std::vector<double> data{0.5, 1.5, 2.5, 3.5};
    const Histogram h = histogram(data, 4, std::make_pair(0.0, 4.0));
    REQUIRE(h.bin_edges.size() == 5);
    REQUIRE(h.densities.size() == 4);
    CHECK(h.sample_count == 4);
    for (double d : h.densities) CHECK(d == Catch::Approx(0.25).margin(1e-15));

    double mass = 0.0;
    for (std::size_t i = 0; i < h.densities.size(); ++i) {
        mass += h.densities[i] * (h.bin_edges[i + 1] - h.bin_edges[i]);
    }
    CHECK(mass == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("histogram drops out-of-range points and keeps the top edge", "[gof]") {
    const std::vector<double> data{0.5, 1.5, 9.0, -2.0, 4.0};
    const Histogram h = histogram(data, 4, std::make_pair(0.0, 4.0));
    CHECK(h.sample_count == 3);  // 9.0 and -2.0 fall outside
    CHECK(h.densities[3] > 0.0);  // x = 4.0 counted in the last bin
}

TEST_CASE("histogram defaults its range to the data extent", "[gof]") {
    const std::vector<double> data{2.0, 3.0, 5.0};
    const Histogram h = histogram(data, 3);
    CHECK(h.bin_edges.front() == 2.0);
    CHECK(h.bin_edges.back() == 5.0);
    CHECK(h.sample_count == 3);
}

TEST_CASE("histogram validates its inputs", "[gof]") {
    const std::vector<double> data{1.0, 2.0};
    CHECK_THROWS_AS(histogram(data, 0, std::make_pair(0.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(histogram(data, 4, std::make_pair(1.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(histogram(data, 4, std::make_pair(2.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(histogram(std::vector<double>{}, 4), std::domain_error);
}

TEST_CASE("ks statistic matches a hand computation", "[gof]") {
    // Uniform CDF, data {0.25, 0.5, 0.75}: D = max(0.25 - 0/3, ...) = 0.25.
    const std::vector<double> data{0.75, 0.25, 0.5};
    const double d = ks_statistic(data, [](double x) { return x; });
    CHECK(d == Catch::Approx(0.25).margin(1e-15));
}

TEST_CASE("ks p-value matches the dual-series evaluation", "[gof]") {
    // Frozen: Q(1.358) with lambda = sqrt(n) * d, n = 100, d = 0.1358.
    CHECK(ks_pvalue(0.1358, 100) ==
          Catch::Approx(ref::kKolmogorovQ1p358).margin(1e-10));
    for (double lambda : {0.4, 0.7, 1.0, 1.5, 2.0, 3.0}) {
        const double via_library = ks_pvalue(lambda / 10.0, 100);  // sqrt(100) d = lambda
        const double via_theta = testsupport::kolmogorov_q_theta(lambda);
        INFO("lambda = " << lambda);
        CHECK(via_library == Catch::Approx(via_theta).margin(1e-10));
    }
    CHECK(ks_pvalue(0.0, 50) == 1.0);
    CHECK(ks_pvalue(1e-12, 50) == 1.0);
    CHECK(ks_pvalue(1.0, 1000000) >= 0.0);
    CHECK_THROWS_AS(ks_pvalue(1.5, 10), std::domain_error);
    CHECK_THROWS_AS(ks_pvalue(0.5, 0), std::domain_error);
}

TEST_CASE("ks test accepts its own distribution and rejects a wrong one", "[gof]") {
    const NakagamiParams params(1.5, omega_unit(1.5));
    RandomStream stream(515, 0);
    const std::vector<double> samples = nakagami_sample(stream, params, 50000);

    const auto good = ks_test(samples, [&](double x) {
        return fadespec::dist::nakagami_cdf(params, x);
    });
    CHECK(good.n == 50000);
    CHECK(good.statistic <= 1.63 / std::sqrt(50000.0));
    CHECK(good.p_value > 0.01);

    const NakagamiParams wrong(3.0, omega_unit(3.0));
    const auto bad = ks_test(samples, [&](double x) {
        return fadespec::dist::nakagami_cdf(wrong, x);
    });
    CHECK(bad.statistic > 0.05);
    CHECK(bad.p_value < 1e-6);
}

TEST_CASE("moment estimator matches a hand-computed value", "[gof]") {
    // y = x^2 = {1,1,9,9}: mean 5, population variance 16, m_hat = 25/16.
    std::vector<double> data{1.0, 1.0, 3.0, 3.0, 1.0, 1.0, 3.0, 3.0, 1.0, 1.0, 3.0, 3.0};
    // Same y-mean and variance as the 4-point version; n >= 10 required.
    CHECK(estimate_m_moment(data) == Catch::Approx(25.0 / 16.0).margin(1e-12));
}

TEST_CASE("estimators recover the generating shape", "[gof]") {
    for (double m : {0.5, 1.0, 2.5}) {
        const NakagamiParams params(m, omega_unit(m));
        RandomStream stream(616, static_cast<std::uint64_t>(10 * m));
        const std::vector<double> samples = nakagami_sample(stream, params, 100000);
        const double m_moment = estimate_m_moment(samples);
        const double m_mle = estimate_m_mle(samples);
        INFO("m = " << m);
        CHECK(std::abs(m_moment - m) / m <= 0.03);
        CHECK(std::abs(m_mle - m) / m <= 0.02);
    }
}

TEST_CASE("estimators enforce their preconditions", "[gof]") {
    std::vector<double> tiny{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(estimate_m_moment(tiny), std::domain_error);
    CHECK_THROWS_AS(estimate_m_mle(tiny), std::domain_error);

    std::vector<double> constant(20, 1.5);
    CHECK_THROWS_AS(estimate_m_moment(constant), numeric_error);

    std::vector<double> with_zero(20, 1.5);
    with_zero[7] = 0.0;
    CHECK_THROWS_AS(estimate_m_mle(with_zero), std::domain_error);
    std::vector<double> with_negative(20, 1.5);
    with_negative[3] = -0.1;
    CHECK_THROWS_AS(estimate_m_mle(with_negative), std::domain_error);
}

TEST_CASE("classification snaps to the nearest repulsion exponent", "[gof]") {
    CHECK(classify_ensemble(1.0, 0.3) == EnsembleClass::GOE);
    CHECK(classify_ensemble(1.5, 0.3) == EnsembleClass::GUE);
    CHECK(classify_ensemble(2.5, 0.3) == EnsembleClass::GSE);
    // beta_hat = 1.4: nearest is beta = 1 at distance 0.4.
    CHECK(classify_ensemble(1.2, 0.3) == EnsembleClass::Unclassified);
    CHECK(classify_ensemble(1.2, 0.5) == EnsembleClass::GOE);
    // beta_hat = 3 ties between 2 and 4; the smaller exponent wins.
    CHECK(classify_ensemble(2.0, 1.0) == EnsembleClass::GUE);
    // m = 3 -> beta_hat = 5, a distance 1 from GSE.
    CHECK(classify_ensemble(3.0, 0.3) == EnsembleClass::Unclassified);
    CHECK_THROWS_AS(classify_ensemble(1.0, 0.0), std::domain_error);
    CHECK(class_name(EnsembleClass::GSE) == "GSE");
    CHECK(class_name(EnsembleClass::Unclassified) == "Unclassified");
}

TEST_CASE("fit_report assembles a coherent report", "[gof]") {
    const NakagamiParams params(1.5, omega_unit(1.5));
    RandomStream stream(717, 0);
    const std::vector<double> samples = nakagami_sample(stream, params, 50000);
    const auto report = fit_report(samples, 0.3);
    CHECK(std::abs(report.m_hat_mle - 1.5) <= 0.05);
    CHECK(report.beta_hat == Catch::Approx(2.0 * report.m_hat_mle - 1.0).margin(1e-15));
    CHECK(report.classification == EnsembleClass::GUE);
    CHECK(report.ks.n == 50000);
    CHECK(report.ks.statistic <= 1.63 / std::sqrt(50000.0));
    CHECK(report.ks.p_value > 0.05);
}
