#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fadespec/dist/nakagami.hpp"
#include "fadespec/dist/wigner.hpp"
#include "fadespec/numerics/quadrature.hpp"
#include "fadespec/numerics/random.hpp"
#include "test_support.hpp"

using fadespec::dist::NakagamiParams;
using fadespec::dist::nakagami_cdf;
using fadespec::dist::nakagami_mean;
using fadespec::dist::nakagami_pdf;
using fadespec::dist::nakagami_sample;
using fadespec::dist::omega_unit;
using fadespec::numerics::integrate;
using fadespec::numerics::RandomStream;
namespace ref = testsupport::ref;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("parameter domain is enforced at construction", "[nakagami]") {
    CHECK_THROWS_AS(NakagamiParams(0.49, 1.0), std::domain_error);
    CHECK_THROWS_AS(NakagamiParams(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(NakagamiParams(1.0, -1.0), std::domain_error);
    const NakagamiParams boundary(0.5, 2.0);
    CHECK(boundary.m() == 0.5);
    CHECK(boundary.omega() == 2.0);
}

TEST_CASE("pdf reproduces closed-form special cases", "[nakagami]") {
    // Rayleigh reduction: f(1) = 2 e^{-1}.
    CHECK(nakagami_pdf(NakagamiParams(1.0, 1.0), 1.0) ==
          Catch::Approx(ref::kTwoOverE).margin(1e-14));
    // Half-normal value at the origin.
    CHECK(nakagami_pdf(NakagamiParams(0.5, 1.0), 0.0) ==
          Catch::Approx(ref::kSqrtTwoOverPi).margin(1e-14));
    // Frozen evaluation at m = 2.5, Omega = 45 pi / 128.
    const double omega = 45.0 * 3.14159265358979323846 / 128.0;
    CHECK(nakagami_pdf(NakagamiParams(2.5, omega), 1.3) ==
          Catch::Approx(ref::kNakagamiM25At1p3).margin(1e-13));
}

TEST_CASE("pdf boundary behaviour", "[nakagami]") {
    const NakagamiParams params(1.5, 0.8);
    CHECK(nakagami_pdf(params, -0.3) == 0.0);
    CHECK(nakagami_pdf(params, 0.0) == 0.0);
    CHECK(nakagami_pdf(NakagamiParams(0.5, 3.0), 0.0) ==
          Catch::Approx(std::sqrt(2.0 / (3.14159265358979323846 * 3.0))).margin(1e-14));
}

TEST_CASE("pdf integrates to one", "[nakagami]") {
    for (double m : {0.5, 0.8, 1.0, 2.5, 6.0}) {
        const NakagamiParams params(m, 1.3);
        const auto total =
            integrate([&](double x) { return nakagami_pdf(params, x); }, 0.0, kInf, 1e-10);
        INFO("m = " << m);
        CHECK(total.value == Catch::Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("cdf agrees with the integrated pdf", "[nakagami]") {
    const NakagamiParams params(1.7, 0.9);
    for (double x : {0.2, 0.7, 1.2, 2.0}) {
        const auto part =
            integrate([&](double t) { return nakagami_pdf(params, t); }, 0.0, x, 1e-12);
        INFO("x = " << x);
        CHECK(nakagami_cdf(params, x) == Catch::Approx(part.value).margin(1e-10));
    }
    CHECK(nakagami_cdf(params, 0.0) == 0.0);
    CHECK(nakagami_cdf(params, -1.0) == 0.0);
    CHECK(nakagami_cdf(NakagamiParams(1.0, 1.0), 1.0) ==
          Catch::Approx(ref::kOneMinusInvE).margin(1e-12));
    CHECK(nakagami_cdf(NakagamiParams(2.5, 1.0), 10.0) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("mean formula agrees with quadrature", "[nakagami]") {
    CHECK(nakagami_mean(NakagamiParams(1.0, 1.0)) ==
          Catch::Approx(ref::kSqrtPiOverTwo).margin(1e-13));
    CHECK(nakagami_mean(NakagamiParams(0.5, 1.0)) ==
          Catch::Approx(ref::kSqrtTwoOverPi).margin(1e-13));
    const NakagamiParams params(3.2, 2.4);
    const auto first_moment = integrate(
        [&](double x) { return x * nakagami_pdf(params, x); }, 0.0, kInf, 1e-11);
    CHECK(nakagami_mean(params) == Catch::Approx(first_moment.value).margin(1e-9));
}

TEST_CASE("unit-mean spread yields unit mean", "[nakagami]") {
    for (double m : {0.5, 0.75, 1.0, 1.5, 2.5, 5.0}) {
        INFO("m = " << m);
        CHECK(nakagami_mean(NakagamiParams(m, omega_unit(m))) ==
              Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("sampler matches the distribution it claims", "[nakagami]") {
    const NakagamiParams params(1.5, 2.0);
    RandomStream stream(424242, 0);
    const std::vector<double> samples = nakagami_sample(stream, params, 100000);
    REQUIRE(samples.size() == 100000);
    for (double x : samples) REQUIRE(x > 0.0);

    const double d = testsupport::ks_distance(
        samples, [&](double x) { return nakagami_cdf(params, x); });
    CHECK(d <= 1.63 / std::sqrt(100000.0));

    // E x^2 = Omega.
    std::vector<double> squared(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) squared[i] = samples[i] * samples[i];
    const auto [mean_sq, var_sq] = testsupport::mean_var(squared);
    CHECK(std::abs(mean_sq - params.omega()) < 5.0 * std::sqrt(var_sq / 100000.0));
}

TEST_CASE("sampler replays bitwise for equal streams", "[nakagami]") {
    const NakagamiParams params(0.5, 1.0);
    RandomStream a(7, 1);
    RandomStream b(7, 1);
    const auto xs = nakagami_sample(a, params, 512);
    const auto ys = nakagami_sample(b, params, 512);
    REQUIRE(xs == ys);
}

TEST_CASE("sampler validates its count", "[nakagami]") {
    const NakagamiParams params(1.0, 1.0);
    RandomStream stream(1, 0);
    CHECK_THROWS_AS(nakagami_sample(stream, params, 0), std::domain_error);
}
