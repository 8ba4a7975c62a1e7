#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "agdsim/analytics.hpp"
#include "agdsim/poisson.hpp"
#include "agdsim/quadrature.hpp"

using namespace agdsim;

namespace {

double power_sum(double u, std::int64_t window) {
    double s = 0.0, up = 1.0;
    for (std::int64_t m = 1; m < window; ++m) {
        up *= u;
        s += up / static_cast<double>(m);
    }
    return s;
}

// Exact moments of the stopped record sum via the barrier-time density
// u^(window-1) exp(power_sum(u)); independent of the production formulas
// except for the shared quadrature kernel.
double record_variance_exact(std::int64_t window) {
    const auto dens = [window](double u) {
        if (u <= 0.0) return 0.0;
        return std::exp(static_cast<double>(window - 1) * std::log(u) + power_sum(u, window));
    };
    // direct sums: the closed forms cancel catastrophically near u = 1
    const auto m_of = [window](double u) {
        double s = 0.0, up = 1.0;
        for (std::int64_t i = 1; i < window; ++i) {
            up *= u;
            s += up;
        }
        return s;
    };
    const auto v_of = [window](double u) {
        double s = 0.0, up = 1.0;
        for (std::int64_t i = 1; i < window; ++i) {
            up *= u;
            s += static_cast<double>(i) * up;
        }
        return s;
    };
    const QuadratureSpec spec{1e-13, 1e-11, 20};
    const double lim = 1.0 - 1e-12;
    const double em = integrate([&](double u) { return dens(u) * m_of(u); }, 0.0, lim, spec);
    const double em2 =
        integrate([&](double u) { return dens(u) * m_of(u) * m_of(u); }, 0.0, lim, spec);
    const double ev = integrate([&](double u) { return dens(u) * v_of(u); }, 0.0, lim, spec);
    return ev + em2 - em * em;
}

// literal nested double integral for the class-count mean, in the time
// variable, with the exhaustion integral done by quadrature as well
double class_count_mean_nested(std::int64_t cls, std::int64_t window) {
    const QuadratureSpec inner_spec{1e-12, 1e-10, 16};
    const auto terminal_weight = [window](double s) {
        if (s <= 0.0) return 0.0;
        return std::exp(static_cast<double>(window - 1) * std::log1p(-std::exp(-s)));
    };
    const auto outer = [&](double t) {
        if (t <= 0.0) return cls == 1 ? 1.0 : 0.0;
        const double exhaust = integrate(terminal_weight, 0.0, t, inner_spec);
        return class_intensity(cls, window, t) * std::exp(-exhaust);
    };
    return integrate_semi_infinite(outer, std::log(static_cast<double>(window)) + 1.0,
                                   {1e-11, 1e-9, 16});
}

} // namespace

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0.0);
    CHECK(harmonic(1) == 1.0);
    CHECK(harmonic(2) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(harmonic(4) == doctest::Approx(25.0 / 12.0).epsilon(1e-14));
    // the asymptotic branch continues the exact sum smoothly
    const double exact = harmonic(1'000'000);
    const double x = 1e6;
    const double asym = std::log(x) + kEulerGamma + 1.0 / (2.0 * x) - 1.0 / (12.0 * x * x);
    CHECK(exact == doctest::Approx(asym).epsilon(1e-13));
}

TEST_CASE("record mean closed form") {
    CHECK(record_mean(1) == 1.0);
    CHECK(record_mean(2) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    const double ratio = record_mean(10000) / (std::exp(kEulerGamma) * 9999.0);
    CHECK(std::abs(ratio - 1.0) < 1e-4);
}

TEST_CASE("residence survival by quadrature") {
    for (std::int64_t k : {0, 1, 9}) {
        CHECK(residence_survival(1, k) ==
              doctest::Approx(1.0 / static_cast<double>(k + 1)).epsilon(1e-10));
    }
    for (std::int64_t j : {1, 2, 5}) {
        CHECK(residence_survival(j, 0) == 1.0);
    }
    CHECK(residence_survival(2, 1) == doctest::Approx(0.75).epsilon(1e-10));
    CHECK_THROWS_AS(residence_survival(0, 3), std::invalid_argument);
}

TEST_CASE("alternating-sum route") {
    CHECK(residence_survival_alternating(1, 3) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(residence_survival_alternating(2, 0) == 1.0);
    CHECK_THROWS_AS(residence_survival_alternating(1, 61), std::domain_error);
    // conditioning stress: at j = 1 the sum telescopes to 1/(k+1)
    for (std::int64_t k : {10, 35, 50, 60}) {
        CHECK(residence_survival_alternating(1, k) ==
              doctest::Approx(1.0 / static_cast<double>(k + 1)).epsilon(1e-12));
    }
    // frozen independent values
    CHECK(residence_survival_alternating(2, 10) ==
          doctest::Approx(0.274534304080).epsilon(1e-10));
    CHECK(residence_survival_alternating(3, 30) ==
          doctest::Approx(0.287611202653).epsilon(1e-10));
}

TEST_CASE("quadrature and alternating routes agree") {
    double worst = 0.0;
    for (std::int64_t j = 1; j <= 3; ++j) {
        for (std::int64_t k = 0; k <= 30; ++k) {
            worst = std::max(worst, std::abs(residence_survival(j, k) -
                                             residence_survival_alternating(j, k)));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("class-count mean") {
    CHECK(class_count_mean(1, 2) == doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-9));
    for (std::int64_t window : {2, 5, 10}) {
        double weighted = static_cast<double>(window);
        for (std::int64_t i = 1; i < window; ++i) {
            const double m = class_count_mean(i, window);
            CHECK(m <= 1.0 / static_cast<double>(i) + 1e-9);
            weighted += static_cast<double>(i) * m;
        }
        CHECK(weighted == doctest::Approx(record_mean(window)).epsilon(1e-6));
    }
    CHECK_THROWS_AS(class_count_mean(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(class_count_mean(0, 5), std::invalid_argument);
}

TEST_CASE("class-count mean agrees with the literal nested integral") {
    struct Case {
        std::int64_t cls, window;
    };
    for (const Case c : {Case{1, 2}, Case{1, 5}, Case{3, 5}, Case{5, 10}}) {
        CHECK(class_count_mean(c.cls, c.window) ==
              doctest::Approx(class_count_mean_nested(c.cls, c.window)).epsilon(1e-8));
    }
}

TEST_CASE("variance bounds bracket the exact variance") {
    // frozen cross-language values for the exact variance
    CHECK(record_variance_exact(50) == doctest::Approx(955.3000).epsilon(1e-5));
    CHECK(record_variance_exact(200) == doctest::Approx(15519.0315).epsilon(1e-5));

    for (std::int64_t window : {2, 3, 5, 10, 50, 200}) {
        const VarianceBounds vb = record_variance_bounds(window);
        const double exact = record_variance_exact(window);
        INFO("window=", window);
        CHECK(vb.lower <= vb.upper);
        CHECK(vb.lower <= exact);
        CHECK(exact <= vb.upper);
    }
    for (std::int64_t window = 2; window <= 2000; ++window) {
        const VarianceBounds vb = record_variance_bounds(window);
        REQUIRE(vb.lower <= vb.upper);
    }
}

TEST_CASE("variance bound asymptotic constants") {
    const double a = 1e5;
    const VarianceBounds vb = record_variance_bounds(100000);
    const double lower_const = std::exp(kEulerGamma) - 1.5;
    const double upper_const = 1.5 - (std::exp(kEulerGamma) - 1.0) * (std::exp(kEulerGamma) - 1.0);
    CHECK(std::abs(vb.lower / (a * a) / lower_const - 1.0) < 0.01);
    CHECK(std::abs(vb.upper / (a * a) / upper_const - 1.0) < 0.01);
}

TEST_CASE("asymptotic means") {
    const ModelParams mp = derive_params(10000, 1.0, 0.5, 1.0);
    const AsymptoticMeans am = asymptotic_means(mp);
    CHECK(am.mean_steps == doctest::Approx(std::exp(kEulerGamma) * 100.0).epsilon(1e-12));
    CHECK(am.mean_explorations == am.mean_steps);
    CHECK(am.mean_explorations == doctest::Approx(178.10724).epsilon(1e-6));

    const AsymptoticMeans half = asymptotic_means(derive_params(10000, 1.0, 0.5, 0.5));
    const AsymptoticMeans twice = asymptotic_means(derive_params(10000, 1.0, 0.5, 2.0));
    CHECK(half.mean_explorations == twice.mean_explorations); // beta-free
    CHECK(twice.mean_steps == doctest::Approx(am.mean_steps / 2.0).epsilon(1e-12));
}

TEST_CASE("quadrature failure reports the achieved error") {
    const auto wiggle = [](double t) { return std::cos(5000.0 * t); };
    try {
        integrate(wiggle, 0.0, 1.0, {1e-16, 1e-15, 1});
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.achieved_error() > 0.0);
    }
}
