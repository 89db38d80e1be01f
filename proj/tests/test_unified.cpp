#include <doctest.h>

#include <cmath>
#include <vector>

#include "gwmono/errors.hpp"
#include "gwmono/random.hpp"
#include "gwmono/unified.hpp"
#include "oracles.hpp"

using namespace gwmono;

namespace {

std::vector<UEParams> grid_in_region() {
    std::vector<UEParams> out;
    for (double s : {0.0, 0.25, 0.5, 2.0 / 3.0, 0.75, 1.0}) {
        const double lo = region_lower_q(s);
        const double hi = std::min(region_upper_q(s), 4.3);
        for (int k = 0; k < 6; ++k) out.push_back(UEParams::make(lo + (hi - lo) * k / 5.0, s));
    }
    return out;
}

std::vector<double> qubit_spectrum(double x) {
    const double r = std::sqrt(1.0 - x * x);
    return {(1.0 + r) / 2.0, (1.0 - r) / 2.0};
}

}  // namespace

TEST_CASE("parameter validation and regimes") {
    CHECK_THROWS_AS(UEParams::make(0.0, 1.0), InputError);
    CHECK_THROWS_AS(UEParams::make(2.0, -0.1), InputError);
    CHECK(UEParams::make(1.0 + 1e-7, 0.5).regime() == Regime::q_near_1);
    CHECK(UEParams::make(2.0, 1e-7).regime() == Regime::s_near_0);
    CHECK(UEParams::make(2.0, 1.0 - 1e-7).regime() == Regime::s_near_1);
    CHECK(UEParams::make(2.0, 0.5).regime() == Regime::generic);
    // q near 1 wins over s near 0
    CHECK(UEParams::make(1.0, 0.0).regime() == Regime::q_near_1);
}

TEST_CASE("region R edges") {
    CHECK(region_lower_q(1.0) == doctest::Approx((5.0 - std::sqrt(13.0)) / 2.0));
    CHECK(region_upper_q(1.0) == doctest::Approx((5.0 + std::sqrt(13.0)) / 2.0));
    CHECK(std::isinf(region_upper_q(0.0)));
    CHECK(region_lower_q(0.0) == doctest::Approx((std::sqrt(28.0) - 2.0) / 4.0));
    CHECK(region_lower_q(2.0 / 3.0) == doctest::Approx(0.75));
    // the filled singularity is continuous
    CHECK(std::abs(region_lower_q(2.0 / 3.0 + 1e-6) - 0.75) < 1e-5);
    CHECK(std::abs(region_lower_q(2.0 / 3.0 - 1e-6) - 0.75) < 1e-5);
    CHECK(in_region_r(UEParams::make(2.0, 1.0)));
    CHECK(!in_region_r(UEParams::make(4.5, 1.0)));
    CHECK(!in_region_r(UEParams::make(2.0, 1.5)));
    CHECK(!in_region_r(UEParams::make(0.5, 0.5)));
    CHECK(UEParams::make(2.0, 1.0).in_closed_form_domain());
    CHECK(!UEParams::make(4.0, 1.0).in_closed_form_domain());
    CHECK(UEParams::make(4.0, 1.0).in_region_r());
}

TEST_CASE("generic formula matches the definition") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> l(4);
        double sum = 0.0;
        for (auto& x : l) sum += (x = rng.uniform(0.0, 1.0));
        for (auto& x : l) x /= sum;
        const double q = rng.uniform(0.2, 4.0);
        const double s = rng.uniform(0.05, 1.5);
        if (std::abs(q - 1.0) < 1e-3 || std::abs(s - 1.0) < 1e-3) continue;
        const UEParams p = UEParams::make(q, s);
        CHECK(std::abs(unified_entropy_of_spectrum(l, p) - oracle::unified(l, q, s)) < 1e-12);
    }
}

TEST_CASE("limit regimes") {
    const std::vector<double> l{0.5, 0.3, 0.15, 0.05};
    double vn = 0.0;
    for (double x : l) vn -= x * std::log(x);
    for (double q : {0.5, 2.0, 3.0}) {
        double t = 0.0;
        for (double x : l) t += std::pow(x, q);
        const double renyi = std::log(t) / (1.0 - q);
        const double tsallis = (t - 1.0) / (1.0 - q);
        CHECK(std::abs(unified_entropy_generic(l, q, 1e-8) - renyi) <= 1e-6);
        CHECK(std::abs(unified_entropy_of_spectrum(l, UEParams::make(q, 0.0)) - renyi) <= 1e-12);
        CHECK(std::abs(unified_entropy_generic(l, q, 1.0) - tsallis) <= 1e-12);
        CHECK(std::abs(unified_entropy_of_spectrum(l, UEParams::make(q, 1.0 - 1e-8)) - tsallis) <= 1e-6);
    }
    for (double s : {0.25, 0.5, 1.0}) {
        CHECK(std::abs(unified_entropy_generic(l, 1.0 + 1e-8, s) - vn) <= 1e-6);
        CHECK(std::abs(unified_entropy_generic(l, 1.0 - 1e-8, s) - vn) <= 1e-6);
        CHECK(std::abs(unified_entropy_of_spectrum(l, UEParams::make(1.0, s)) - vn) <= 1e-12);
    }
    CHECK(von_neumann_entropy(std::vector<double>{0.5, 0.5}) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("f is the entropy of the qubit spectrum with concurrence x") {
    for (const UEParams& p : grid_in_region()) {
        for (double x : {0.0, 0.1, 0.37, 0.8, 0.999, 1.0}) {
            const double expect = unified_entropy_of_spectrum(qubit_spectrum(x), p);
            CHECK(std::abs(f_qs(x, p) - expect) < 1e-12);
        }
    }
    // Tsallis-2: 1 - sum l^2 = 2 l1 l2 = x^2 / 2
    const UEParams t2 = UEParams::make(2.0, 1.0);
    for (double x : {0.0, 0.3, 0.9, 1.0}) CHECK(f_qs(x, t2) == doctest::Approx(x * x / 2.0));
    CHECK(g_qs(0.82, t2) == doctest::Approx(0.41));
    CHECK_THROWS_AS(f_qs(1.01, t2), InputError);
    CHECK_THROWS_AS(f_qs(-0.01, t2), InputError);
    CHECK(f_qs(0.0, t2) == 0.0);
}

TEST_CASE("g(x^2) equals f(x)") {
    for (const UEParams& p : grid_in_region()) {
        double worst = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double x = i / 1000.0;
            worst = std::max(worst, std::abs(g_qs(x * x, p) - f_qs(x, p)));
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("f is increasing and convex, g squared is convex on region R") {
    const int k = 400;
    const double h = 1.0 / k;
    for (const UEParams& p : grid_in_region()) {
        double min_d1 = 1.0;
        double min_d2 = 1.0;
        double min_g2 = 1.0;
        for (int i = 1; i < k; ++i) {
            const double x = i * h;
            const double f0 = f_qs(x - h, p);
            const double f1 = f_qs(x, p);
            const double f2 = f_qs(x + h, p);
            min_d1 = std::min(min_d1, (f2 - f1) / h);
            min_d2 = std::min(min_d2, (f2 - 2 * f1 + f0) / (h * h));
            const double g0 = std::pow(g_qs(x - h, p), 2);
            const double g1 = std::pow(g_qs(x, p), 2);
            const double g2 = std::pow(g_qs(x + h, p), 2);
            min_g2 = std::min(min_g2, (g2 - 2 * g1 + g0) / (h * h));
        }
        CHECK(min_d1 >= -1e-9);
        CHECK(min_d2 >= -1e-7);
        CHECK(min_g2 >= -1e-7);
    }
}

TEST_CASE("additivity of f at q = 2 holds only for the Tsallis end") {
    // f_{2,s}(sqrt(x^2 + y^2)) = f(x) + f(y) exactly when f is linear in x^2,
    // which is the case s = 1 alone.
    const UEParams t = UEParams::make(2.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; i * i + j * j <= 400; ++j) {
            const double x = i / 20.0;
            const double y = j / 20.0;
            worst = std::max(worst, std::abs(f_qs(std::hypot(x, y), t) - f_qs(x, t) - f_qs(y, t)));
        }
    }
    CHECK(worst <= 1e-10);
    const UEParams half = UEParams::make(2.0, 0.5);
    const double gap = f_qs(std::hypot(0.6, 0.6), half) - 2.0 * f_qs(0.6, half);
    CHECK(std::abs(gap) > 1e-3);
}

TEST_CASE("unified entropy of a density matrix and of a pure cut") {
    const PureStateVector psi = to_state_vector(uniform_w_state(4));
    const UEParams p = UEParams::make(2.5, 0.5);
    const DensityMatrix rho = reduce(psi, {0});
    const std::vector<double> l{0.75, 0.25};
    CHECK(unified_entropy(rho, p) == doctest::Approx(oracle::unified(l, 2.5, 0.5)));
    CHECK(ue_pure(psi, {0}, p) == doctest::Approx(oracle::unified(l, 2.5, 0.5)));
    // C(site | rest) = 2 sqrt(3)/4 for the 4-qubit W state
    CHECK(ue_gw_reduced(std::sqrt(3.0) / 2.0, p) == doctest::Approx(oracle::unified(l, 2.5, 0.5)));
    CHECK_THROWS_AS(ue_pure(psi, {0, 1, 2, 3}, p), InputError);
}
