#include <doctest.h>

#include <cmath>

#include "gwmono/errors.hpp"
#include "gwmono/random.hpp"
#include "gwmono/states.hpp"
#include "oracles.hpp"

using namespace gwmono;

TEST_CASE("basis ordering puts site 0 leftmost") {
    const GWState gw = make_gw_state(4, 2, {{std::sqrt(0.5)}, {0.5}, {0.4}, {0.3}});
    const PureStateVector psi = to_state_vector(gw);
    CHECK(psi.amplitudes().size() == 16);
    CHECK(psi.amplitude(8).real() == doctest::Approx(std::sqrt(0.5)));  // |1000>
    CHECK(psi.amplitude(4).real() == doctest::Approx(0.5));             // |0100>
    CHECK(psi.amplitude(2).real() == doctest::Approx(0.4));             // |0010>
    CHECK(psi.amplitude(1).real() == doctest::Approx(0.3));             // |0001>
    CHECK(std::abs(psi.amplitude(0)) == 0.0);
    CHECK(psi.index_of({0, 1, 0, 0}) == 4);
}

TEST_CASE("qudit levels") {
    const GWState gw = make_gw_state(2, 3, {{0.6, Complex(0.0, 0.48)}, {0.0, 0.64}});
    CHECK(gw.coeff(0, 2) == Complex(0.0, 0.48));
    const PureStateVector psi = to_state_vector(gw);
    CHECK(psi.amplitude(psi.index_of({2, 0})) == Complex(0.0, 0.48));
    CHECK(psi.amplitude(psi.index_of({0, 2})).real() == doctest::Approx(0.64));
    CHECK(psi.amplitude(psi.index_of({1, 0})).real() == doctest::Approx(0.6));
    CHECK(gw.site_weight(0) == doctest::Approx(0.6 * 0.6 + 0.48 * 0.48));
    CHECK_THROWS_AS(gw.coeff(0, 3), InputError);
}

TEST_CASE("normalization policy") {
    CHECK_NOTHROW(make_gw_state(2, 2, {{std::sqrt(0.5) + 1e-10}, {std::sqrt(0.5)}}));
    CHECK_THROWS_AS(make_gw_state(2, 2, {{1.0}, {1.0}}), InputError);
    const GWState gw = make_gw_state(2, 2, {{1.0}, {1.0}}, Normalization::renormalize);
    CHECK(gw.coeff(0, 1).real() == doctest::Approx(std::sqrt(0.5)));
    CHECK_THROWS_AS(make_gw_state(2, 2, {{0.0}, {0.0}}, Normalization::renormalize), InputError);
    CHECK_THROWS_AS(make_gw_state(2, 2, {{1.0}}), InputError);
    CHECK_THROWS_AS(make_gw_state(2, 1, {{}, {}}), InputError);
}

TEST_CASE("GWV mixes in the vacuum") {
    const GWVState v = make_gwv_state(uniform_w_state(3), 0.64);
    const PureStateVector psi = to_state_vector(v);
    CHECK(psi.amplitude(0).real() == doctest::Approx(0.6));
    CHECK(psi.amplitude(4).real() == doctest::Approx(0.8 / std::sqrt(3.0)));
    CHECK_THROWS_AS(make_gwv_state(uniform_w_state(3), 1.5), InputError);
}

TEST_CASE("amplitude cap") {
    CHECK_THROWS_AS(to_state_vector(uniform_w_state(10), 512), SizeError);
    CHECK_NOTHROW(to_state_vector(uniform_w_state(9), 512));
}

TEST_CASE("partial trace matches the explicit double loop") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.integer(2, 4);
        const int d = rng.integer(2, 3);
        const PureStateVector psi = to_state_vector(random_gw_state(rng, n, d));
        SiteSet keep;
        for (int s = 0; s < n; ++s) {
            if (rng.uniform() < 0.5) keep.push_back(s);
        }
        if (keep.empty()) keep.push_back(rng.integer(0, n - 1));
        const Eigen::MatrixXcd expect = oracle::partial_trace(psi.amplitudes(), psi.dims(), keep);
        const DensityMatrix rho = reduce(psi, keep);
        CHECK((rho.matrix() - expect).norm() < 1e-12);
        CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-10);
    }
}

TEST_CASE("keep order does not matter") {
    Rng rng(3);
    const PureStateVector psi = to_state_vector(random_gw_state(rng, 4, 3));
    CHECK((reduce(psi, {2, 0}).matrix() - reduce(psi, {0, 2}).matrix()).norm() < 1e-14);
}

TEST_CASE("complementary reductions share purity") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.integer(3, 6);
        const PureStateVector psi = to_state_vector(random_gw_state(rng, n, rng.integer(2, 3)));
        SiteSet side{rng.integer(0, n - 1)};
        const double a = purity(reduce(psi, side));
        const double b = purity(reduce(psi, complement(side, n)));
        CHECK(std::abs(a - b) < 1e-10);
        CHECK(std::abs(reduced_purity(psi, side) - a) < 1e-10);
    }
}

TEST_CASE("two-block reductions of GW states have rank at most two") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.integer(3, 6);
        const PureStateVector psi = to_state_vector(random_gw_state(rng, n, rng.integer(2, 3)));
        const Partition part = random_partition(rng, n, complement({0}, n), 2);
        SiteSet both = part.covered();
        const auto ev = spectrum(reduce(psi, both));
        int rank = 0;
        for (double l : ev) rank += l > 1e-10 ? 1 : 0;
        CHECK(rank <= 2);
    }
}

TEST_CASE("schmidt spectrum of a W state") {
    const PureStateVector psi = to_state_vector(uniform_w_state(6));
    const auto w = schmidt_spectrum(psi, {0, 1, 2, 3});
    REQUIRE(w.size() >= 2);
    CHECK(w[0] == doctest::Approx(4.0 / 6.0));
    CHECK(w[1] == doctest::Approx(2.0 / 6.0));
    for (std::size_t i = 2; i < w.size(); ++i) CHECK(std::abs(w[i]) < 1e-12);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition::make(4, {{0, 1}, {1, 2}}), InputError);
    CHECK_THROWS_AS(Partition::make(4, {{0}, {}}), InputError);
    CHECK_THROWS_AS(Partition::make(4, {{0}, {4}}), InputError);
    const Partition p = Partition::make(4, {{3, 1}, {0}});
    CHECK(p.block(0) == SiteSet{1, 3});
    CHECK(p.union_except(0) == SiteSet{0});
    CHECK(!p.covers_all_sites());
    CHECK(p.covered() == SiteSet{0, 1, 3});
}

TEST_CASE("site set helpers") {
    CHECK(normalized_sites({3, 1}, 4) == SiteSet{1, 3});
    CHECK_THROWS_AS(normalized_sites({1, 1}, 4), InputError);
    CHECK_THROWS_AS(normalized_sites({}, 4), InputError);
    CHECK(complement({1, 3}, 4) == SiteSet{0, 2});
}

TEST_CASE("density matrix validation") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
    CHECK_NOTHROW(DensityMatrix({2}, m));
    m(0, 1) = 0.3;
    CHECK_THROWS_AS(DensityMatrix({2}, m), InputError);
    m(1, 0) = 0.3;
    CHECK_NOTHROW(DensityMatrix({2}, m));
    m(0, 1) = m(1, 0) = 0.7;  // negative eigenvalue
    CHECK_THROWS_AS(DensityMatrix({2}, m), InputError);
    CHECK_THROWS_AS(DensityMatrix({3}, Eigen::MatrixXcd::Identity(2, 2) * 0.5), InputError);
}

TEST_CASE("pure state vector validation") {
    Eigen::VectorXcd v(4);
    v << 1.0, 0.0, 0.0, 0.0;
    CHECK_NOTHROW(PureStateVector({2, 2}, v));
    v(1) = 0.1;
    CHECK_THROWS_AS(PureStateVector({2, 2}, v), InputError);
    CHECK_THROWS_AS(PureStateVector({2, 3}, Eigen::VectorXcd::Unit(4, 0)), InputError);
}
