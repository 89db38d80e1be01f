#include <doctest.h>

#include <sstream>

#include "gwmono/errors.hpp"
#include "gwmono/io.hpp"

using namespace gwmono;

TEST_CASE("state JSON round trip") {
    const GWState gw = make_gw_state(2, 3, {{0.6, Complex(0.0, 0.48)}, {0.0, 0.64}});
    const StateSpec spec = parse_state_json(state_to_json(gw).dump());
    CHECK(spec.gw.sites() == 2);
    CHECK(spec.gw.local_dim() == 3);
    CHECK(spec.gw.coeffs() == gw.coeffs());
    CHECK(!spec.vacuum_weight);
}

TEST_CASE("state JSON with vacuum weight") {
    const StateSpec spec =
        parse_state_json(R"({"n": 2, "d": 2, "coeffs": [[1, 0], [1, 0]], "renormalize": true, "vacuum_weight": 0.36})");
    REQUIRE(spec.vacuum_weight);
    const PureStateVector psi = state_vector(spec);
    CHECK(psi.amplitude(0).real() == doctest::Approx(0.6));
    CHECK(psi.amplitude(1).real() == doctest::Approx(0.8 / std::sqrt(2.0)));
}

TEST_CASE("state JSON errors") {
    CHECK_THROWS_AS(parse_state_json("{"), InputError);
    CHECK_THROWS_AS(parse_state_json("[]"), InputError);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 2, "d": 2})"), InputError);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 2, "d": 2, "coeffs": [[1, 0]]})"), InputError);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 2, "d": 2, "coeffs": [[1, 0], [1]]})"), InputError);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 2, "d": 2, "coeffs": [[1, 0], [1, 0]]})"), InputError);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 2.5, "d": 2, "coeffs": []})"), InputError);
    CHECK_THROWS_AS(
        parse_state_json(R"({"n": 1, "d": 2, "coeffs": [[1, 0]], "vacuum_weight": 2})"), InputError);
    CHECK_THROWS_AS(load_state_file("/nonexistent/state.json"), InputError);
}

TEST_CASE("report JSON fields") {
    MonogamyReport r;
    r.inequality_id = "x";
    r.lhs = 1.0;
    r.rhs = 0.5;
    r.margin = 0.5;
    r.hypotheses = {{"h1", true, "fine"}};
    r.params = {{"q", 2.0}};
    const auto j = report_to_json(r);
    CHECK(j["inequality_id"] == "x");
    CHECK(j["margin"] == 0.5);
    CHECK(j["hypotheses"][0]["name"] == "h1");
    CHECK(j["params"]["q"] == 2.0);
    CHECK(j["verdict"] == "holds");
}

TEST_CASE("CSV formatting") {
    DataTable t{{"q", "v"}, {{2.0, 0.1234564}, {2.1, -1e-9}}, "printed"};
    std::ostringstream fixed;
    write_csv(fixed, t, true);
    CHECK(fixed.str() == "q,v\n2.000000,0.123456\n2.100000,0.000000\n");
    std::ostringstream full;
    write_csv(full, t, false);
    CHECK(full.str() == "q,v\n2,0.12345639999999999\n2.1000000000000001,-1.0000000000000001e-09\n");
    CHECK(format_full(0.1) == "0.10000000000000001");
}
