#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "gwmono/monogamy.hpp"
#include "gwmono/pre.hpp"
#include "gwmono/states.hpp"

namespace gwmono {

// State file: {"n": int, "d": int, "coeffs": [[re, im], ...], "vacuum_weight": real?,
// "renormalize": bool?}. coeffs holds n (d - 1) pairs, site-major. Without
// "renormalize": true the coefficient norm must already be 1 within 1e-9.
// vacuum_weight is the weight 1 - p of |0...0>.
struct StateSpec {
    GWState gw;
    std::optional<double> vacuum_weight;
};

StateSpec parse_state_json(const std::string& text);  // InputError on any schema problem
StateSpec load_state_file(const std::string& path);
PureStateVector state_vector(const StateSpec& spec, std::size_t amplitude_cap = kDefaultAmplitudeCap);
nlohmann::json state_to_json(const GWState& state);

nlohmann::ordered_json report_to_json(const MonogamyReport& report);
nlohmann::ordered_json table_to_json(const DataTable& table);

std::string format_full(double v);    // %.17g
std::string format_fixed6(double v);  // %.6f

// Header row then one line per row; fixed6 selects the 6-decimal format.
void write_csv(std::ostream& out, const DataTable& table, bool fixed6);

}  // namespace gwmono
