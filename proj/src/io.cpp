#include "gwmono/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gwmono/errors.hpp"

namespace gwmono {

using nlohmann::json;

StateSpec parse_state_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("state file must hold a JSON object");
    for (const char* key : {"n", "d", "coeffs"}) {
        if (!doc.contains(key)) throw InputError(std::string("state file lacks \"") + key + "\"");
    }
    if (!doc["n"].is_number_integer() || !doc["d"].is_number_integer()) {
        throw InputError("\"n\" and \"d\" must be integers");
    }
    const int n = doc["n"].get<int>();
    const int d = doc["d"].get<int>();
    if (n < 1 || d < 2) throw InputError("need n >= 1 and d >= 2");
    const json& flat = doc["coeffs"];
    if (!flat.is_array() || flat.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(d - 1)) {
        throw InputError("\"coeffs\" must list n (d - 1) = " + std::to_string(n * (d - 1)) + " [re, im] pairs");
    }
    std::vector<std::vector<Complex>> coeffs(static_cast<std::size_t>(n));
    std::size_t k = 0;
    for (auto& row : coeffs) {
        for (int i = 1; i < d; ++i, ++k) {
            const json& c = flat[k];
            if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
                throw InputError("coefficient " + std::to_string(k) + " is not a [re, im] pair");
            }
            row.emplace_back(c[0].get<double>(), c[1].get<double>());
        }
    }
    bool renormalize = false;
    if (doc.contains("renormalize")) {
        if (!doc["renormalize"].is_boolean()) throw InputError("\"renormalize\" must be a boolean");
        renormalize = doc["renormalize"].get<bool>();
    }
    StateSpec spec{make_gw_state(n, d, coeffs, renormalize ? Normalization::renormalize : Normalization::snap), {}};
    if (doc.contains("vacuum_weight") && !doc["vacuum_weight"].is_null()) {
        if (!doc["vacuum_weight"].is_number()) throw InputError("\"vacuum_weight\" must be a number");
        const double w = doc["vacuum_weight"].get<double>();
        if (!(w >= 0.0 && w <= 1.0)) throw InputError("\"vacuum_weight\" must lie in [0, 1]");
        spec.vacuum_weight = w;
    }
    return spec;
}

StateSpec load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open state file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

PureStateVector state_vector(const StateSpec& spec, std::size_t amplitude_cap) {
    if (spec.vacuum_weight && *spec.vacuum_weight > 0.0) {
        return to_state_vector(make_gwv_state(spec.gw, 1.0 - *spec.vacuum_weight), amplitude_cap);
    }
    return to_state_vector(spec.gw, amplitude_cap);
}

json state_to_json(const GWState& state) {
    json coeffs = json::array();
    for (const Complex& c : state.coeffs()) coeffs.push_back({c.real(), c.imag()});
    return {{"n", state.sites()}, {"d", state.local_dim()}, {"coeffs", coeffs}};
}

nlohmann::ordered_json report_to_json(const MonogamyReport& report) {
    nlohmann::ordered_json out;
    out["inequality_id"] = report.inequality_id;
    out["lhs"] = report.lhs;
    out["rhs"] = report.rhs;
    out["margin"] = report.margin;
    out["direction"] = report.direction == Direction::at_least ? ">=" : "<=";
    out["strict"] = report.strict;
    out["verdict"] = std::string(to_string(report.verdict()));
    nlohmann::ordered_json hyps = nlohmann::ordered_json::array();
    for (const auto& h : report.hypotheses) hyps.push_back({{"name", h.name}, {"ok", h.ok}, {"detail", h.detail}});
    out["hypotheses"] = hyps;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    out["params"] = params;
    if (!report.extra_margins.empty()) {
        nlohmann::ordered_json extra = nlohmann::ordered_json::object();
        for (const auto& [k, v] : report.extra_margins) extra[k] = v;
        out["extra_margins"] = extra;
    }
    if (!report.diagnostics.empty()) {
        nlohmann::ordered_json diag = nlohmann::ordered_json::object();
        for (const auto& [k, v] : report.diagnostics) diag[k] = v;
        out["diagnostics"] = diag;
    }
    return out;
}

nlohmann::ordered_json table_to_json(const DataTable& table) {
    nlohmann::ordered_json out;
    if (!table.source.empty()) out["source"] = table.source;
    out["columns"] = table.header;
    out["rows"] = table.rows;
    return out;
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    // avoid "-0.000000"
    if (std::string_view(buf) == "-0.000000") return "0.000000";
    return buf;
}

void write_csv(std::ostream& out, const DataTable& table, bool fixed6) {
    for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "");
            out << (fixed6 ? format_fixed6(row[i]) : format_full(row[i]));
        }
        out << '\n';
    }
}

}  // namespace gwmono
