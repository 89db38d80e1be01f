#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gwmono/concurrence.hpp"
#include "gwmono/errors.hpp"
#include "gwmono/io.hpp"
#include "gwmono/monogamy.hpp"
#include "gwmono/pre.hpp"
#include "gwmono/reproduce.hpp"
#include "gwmono/suites.hpp"
#include "gwmono/unified.hpp"

namespace gwcli {

using namespace gwmono;

namespace {

struct Config {
    std::string state_file;
    std::vector<std::string> preset;
    std::vector<double> q{2.0};
    std::vector<double> s{1.0};
    std::vector<double> alpha{2.0};
    std::vector<double> beta{1.0};
    std::vector<double> mu{1.0};
    std::vector<double> h{1.0};
    std::vector<double> p_factor{1.0};
    std::string source;
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = kDefaultSeed;

    std::vector<int> sites;  // one-based
    std::string partition;   // "1|2,3|4", one-based
    int focus = 1;           // one-based block index
    bool pairs = false;
    std::vector<int> cut;  // m[,a,b]
    std::string theorem;
    int random = 0;
    int k = 1;
    std::string target;
    std::string kind = "upsilon";
    int n = 6;
    int points = 101;
};

struct LoadedState {
    PureStateVector psi;
    bool example1 = false;
};

std::string fmt(double v) { return format_full(v); }

LoadedState load_state(const Config& c) {
    const bool have_file = !c.state_file.empty();
    const bool have_preset = !c.preset.empty();
    if (have_file == have_preset) throw InputError("give exactly one of --state FILE or --preset NAME");
    if (have_file) return {state_vector(load_state_file(c.state_file)), false};
    const std::string& name = c.preset[0];
    if (name == "example1") {
        if (c.preset.size() != 1) throw InputError("preset example1 takes no argument");
        return {to_state_vector(example1_state()), true};
    }
    if (name == "uniform-w") {
        if (c.preset.size() != 2) throw InputError("preset uniform-w needs a site count, e.g. --preset uniform-w 6");
        int n = 0;
        try {
            n = std::stoi(c.preset[1]);
        } catch (const std::exception&) {
            throw InputError("uniform-w site count must be an integer");
        }
        if (n < 2) throw InputError("uniform-w needs at least two sites");
        return {to_state_vector(uniform_w_state(n)), false};
    }
    throw InputError("unknown preset '" + name + "' (known: example1, uniform-w N)");
}

int to_zero_based(int site, int n) {
    if (site < 1 || site > n) throw InputError("site " + std::to_string(site) + " outside 1.." + std::to_string(n));
    return site - 1;
}

SiteSet parse_site_list(const std::string& text, int n) {
    SiteSet out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(to_zero_based(v, n));
        } catch (const std::logic_error&) {
            throw InputError("bad site '" + item + "' in partition");
        }
    }
    return out;
}

Partition make_partition(const Config& c, const LoadedState& st) {
    const int n = st.psi.sites();
    std::vector<SiteSet> blocks;
    if (!c.partition.empty()) {
        std::stringstream ss(c.partition);
        std::string block;
        while (std::getline(ss, block, '|')) blocks.push_back(parse_site_list(block, n));
    } else if (!c.sites.empty()) {
        for (int s : c.sites) blocks.push_back({to_zero_based(s, n)});
    } else if (st.example1) {
        blocks = {{0}, {1}, {2}};
    } else {
        for (int s = 0; s < n; ++s) blocks.push_back({s});
    }
    return Partition::make(n, std::move(blocks));
}

std::size_t focus_index(const Config& c, const Partition& part) {
    if (c.focus < 1 || static_cast<std::size_t>(c.focus) > part.size()) {
        throw InputError("--focus must name a block 1.." + std::to_string(part.size()));
    }
    return static_cast<std::size_t>(c.focus - 1);
}

std::pair<int, int> site_pair(const Config& c, int n) {
    if (c.sites.empty()) return {0, 1};
    if (c.sites.size() != 2) throw InputError("--sites needs exactly two sites A,B here");
    return {to_zero_based(c.sites[0], n), to_zero_based(c.sites[1], n)};
}

std::string block_name(const SiteSet& block) {
    std::string out;
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + std::to_string(block[i] + 1);
    return "{" + out + "}";
}

void emit(const Config& c, const std::string& text, std::ostream& out) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file) throw InputError("cannot write " + c.out_path);
    file << text;
}

void require_format(const Config& c) {
    if (c.format != "csv" && c.format != "json") throw InputError("--format must be csv or json");
}

PairConcurrenceSource parse_source(const std::string& text, PairConcurrenceSource fallback) {
    if (text.empty()) return fallback;
    if (text == "printed") return PairConcurrenceSource::printed_closed_form;
    if (text == "oracle") return PairConcurrenceSource::effective_qubit_oracle;
    throw InputError("--source must be printed or oracle");
}

// ---- measure ---------------------------------------------------------------

struct Measurement {
    std::string quantity;
    std::optional<double> q;
    std::optional<double> s;
    double value;
};

std::string measurements_text(const Config& c, const std::vector<Measurement>& rows) {
    if (c.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["quantity"] = r.quantity;
            if (r.q) j["q"] = *r.q;
            if (r.s) j["s"] = *r.s;
            j["value"] = r.value;
            arr.push_back(j);
        }
        return arr.dump(2) + "\n";
    }
    std::string text = "quantity,q,s,value\n";
    for (const auto& r : rows) {
        text += r.quantity + "," + (r.q ? fmt(*r.q) : "") + "," + (r.s ? fmt(*r.s) : "") + "," + fmt(r.value) + "\n";
    }
    return text;
}

// Concurrence of a cut and its UE at every (q, s). Pure cuts use the entropy
// route; mixed ones need region R for U = g(C^2).
void add_cut(std::vector<Measurement>& rows, const Config& c, const std::string& label, double c_value,
             std::optional<std::pair<const PureStateVector*, SiteSet>> pure_side) {
    rows.push_back({"C(" + label + ")", std::nullopt, std::nullopt, c_value});
    for (double q : c.q) {
        for (double s : c.s) {
            const UEParams params = UEParams::make(q, s);
            double u = 0.0;
            if (pure_side) {
                u = ue_pure(*pure_side->first, pure_side->second, params);
            } else {
                if (!params.in_region_r()) {
                    throw HypothesisError("in_region_R", "U = g(C^2) for the mixed reduction " + label +
                                                             " needs (q, s) in region R; got q=" + fmt(q) +
                                                             ", s=" + fmt(s));
                }
                u = g_qs(std::min(1.0, c_value * c_value), params);
            }
            rows.push_back({"U(" + label + ")", q, s, u});
        }
    }
}

int cmd_measure(const Config& c, std::ostream& out) {
    require_format(c);
    const LoadedState st = load_state(c);
    const PureStateVector& psi = st.psi;
    const int n = psi.sites();
    std::vector<Measurement> rows;

    if (!c.cut.empty()) {
        if (c.cut.size() != 1) throw InputError("measure --cut takes one value m (first m sites | rest)");
        const int m = c.cut[0];
        if (m < 1 || m >= n) throw InputError("--cut m needs 1 <= m <= n - 1");
        SiteSet first;
        for (int i = 0; i < m; ++i) first.push_back(i);
        const double conc = concurrence_pure(psi, first);
        rows.push_back({"C2(" + block_name(first) + "|" + block_name(complement(first, n)) + ")", std::nullopt,
                        std::nullopt, conc * conc});
        add_cut(rows, c, block_name(first) + "|" + block_name(complement(first, n)), conc,
                std::make_pair(&psi, first));
    } else if (c.pairs) {
        const Partition part = make_partition(c, st);
        const std::size_t f = focus_index(c, part);
        const SiteSet& focus = part.block(f);
        const SiteSet rest = part.union_except(f);
        const FocusConcurrences fc = focus_concurrences(psi, part, f);
        std::optional<std::pair<const PureStateVector*, SiteSet>> pure;
        if (fc.whole_is_pure) pure = std::make_pair(&psi, focus);
        add_cut(rows, c, block_name(focus) + "|" + block_name(rest), std::sqrt(fc.whole_sq), pure);
        std::size_t k = 0;
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (i == f) continue;
            add_cut(rows, c, block_name(focus) + block_name(part.block(i)), std::sqrt(fc.pair_sq[k++]),
                    std::nullopt);
        }
    } else {
        for (int site = 0; site < n; ++site) {
            const SiteSet side{site};
            add_cut(rows, c, block_name(side) + "|rest", concurrence_pure(psi, side), std::make_pair(&psi, side));
        }
    }
    emit(c, measurements_text(c, rows), out);
    return ExitCode::ok;
}

// ---- check -----------------------------------------------------------------

std::string params_text(const NamedValues& params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? ";" : "") + params[i].first + "=" + fmt(params[i].second);
    return out;
}

std::string reports_text(const Config& c, const std::vector<MonogamyReport>& reports) {
    if (c.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        return arr.dump(2) + "\n";
    }
    std::string text = "inequality_id,params,lhs,rhs,margin,verdict,failed_hypotheses\n";
    for (const auto& r : reports) {
        std::string failed;
        for (const auto& h : r.hypotheses) {
            if (!h.ok) failed += (failed.empty() ? "" : ";") + h.name;
        }
        text += r.inequality_id + "," + params_text(r.params) + "," + fmt(r.lhs) + "," + fmt(r.rhs) + "," +
                fmt(r.margin) + "," + std::string(to_string(r.verdict())) + "," + failed + "\n";
    }
    return text;
}

// Broadcast a single value to `count` entries.
std::vector<double> per_step(const std::vector<double>& v, std::size_t count, const char* name) {
    if (v.size() == count) return v;
    if (v.size() == 1) return std::vector<double>(count, v[0]);
    throw InputError(std::string("--") + name + " needs 1 or " + std::to_string(count) + " values");
}

int exit_for(const std::vector<MonogamyReport>& reports, std::ostream& err) {
    int code = ExitCode::ok;
    for (const auto& r : reports) {
        const Verdict v = r.verdict();
        if (v == Verdict::violated) {
            err << "violation: " << r.inequality_id << " [" << params_text(r.params) << "] margin " << fmt(r.margin)
                << "\n";
            code = ExitCode::violation;
        } else if (v == Verdict::refused) {
            for (const auto& h : r.hypotheses) {
                if (!h.ok) err << "refused: " << r.inequality_id << " hypothesis " << h.name << ": " << h.detail << "\n";
            }
            if (code == ExitCode::ok) code = ExitCode::hypothesis_refusal;
        }
    }
    return code;
}

std::string suites_text(const Config& c, const std::vector<SuiteSummary>& suites) {
    if (c.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& s : suites) {
            nlohmann::ordered_json j;
            j["suite"] = s.name;
            j["instances"] = s.instances;
            j["held"] = s.held;
            j["violated"] = s.violated;
            j["refused"] = s.refused;
            j["skipped"] = s.skipped;
            j["worst_margin"] = std::isfinite(s.worst_margin) ? nlohmann::ordered_json(s.worst_margin) : nullptr;
            nlohmann::ordered_json fails = nlohmann::ordered_json::array();
            for (const auto& r : s.failures) fails.push_back(report_to_json(r));
            j["first_violations"] = fails;
            arr.push_back(j);
        }
        return arr.dump(2) + "\n";
    }
    std::string text = "suite,instances,held,violated,refused,skipped,worst_margin\n";
    for (const auto& s : suites) {
        text += s.name + "," + std::to_string(s.instances) + "," + std::to_string(s.held) + "," +
                std::to_string(s.violated) + "," + std::to_string(s.refused) + "," + std::to_string(s.skipped) + "," +
                (std::isfinite(s.worst_margin) ? fmt(s.worst_margin) : "") + "\n";
    }
    return text;
}

int cmd_check_random(const Config& c, std::ostream& out, std::ostream& err) {
    if (!c.state_file.empty() || !c.preset.empty()) throw InputError("--random draws its own states; drop --state/--preset");
    SuiteOptions opt;
    opt.states = c.random;
    opt.seed = c.seed;
    std::vector<SuiteSummary> suites;
    if (c.theorem == "2" || c.theorem == "3") {
        suites = run_block_monogamy_suite(opt);
    } else if (c.theorem == "6" || c.theorem == "7" || c.theorem == "subadditivity") {
        suites = run_two_site_suite(opt);
    } else {
        throw InputError("--random supports --theorem 2, 3, 6, 7 or subadditivity");
    }
    emit(c, suites_text(c, suites), out);
    int code = ExitCode::ok;
    for (const auto& s : suites) {
        if (s.violated > 0) {
            err << "violation: suite " << s.name << " has " << s.violated << " violating instances (worst margin "
                << fmt(s.worst_margin) << ")\n";
            code = ExitCode::violation;
        }
    }
    return code;
}

int cmd_check(const Config& c, std::ostream& out, std::ostream& err) {
    require_format(c);
    if (c.theorem.empty()) throw InputError("check needs --theorem 2|3|4|5|6|7|subadditivity|pre");
    if (c.random > 0) return cmd_check_random(c, out, err);

    const LoadedState st = load_state(c);
    const PureStateVector& psi = st.psi;
    const int n = psi.sites();
    std::vector<MonogamyReport> reports;
    const std::string& t = c.theorem;

    if (t == "2" || t == "3" || t == "4" || t == "5") {
        const Partition part = make_partition(c, st);
        const std::size_t f = focus_index(c, part);
        for (double q : c.q) {
            for (double s : c.s) {
                const UEParams params = UEParams::make(q, s);
                if (t == "2") {
                    reports.push_back(check_squared_monogamy(psi, part, f, params));
                    continue;
                }
                for (double alpha : c.alpha) {
                    if (t == "3") {
                        reports.push_back(check_alpha_monogamy(psi, part, f, params, alpha));
                    } else if (t == "4") {
                        for (double mu : c.mu) {
                            for (double h : c.h) {
                                for (double p : c.p_factor) {
                                    reports.push_back(check_tighter_monogamy(psi, part, f, params, mu, h, p, alpha));
                                }
                            }
                        }
                    } else {
                        const std::size_t steps = part.size() >= 2 ? part.size() - 2 : 0;
                        reports.push_back(check_chained_monogamy(psi, part, f, params, per_step(c.mu, steps, "mu"),
                                                                 per_step(c.h, steps, "h"),
                                                                 per_step(c.p_factor, steps, "p-factor"), c.k, alpha));
                    }
                }
            }
        }
    } else if (t == "6" || t == "7") {
        if (c.q.size() != 1 || c.q[0] != 2.0) throw InputError("the two-site bounds are stated at q = 2 only");
        const auto [a, b] = site_pair(c, n);
        const TwoSiteInputs in = two_site_inputs(psi, a, b);
        for (double s : c.s) {
            for (double beta : c.beta) {
                reports.push_back(t == "6" ? beta_lower_bound_theorem6(in, beta, s)
                                           : beta_upper_bound_theorem7(in, beta, s));
            }
        }
    } else if (t == "subadditivity") {
        const auto [a, b] = site_pair(c, n);
        for (double q : c.q) {
            for (double s : c.s) reports.push_back(subadditivity_sandwich(psi, {a}, {b}, UEParams::make(q, s)));
        }
    } else if (t == "pre") {
        if (c.cut.size() != 3) throw InputError("check --theorem pre needs --cut m,a,b");
        const BlockCut cut = BlockCut::make(n, c.cut[0], c.cut[1], c.cut[2]);
        for (double q : c.q) {
            for (double s : c.s) reports.push_back(monogamy_like_pre_check(psi, cut, UEParams::make(q, s)));
        }
    } else {
        throw InputError("unknown --theorem '" + t + "'");
    }
    emit(c, reports_text(c, reports), out);
    return exit_for(reports, err);
}

// ---- reproduce -------------------------------------------------------------

std::string table_text(const Config& c, const DataTable& t, bool fixed6) {
    if (c.format == "json") return table_to_json(t).dump(2) + "\n";
    std::ostringstream os;
    write_csv(os, t, fixed6);
    return os.str();
}

std::string named_text(const Config& c, const NamedValues& values) {
    if (c.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [k, v] : values) j[k] = v;
        return j.dump(2) + "\n";
    }
    std::string text = "quantity,value\n";
    for (const auto& [k, v] : values) text += k + "," + fmt(v) + "\n";
    return text;
}

std::string discrepancy_text(const Config& c, const std::vector<DiscrepancyRow>& rows) {
    if (c.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back({{"quantity", r.quantity}, {"a", r.a}, {"b", r.b}, {"printed", r.printed},
                           {"oracle", r.oracle}, {"difference", r.printed - r.oracle}});
        }
        return arr.dump(2) + "\n";
    }
    std::string text = "quantity,a,b,printed,oracle,difference\n";
    for (const auto& r : rows) {
        text += r.quantity + "," + (r.a ? std::to_string(r.a) : "") + "," + (r.b ? std::to_string(r.b) : "") + "," +
                fmt(r.printed) + "," + fmt(r.oracle) + "," + fmt(r.printed - r.oracle) + "\n";
    }
    return text;
}

int cmd_reproduce(const Config& c, std::ostream& out) {
    require_format(c);
    const PairConcurrenceSource source = parse_source(c.source, PairConcurrenceSource::printed_closed_form);
    const std::string& t = c.target;
    std::string text;
    if (t == "table1") {
        text = table_text(c, table1(source), true);
    } else if (t == "table2") {
        text = table_text(c, table2(source), true);
    } else if (t == "table3") {
        text = table_text(c, table3(source), true);
    } else if (t == "fig1") {
        text = table_text(c, fig1_series(), false);
    } else if (t == "fig2") {
        text = table_text(c, fig2(c.points, source), false);
    } else if (t == "fig3") {
        text = table_text(c, fig3(c.points, source), false);
    } else if (t == "fig4") {
        text = table_text(c, fig4(c.points, source), false);
    } else if (t == "example1") {
        SiteSet sites{0, 1, 2};
        if (!c.sites.empty()) {
            if (c.sites.size() != 3) throw InputError("example1 takes three sites P1,P2,P3");
            sites.clear();
            for (int s : c.sites) sites.push_back(to_zero_based(s, 4));
        }
        text = named_text(c, example1_named(sites));
    } else if (t == "discrepancy") {
        text = discrepancy_text(c, discrepancy_rows(c.n, 4));
    } else {
        throw InputError("unknown target '" + t +
                         "' (table1, table2, table3, fig1, fig2, fig3, fig4, example1, discrepancy)");
    }
    emit(c, text, out);
    return ExitCode::ok;
}

// ---- pre -------------------------------------------------------------------

int cmd_pre(const Config& c, std::ostream& out) {
    require_format(c);
    const bool primed = c.kind == "upsilon-prime";
    if (!primed && c.kind != "upsilon") throw InputError("--kind must be upsilon or upsilon-prime");
    if (c.cut.empty()) throw InputError(primed ? "pre needs --cut m" : "pre needs --cut m,a,b");
    if (primed ? c.cut.size() != 1 : c.cut.size() != 3) {
        throw InputError(primed ? "upsilon-prime takes --cut m" : "upsilon takes --cut m,a,b");
    }

    std::optional<LoadedState> st;
    if (!c.state_file.empty() || !c.preset.empty()) st = load_state(c);
    // An explicit state is always evaluated through the state pipeline.
    const PairConcurrenceSource source =
        st ? parse_source(c.source.empty() ? "oracle" : c.source, PairConcurrenceSource::effective_qubit_oracle)
           : parse_source(c.source, PairConcurrenceSource::printed_closed_form);
    if (st && source == PairConcurrenceSource::printed_closed_form) {
        throw InputError("printed closed forms apply only to the uniform W state; omit --state/--preset");
    }
    const int n = st ? st->psi.sites() : c.n;
    const int m = c.cut[0];
    const int a = primed ? m : c.cut[1];
    const int b = primed ? n : c.cut[2];
    const BlockCut cut = BlockCut::make(n, m, a, b);

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    std::string text = "kind,n,m,a,b,q,s,source,value\n";
    for (double q : c.q) {
        for (double s : c.s) {
            const UEParams params = UEParams::make(q, s);
            double v = 0.0;
            if (st) {
                v = primed ? upsilon_prime_of_state(st->psi, m, params) : upsilon_of_state(st->psi, cut, params);
            } else {
                v = primed ? upsilon_prime(n, m, params, source) : upsilon(cut, params, source);
            }
            const std::string src(to_string(source));
            text += c.kind + "," + std::to_string(n) + "," + std::to_string(m) + "," +
                    (primed ? "" : std::to_string(a)) + "," + (primed ? "" : std::to_string(b)) + "," + fmt(q) + "," +
                    fmt(s) + "," + src + "," + fmt(v) + "\n";
            nlohmann::ordered_json j;
            j["kind"] = c.kind;
            j["n"] = n;
            j["m"] = m;
            if (!primed) {
                j["a"] = a;
                j["b"] = b;
            }
            j["q"] = q;
            j["s"] = s;
            j["source"] = src;
            j["value"] = v;
            arr.push_back(j);
        }
    }
    emit(c, c.format == "json" ? arr.dump(2) + "\n" : text, out);
    return ExitCode::ok;
}

void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--state", c.state_file, "GW state JSON file");
    sub->add_option("--preset", c.preset, "example1 | uniform-w N")->expected(1, 2);
    sub->add_option("--q", c.q, "q values")->delimiter(',');
    sub->add_option("--s", c.s, "s values")->delimiter(',');
    sub->add_option("--format", c.format, "csv | json");
    sub->add_option("--out", c.out_path, "output file (default stdout)");
    sub->add_option("--source", c.source, "printed | oracle");
    sub->add_option("--seed", c.seed, "seed for randomized suites");
    sub->add_option("--sites", c.sites, "one-based sites")->delimiter(',');
    sub->add_option("--cut", c.cut, "m or m,a,b")->delimiter(',');
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Unified-(q,s) entanglement and monogamy of generalized W-class states", "gw"};
    app.require_subcommand(1);

    CLI::App* measure = app.add_subcommand("measure", "concurrences and unified-(q,s) entanglement of a state");
    add_common(measure, c);
    measure->add_flag("--pairs", c.pairs, "focus block against the rest and against each block");
    measure->add_option("--partition", c.partition, "blocks like 1|2,3|4 (one-based)");
    measure->add_option("--focus", c.focus, "one-based focus block");

    CLI::App* check = app.add_subcommand("check", "evaluate a monogamy inequality or bound");
    add_common(check, c);
    check->set_help_flag("--help", "print this help");  // --h is the h parameter
    check->add_option("--theorem", c.theorem, "2|3|4|5|6|7|subadditivity|pre")->required();
    check->add_option("--partition", c.partition, "blocks like 1|2,3|4 (one-based)");
    check->add_option("--focus", c.focus, "one-based focus block");
    check->add_option("--alpha", c.alpha, "alpha values")->delimiter(',');
    check->add_option("--beta", c.beta, "beta values")->delimiter(',');
    check->add_option("--mu", c.mu, "mu (list per step for the chained bound)")->delimiter(',');
    check->add_option("--h", c.h, "h (list per step for the chained bound)")->delimiter(',');
    check->add_option("--p-factor", c.p_factor, "tightening factor p")->delimiter(',');
    check->add_option("--k", c.k, "split index of the chained bound");
    check->add_option("--random", c.random, "run the randomized suite on N states");

    CLI::App* reproduce = app.add_subcommand("reproduce", "regenerate a published table, figure series or example");
    reproduce->add_option("target", c.target, "table1|table2|table3|fig1|fig2|fig3|fig4|example1|discrepancy")
        ->required();
    reproduce->add_option("--source", c.source, "printed | oracle (default printed)");
    reproduce->add_option("--format", c.format, "csv | json");
    reproduce->add_option("--out", c.out_path, "output file (default stdout)");
    reproduce->add_option("--points", c.points, "q samples for fig2-fig4");
    reproduce->add_option("--sites", c.sites, "example1 sites P1,P2,P3 (one-based)")->delimiter(',');
    reproduce->add_option("--n", c.n, "W state size for discrepancy");
    reproduce->add_option("--seed", c.seed, "accepted for uniformity; unused");

    CLI::App* pre = app.add_subcommand("pre", "partition-dependent residual entanglement");
    add_common(pre, c);
    pre->add_option("--kind", c.kind, "upsilon | upsilon-prime");
    pre->add_option("--n", c.n, "W state size when no state is given");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::input_error;
    }

    try {
        if (*measure) return cmd_measure(c, out);
        if (*check) return cmd_check(c, out, err);
        if (*reproduce) return cmd_reproduce(c, out);
        if (*pre) return cmd_pre(c, out);
    } catch (const HypothesisError& e) {
        err << "refused: hypothesis " << e.hypothesis() << ": " << e.what() << "\n";
        return ExitCode::hypothesis_refusal;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::input_error;
    }
    return ExitCode::input_error;
}

}  // namespace gwcli
