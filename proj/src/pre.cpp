#include "gwmono/pre.hpp"

#include <cmath>
#include <string>

#include "gwmono/errors.hpp"

namespace gwmono {

namespace {

void require_region(const UEParams& params) {
    if (!params.in_region_r()) {
        throw HypothesisError("in_region_R", "q=" + std::to_string(params.q()) + ", s=" + std::to_string(params.s()) +
                                                 " lies outside the region where U = f(C)");
    }
}

double g2(double c_sq, const UEParams& params) {
    const double g = g_qs(std::min(1.0, c_sq), params);
    return g * g;
}

double oracle_sq(const PureStateVector& psi, const SiteSet& p, const SiteSet& q) {
    if (p.empty() || q.empty()) return 0.0;
    const double c = gw_block_concurrence_oracle(psi, p, q);
    return c * c;
}

double top_sq(const PureStateVector& psi, const BlockCut& cut) {
    const double c = concurrence_pure(psi, cut.first());
    return c * c;
}

void require_sites(const PureStateVector& psi, int n) {
    if (psi.sites() != n) throw InputError("state has " + std::to_string(psi.sites()) + " sites, cut needs " +
                                           std::to_string(n));
}

std::string a_label(int a, int b) { return "Upsilon(q," + std::to_string(a) + "," + std::to_string(b) + ")"; }
std::string m_label(int m) { return "Upsilon'(q," + std::to_string(m) + ")"; }

}  // namespace

CutConcurrences cut_concurrences(const BlockCut& cut, PairConcurrenceSource source) {
    CutConcurrences c;
    if (source == PairConcurrenceSource::printed_closed_form) {
        c.top_sq = printed_pair_concurrence_sq(cut, PrintedPair::top_cut);
        c.p11_p21 = printed_pair_concurrence_sq(cut, PrintedPair::p11_p21);
        c.p12_p21 = printed_pair_concurrence_sq(cut, PrintedPair::p12_p21);
        c.p11_p22 = printed_pair_concurrence_sq(cut, PrintedPair::p11_p22);
        c.p12_p22 = printed_pair_concurrence_sq(cut, PrintedPair::p12_p22);
        c.qubit_pair = cut.n >= 2 ? printed_pair_concurrence_sq(cut, PrintedPair::qubit_pair) : 0.0;
        return c;
    }
    const PureStateVector psi = to_state_vector(uniform_w_state(cut.n));
    c.top_sq = top_sq(psi, cut);
    c.p11_p21 = oracle_sq(psi, cut.p11(), cut.p21());
    c.p12_p21 = oracle_sq(psi, cut.p12(), cut.p21());
    c.p11_p22 = oracle_sq(psi, cut.p11(), cut.p22());
    c.p12_p22 = oracle_sq(psi, cut.p12(), cut.p22());
    c.qubit_pair = oracle_sq(psi, {0}, {cut.n - 1});
    return c;
}

double upsilon(const CutConcurrences& c, const UEParams& params) {
    require_region(params);
    return g2(c.top_sq, params) - g2(c.p11_p21, params) - g2(c.p12_p21, params) - g2(c.p11_p22, params) -
           g2(c.p12_p22, params);
}

double upsilon(const BlockCut& cut, const UEParams& params, PairConcurrenceSource source) {
    require_region(params);
    return upsilon(cut_concurrences(cut, source), params);
}

double upsilon_prime(int n, int m, const UEParams& params, PairConcurrenceSource source) {
    if (!(1 <= m && m <= n - 1)) throw InputError("upsilon' needs 1 <= m <= n - 1");
    require_region(params);
    const CutConcurrences c = cut_concurrences(BlockCut::make(n, m, m, n), source);
    return g2(c.top_sq, params) - static_cast<double>(m) * (n - m) * g2(c.qubit_pair, params);
}

PREResult upsilon_result(const BlockCut& cut, const UEParams& params, PairConcurrenceSource source) {
    return {PREKind::upsilon, cut, params, upsilon(cut, params, source), source};
}

PREResult upsilon_prime_result(int n, int m, const UEParams& params, PairConcurrenceSource source) {
    const double v = upsilon_prime(n, m, params, source);
    return {PREKind::upsilon_prime, BlockCut::make(n, m, m, n), params, v, source};
}

double upsilon_of_state(const PureStateVector& psi, const BlockCut& cut, const UEParams& params) {
    require_region(params);
    require_sites(psi, cut.n);
    return g2(top_sq(psi, cut), params) - g2(oracle_sq(psi, cut.p11(), cut.p21()), params) -
           g2(oracle_sq(psi, cut.p12(), cut.p21()), params) - g2(oracle_sq(psi, cut.p11(), cut.p22()), params) -
           g2(oracle_sq(psi, cut.p12(), cut.p22()), params);
}

double upsilon_prime_of_state(const PureStateVector& psi, int m, const UEParams& params) {
    const int n = psi.sites();
    if (!(1 <= m && m <= n - 1)) throw InputError("upsilon' needs 1 <= m <= n - 1");
    require_region(params);
    const BlockCut cut = BlockCut::make(n, m, m, n);
    double value = g2(top_sq(psi, cut), params);
    for (int i = 0; i < m; ++i) {
        for (int j = m; j < n; ++j) value -= g2(oracle_sq(psi, {i}, {j}), params);
    }
    return value;
}

MonogamyReport monogamy_like_pre_check(const PureStateVector& psi, const BlockCut& cut, const UEParams& params) {
    require_sites(psi, cut.n);
    MonogamyReport r;
    r.inequality_id = "partition_residual_chain";
    r.params = {{"q", params.q()}, {"s", params.s()}, {"n", static_cast<double>(cut.n)},
                {"m", static_cast<double>(cut.m)}, {"a", static_cast<double>(cut.a)},
                {"b", static_cast<double>(cut.b)}};
    r.hypotheses = {{"in_region_R", params.in_region_r(),
                     "q=" + std::to_string(params.q()) + ", s=" + std::to_string(params.s())}};
    if (!params.in_region_r()) return r;

    r.lhs = g2(top_sq(psi, cut), params);
    r.rhs = g2(oracle_sq(psi, cut.p11(), cut.p21()), params) + g2(oracle_sq(psi, cut.p12(), cut.p21()), params) +
            g2(oracle_sq(psi, cut.p11(), cut.p22()), params) + g2(oracle_sq(psi, cut.p12(), cut.p22()), params);
    double qubits = 0.0;
    for (int i = 0; i < cut.m; ++i) {
        for (int j = cut.m; j < cut.n; ++j) qubits += g2(oracle_sq(psi, {i}, {j}), params);
    }
    r.margin = r.lhs - r.rhs;
    r.extra_margins = {{"pairs_over_qubits", r.rhs - qubits}};
    r.diagnostics = {{"qubit_pair_sum", qubits}};
    return r;
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) throw InputError("linspace needs at least one point");
    std::vector<double> out(static_cast<std::size_t>(count));
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    out.back() = hi;
    return out;
}

DataTable upsilon_table(int n, int m, int b, const std::vector<int>& a_values, const std::vector<double>& q_values,
                        double s, PairConcurrenceSource source) {
    if (a_values.empty() || q_values.empty()) throw InputError("empty table grid");
    DataTable t;
    t.source = std::string(to_string(source));
    t.header.push_back("q");
    std::vector<CutConcurrences> cols;
    for (int a : a_values) {
        cols.push_back(cut_concurrences(BlockCut::make(n, m, a, b), source));
        t.header.push_back(a_label(a, b));
    }
    for (double q : q_values) {
        const UEParams params = UEParams::make(q, s);
        std::vector<double> row{q};
        for (const auto& c : cols) row.push_back(upsilon(c, params));
        t.rows.push_back(std::move(row));
    }
    return t;
}

DataTable upsilon_prime_table(int n, const std::vector<int>& m_values, const std::vector<double>& q_values, double s,
                              PairConcurrenceSource source) {
    if (m_values.empty() || q_values.empty()) throw InputError("empty table grid");
    DataTable t;
    t.source = std::string(to_string(source));
    t.header.push_back("q");
    std::vector<CutConcurrences> cols;
    for (int m : m_values) {
        if (!(1 <= m && m <= n - 1)) throw InputError("upsilon' needs 1 <= m <= n - 1");
        cols.push_back(cut_concurrences(BlockCut::make(n, m, m, n), source));
        t.header.push_back(m_label(m));
    }
    for (double q : q_values) {
        const UEParams params = UEParams::make(q, s);
        require_region(params);
        std::vector<double> row{q};
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const int m = m_values[k];
            row.push_back(g2(cols[k].top_sq, params) -
                          static_cast<double>(m) * (n - m) * g2(cols[k].qubit_pair, params));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<double> published_q_values() { return {2.0, 2.1, 2.2, 2.3, 2.4}; }

DataTable table1(PairConcurrenceSource source) {
    return upsilon_table(6, 4, 5, {1, 2, 3, 4}, published_q_values(), 1.0, source);
}

DataTable table2(PairConcurrenceSource source) {
    return upsilon_table(6, 4, 6, {1, 2, 3, 4}, published_q_values(), 1.0, source);
}

DataTable table3(PairConcurrenceSource source) {
    return upsilon_prime_table(6, {1, 2, 3, 4, 5}, published_q_values(), 1.0, source);
}

namespace {

std::vector<double> s1_section(int points) { return linspace(region_lower_q(1.0), region_upper_q(1.0), points); }

}  // namespace

DataTable fig2(int points, PairConcurrenceSource source) {
    return upsilon_table(6, 4, 5, {1, 2, 3, 4}, s1_section(points), 1.0, source);
}

DataTable fig3(int points, PairConcurrenceSource source) {
    return upsilon_table(6, 4, 6, {1, 2, 3, 4}, s1_section(points), 1.0, source);
}

DataTable fig4(int points, PairConcurrenceSource source) {
    return upsilon_prime_table(6, {1, 2, 3, 4, 5}, s1_section(points), 1.0, source);
}

std::vector<DiscrepancyRow> discrepancy_rows(int n, int m) {
    std::vector<DiscrepancyRow> rows;
    const CutConcurrences top_p = cut_concurrences(BlockCut::make(n, m, m, n), PairConcurrenceSource::printed_closed_form);
    const CutConcurrences top_o = cut_concurrences(BlockCut::make(n, m, m, n), PairConcurrenceSource::effective_qubit_oracle);
    rows.push_back({"C2_top_cut", m, n, top_p.top_sq, top_o.top_sq});
    rows.push_back({"C2_qubit_pair", 0, 0, top_p.qubit_pair, top_o.qubit_pair});
    for (int b = m + 1; b <= n; ++b) {
        for (int a = 1; a <= m; ++a) {
            const BlockCut cut = BlockCut::make(n, m, a, b);
            const CutConcurrences p = cut_concurrences(cut, PairConcurrenceSource::printed_closed_form);
            const CutConcurrences o = cut_concurrences(cut, PairConcurrenceSource::effective_qubit_oracle);
            rows.push_back({"C2_P11P21", a, b, p.p11_p21, o.p11_p21});
            rows.push_back({"C2_P12P21", a, b, p.p12_p21, o.p12_p21});
            rows.push_back({"C2_P11P22", a, b, p.p11_p22, o.p11_p22});
            rows.push_back({"C2_P12P22", a, b, p.p12_p22, o.p12_p22});
        }
    }
    return rows;
}

}  // namespace gwmono
