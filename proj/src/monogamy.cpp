#include "gwmono/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gwmono/errors.hpp"

namespace gwmono {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

Hypothesis region_hypothesis(const UEParams& params) {
    return {"in_region_R", params.in_region_r(),
            "q=" + fmt(params.q()) + ", s=" + fmt(params.s()) + ", need " + fmt(region_lower_q(params.s())) +
                " <= q <= " + fmt(region_upper_q(params.s())) + " and 0 <= s <= 1"};
}

Hypothesis closed_form_hypothesis(const UEParams& params) {
    // Informational: the older parameter set q >= 1, 0 <= s <= 1, qs <= 3.
    return {"closed_form_domain", true,
            params.in_closed_form_domain() ? "q >= 1, 0 <= s <= 1, qs <= 3 also holds"
                                           : "outside q >= 1, 0 <= s <= 1, qs <= 3 (region R only)"};
}

MonogamyReport finish(MonogamyReport r) {
    r.margin = r.direction == Direction::at_least ? r.lhs - r.rhs : r.rhs - r.lhs;
    return r;
}

void require_oracle(PairConcurrenceSource source) {
    if (source != PairConcurrenceSource::effective_qubit_oracle) {
        throw InputError("printed closed forms exist only for W-state block cuts; use the oracle source");
    }
}

double ue_from_sq(double c_sq, const UEParams& params) { return g_qs(std::min(1.0, c_sq), params); }

// Squared concurrence of a block against a union of blocks.
double block_vs_union_sq(const PureStateVector& psi, const SiteSet& block, const SiteSet& others) {
    SiteSet both = block;
    both.insert(both.end(), others.begin(), others.end());
    double c = 0.0;
    if (both.size() == static_cast<std::size_t>(psi.sites())) {
        c = concurrence_pure(psi, block);
    } else {
        c = gw_block_concurrence_oracle(psi, block, others);
    }
    return c * c;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::refused: return "refused";
    }
    return "unknown";
}

bool MonogamyReport::hypotheses_ok() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.ok; });
}

Verdict MonogamyReport::verdict(double tolerance) const {
    if (!hypotheses_ok()) return Verdict::refused;
    const bool main_ok = strict ? margin > 0.0 : margin >= -tolerance;
    const bool extra_ok = std::all_of(extra_margins.begin(), extra_margins.end(),
                                      [&](const auto& m) { return m.second >= -tolerance; });
    return main_ok && extra_ok ? Verdict::holds : Verdict::violated;
}

FocusConcurrences focus_concurrences(const PureStateVector& psi, const Partition& partition, std::size_t focus) {
    if (partition.sites() != psi.sites()) throw InputError("partition and state disagree on the site count");
    if (partition.size() < 2) throw InputError("monogamy needs at least two blocks");
    if (focus >= partition.size()) throw InputError("focus block index out of range");

    FocusConcurrences out;
    const SiteSet& block = partition.block(focus);
    out.whole_is_pure = partition.covers_all_sites();
    out.whole_sq = block_vs_union_sq(psi, block, partition.union_except(focus));
    for (std::size_t k = 0; k < partition.size(); ++k) {
        if (k == focus) continue;
        const double c = gw_block_concurrence_oracle(psi, block, partition.block(k));
        out.pair_sq.push_back(c * c);
    }
    return out;
}

MonogamyReport check_squared_monogamy(const PureStateVector& psi, const Partition& partition, std::size_t focus,
                                      const UEParams& params, PairConcurrenceSource source) {
    require_oracle(source);
    const FocusConcurrences c = focus_concurrences(psi, partition, focus);
    MonogamyReport r = check_squared_monogamy(c, params);
    if (c.whole_is_pure) {
        // Entropy route for the pure cut must agree with g(C^2).
        const double entropy_route = ue_pure(psi, partition.block(focus), params);
        const double formula_route = ue_from_sq(c.whole_sq, params);
        r.diagnostics.emplace_back("lhs_entropy_route", entropy_route * entropy_route);
        if (std::abs(entropy_route * entropy_route - r.lhs) > 1e-9) {
            throw std::logic_error("pure-cut UE disagrees between entropy route " + fmt(entropy_route) +
                                   " and g(C^2) route " + fmt(formula_route));
        }
    }
    return r;
}

MonogamyReport check_squared_monogamy(const FocusConcurrences& c, const UEParams& params) {
    MonogamyReport r;
    r.inequality_id = "squared_ue_monogamy";
    r.hypotheses = {region_hypothesis(params), closed_form_hypothesis(params)};
    r.params = {{"q", params.q()}, {"s", params.s()}};
    const double whole = ue_from_sq(c.whole_sq, params);
    r.lhs = whole * whole;
    for (double p : c.pair_sq) {
        const double u = ue_from_sq(p, params);
        r.rhs += u * u;
    }
    r.diagnostics.emplace_back("whole_c_sq", c.whole_sq);
    return finish(std::move(r));
}

MonogamyReport check_alpha_monogamy(const PureStateVector& psi, const Partition& partition, std::size_t focus,
                                    const UEParams& params, double alpha, PairConcurrenceSource source) {
    require_oracle(source);
    return check_alpha_monogamy(focus_concurrences(psi, partition, focus), params, alpha);
}

MonogamyReport check_alpha_monogamy(const FocusConcurrences& c, const UEParams& params, double alpha) {
    MonogamyReport r;
    r.inequality_id = "alpha_power_ue_monogamy";
    r.params = {{"q", params.q()}, {"s", params.s()}, {"alpha", alpha}};
    r.hypotheses = {region_hypothesis(params), closed_form_hypothesis(params),
                    {"alpha_admissible", alpha >= 2.0 || alpha <= 0.0,
                     "alpha=" + fmt(alpha) + ", need alpha >= 2 or alpha <= 0"}};
    const bool reverse = alpha <= 0.0;
    if (reverse) {
        r.direction = Direction::at_most;
        r.strict = true;
        r.hypotheses.push_back({"two_or_more_pair_terms", c.pair_sq.size() >= 2,
                                "strict reverse inequality needs at least three blocks"});
    }
    const double whole = ue_from_sq(c.whole_sq, params);
    r.lhs = std::pow(whole, alpha);
    for (double p : c.pair_sq) {
        const double u = ue_from_sq(p, params);
        if (reverse && !(u > 0.0)) {
            throw HypothesisError("pair_ue_positive", "a pair UE is zero; its power alpha=" + fmt(alpha) +
                                                          " is undefined");
        }
        r.rhs += std::pow(u, alpha);
    }
    return finish(std::move(r));
}

double tighter_bound_formula(double u12, double u13, double mu, double h, double p, double alpha) {
    const double e = alpha / 2.0 - 1.0;
    const double pe = std::pow(p, e);
    return pe * std::pow(u12, alpha) + (std::pow(mu + h, alpha / 2.0) - pe * std::pow(h, alpha / 2.0)) *
                                           std::pow(u13, alpha);
}

std::vector<Hypothesis> tighter_bound_hypotheses(double u12, double u13, double mu, double h, double p,
                                                 double alpha) {
    std::vector<Hypothesis> out;
    out.push_back({"mu_at_least_1", mu >= 1.0, "mu=" + fmt(mu)});
    out.push_back({"h_at_least_1", h >= 1.0, "h=" + fmt(h)});
    out.push_back({"alpha_at_least_2", alpha >= 2.0, "alpha=" + fmt(alpha)});
    const double u12sq = u12 * u12;
    const double u13sq = u13 * u13;
    out.push_back({"u12_sq_dominates", u12sq >= h * u13sq,
                   "U12^2=" + fmt(u12sq) + " vs h*U13^2=" + fmt(h * u13sq)});
    const double ceiling = u12sq > 0.0 ? 1.0 + mu * u13sq / u12sq : INFINITY;
    out.push_back({"tightening_factor_range", p >= 1.0 && p <= ceiling,
                   "p=" + fmt(p) + ", need 1 <= p <= " + fmt(ceiling)});
    return out;
}

namespace {

void throw_first_failure(const std::vector<Hypothesis>& hs) {
    for (const auto& h : hs) {
        if (!h.ok) throw HypothesisError(h.name, h.detail);
    }
}

}  // namespace

double tighter_bound_theorem4(double u12, double u13, double mu, double h, double p, double alpha) {
    throw_first_failure(tighter_bound_hypotheses(u12, u13, mu, h, p, alpha));
    return tighter_bound_formula(u12, u13, mu, h, p, alpha);
}

double ref34_bound(double u12, double u13, double mu, double h, double alpha, double gamma) {
    throw_first_failure({{"gamma_at_least_1", gamma >= 1.0, "gamma=" + fmt(gamma)},
                         {"alpha_at_least_gamma", alpha >= gamma, "alpha=" + fmt(alpha) + ", gamma=" + fmt(gamma)},
                         {"mu_at_least_1", mu >= 1.0, "mu=" + fmt(mu)},
                         {"h_at_least_1", h >= 1.0, "h=" + fmt(h)}});
    const double x = alpha / gamma;
    return std::pow(u12, alpha) + (std::pow(mu + h, x) - std::pow(h, x)) * std::pow(u13, alpha);
}

MonogamyReport check_tighter_monogamy(double u_whole, double u12, double u13, double mu, double h, double p,
                                      double alpha) {
    MonogamyReport r;
    r.inequality_id = "tighter_alpha_power_bound";
    r.params = {{"mu", mu}, {"h", h}, {"tightening_factor", p}, {"alpha", alpha}};
    r.hypotheses = tighter_bound_hypotheses(u12, u13, mu, h, p, alpha);
    const double lhs_sq = u_whole * u_whole;
    const double premise = u12 * u12 + mu * u13 * u13;
    r.hypotheses.push_back({"weighted_squared_monogamy", lhs_sq >= premise,
                            "U^2(P1|P2P3)=" + fmt(lhs_sq) + " vs U12^2 + mu U13^2=" + fmt(premise)});
    r.lhs = std::pow(u_whole, alpha);
    r.rhs = tighter_bound_formula(u12, u13, mu, h, p, alpha);
    if (mu >= 1.0 && h >= 1.0 && alpha >= 2.0) {
        r.diagnostics.emplace_back("ref34_bound_gamma2", ref34_bound(u12, u13, mu, h, alpha, 2.0));
    }
    return finish(std::move(r));
}

MonogamyReport check_tighter_monogamy(const PureStateVector& psi, const Partition& partition, std::size_t focus,
                                      const UEParams& params, double mu, double h, double p, double alpha) {
    if (partition.size() != 3) throw InputError("the tighter bound is stated for exactly three blocks");
    const FocusConcurrences c = focus_concurrences(psi, partition, focus);
    MonogamyReport r = check_tighter_monogamy(ue_from_sq(c.whole_sq, params), ue_from_sq(c.pair_sq[0], params),
                                              ue_from_sq(c.pair_sq[1], params), mu, h, p, alpha);
    r.hypotheses.insert(r.hypotheses.begin(), region_hypothesis(params));
    r.params.insert(r.params.begin(), {{"q", params.q()}, {"s", params.s()}});
    return r;
}

namespace {

// r = number of blocks including A
int chain_blocks(const ChainedInputs& in) {
    const std::size_t outer = in.pair_ues.size();
    const int r = static_cast<int>(outer) + 1;
    if (r < 4) throw InputError("chained bound needs r >= 4 blocks (at least three outer blocks)");
    if (in.tail_ues.size() != outer) throw InputError("tail_ues must have one entry per outer block");
    const auto steps = static_cast<std::size_t>(r - 2);
    if (in.mu.size() != steps || in.h.size() != steps || in.p.size() != steps) {
        throw InputError("mu, h and p need r - 2 = " + std::to_string(steps) + " entries each");
    }
    if (in.k < 1 || in.k > r - 3) throw InputError("k must satisfy 1 <= k <= r - 3");
    return r;
}

}  // namespace

double chained_bound_formula(const ChainedInputs& in) {
    const int r = chain_blocks(in);
    const int k = in.k;
    const double a = in.alpha;
    const double e = a / 2.0 - 1.0;
    // one-based accessors
    auto u = [&](int i) { return std::pow(in.pair_ues[static_cast<std::size_t>(i - 1)], a); };
    auto pe = [&](int t) { return std::pow(in.p[static_cast<std::size_t>(t - 1)], e); };
    auto gamma = [&](int t) {
        const auto i = static_cast<std::size_t>(t - 1);
        return std::pow(in.mu[i] + in.h[i], a / 2.0) - pe(t) * std::pow(in.h[i], a / 2.0);
    };

    double value = pe(1) * u(1);
    double gamma_prefix = 1.0;  // Gamma_1 ... Gamma_{i-1}
    for (int i = 2; i <= k; ++i) {
        gamma_prefix *= gamma(i - 1);
        value += gamma_prefix * pe(i) * u(i);
    }
    const double gamma_k = gamma_prefix * gamma(k);  // Gamma_1 ... Gamma_k
    value += gamma_k * gamma(k + 1) * u(k + 1);
    double p_prefix = 1.0;  // p_{k+1} ... p_{j-1}, each to the power e
    for (int j = k + 2; j <= r - 2; ++j) {
        p_prefix *= pe(j - 1);
        value += gamma_k * p_prefix * gamma(j) * u(j);
    }
    p_prefix = 1.0;
    for (int t = k + 1; t <= r - 2; ++t) p_prefix *= pe(t);
    value += gamma_k * p_prefix * u(r - 1);
    return value;
}

std::vector<Hypothesis> chained_bound_hypotheses(const ChainedInputs& in) {
    const int r = chain_blocks(in);
    std::vector<Hypothesis> out;
    out.push_back({"alpha_at_least_2", in.alpha >= 2.0, "alpha=" + fmt(in.alpha)});
    auto pair_sq = [&](int i) { return std::pow(in.pair_ues[static_cast<std::size_t>(i - 1)], 2); };
    auto tail_sq = [&](int i) { return std::pow(in.tail_ues[static_cast<std::size_t>(i - 1)], 2); };
    for (int t = 1; t <= r - 2; ++t) {
        const auto i = static_cast<std::size_t>(t - 1);
        const std::string tag = "[" + std::to_string(t) + "]";
        const double mu = in.mu[i];
        const double h = in.h[i];
        const double p = in.p[i];
        out.push_back({"mu_at_least_1" + tag, mu >= 1.0, "mu=" + fmt(mu)});
        out.push_back({"h_at_least_1" + tag, h >= 1.0, "h=" + fmt(h)});
        const double pair = pair_sq(t);
        const double tail_next = tail_sq(t + 1);
        const double tail_here = tail_sq(t);
        if (t <= in.k) {
            out.push_back({"pair_dominates_tail" + tag, pair >= h * tail_next,
                           "U^2(AB)=" + fmt(pair) + " vs h U^2(A|rest)=" + fmt(h * tail_next)});
            out.push_back({"weighted_split" + tag, tail_here >= pair + mu * tail_next,
                           "U^2(A|B_t..)=" + fmt(tail_here) + " vs " + fmt(pair + mu * tail_next)});
            const double ceiling = pair > 0.0 ? 1.0 + mu * tail_next / pair : INFINITY;
            out.push_back({"tightening_factor_range" + tag, p >= 1.0 && p <= ceiling,
                           "p=" + fmt(p) + ", need 1 <= p <= " + fmt(ceiling)});
        } else {
            out.push_back({"tail_dominates_pair" + tag, tail_next >= h * pair,
                           "U^2(A|rest)=" + fmt(tail_next) + " vs h U^2(AB)=" + fmt(h * pair)});
            out.push_back({"weighted_split" + tag, tail_here >= mu * pair + tail_next,
                           "U^2(A|B_t..)=" + fmt(tail_here) + " vs " + fmt(mu * pair + tail_next)});
            const double ceiling = tail_next > 0.0 ? mu * pair / tail_next : INFINITY;
            out.push_back({"tightening_factor_range" + tag, p >= 1.0 && p <= ceiling,
                           "p=" + fmt(p) + ", need 1 <= p <= " + fmt(ceiling)});
        }
    }
    return out;
}

double chained_bound_theorem5(const ChainedInputs& in) {
    throw_first_failure(chained_bound_hypotheses(in));
    return chained_bound_formula(in);
}

MonogamyReport check_chained_monogamy(const PureStateVector& psi, const Partition& partition, std::size_t focus,
                                      const UEParams& params, const std::vector<double>& mu,
                                      const std::vector<double>& h, const std::vector<double>& p, int k,
                                      double alpha) {
    if (partition.sites() != psi.sites()) throw InputError("partition and state disagree on the site count");
    if (focus >= partition.size()) throw InputError("focus block index out of range");
    const SiteSet& a = partition.block(focus);
    std::vector<SiteSet> outer;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (i != focus) outer.push_back(partition.block(i));
    }

    ChainedInputs in{{}, {}, mu, h, p, k, alpha};
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const double c = gw_block_concurrence_oracle(psi, a, outer[i]);
        in.pair_ues.push_back(ue_from_sq(c * c, params));
        SiteSet tail;
        for (std::size_t j = i; j < outer.size(); ++j) tail.insert(tail.end(), outer[j].begin(), outer[j].end());
        std::sort(tail.begin(), tail.end());
        in.tail_ues.push_back(ue_from_sq(block_vs_union_sq(psi, a, tail), params));
    }

    MonogamyReport r;
    r.inequality_id = "chained_alpha_power_bound";
    r.params = {{"q", params.q()}, {"s", params.s()}, {"alpha", alpha}, {"k", static_cast<double>(k)}};
    r.hypotheses = chained_bound_hypotheses(in);
    r.hypotheses.insert(r.hypotheses.begin(), region_hypothesis(params));
    r.lhs = std::pow(in.tail_ues.front(), alpha);
    r.rhs = chained_bound_formula(in);
    return finish(std::move(r));
}

namespace {

MonogamyReport beta_report(const char* id, Direction dir, const TwoSiteInputs& in, double beta, double s) {
    MonogamyReport r;
    r.inequality_id = id;
    r.direction = dir;
    r.params = {{"q", 2.0}, {"s", s}, {"beta", beta}};
    r.hypotheses = {{"s_range", s >= 0.5 && s <= 1.0, "s=" + fmt(s) + ", need 1/2 <= s <= 1"},
                    {"beta_range", beta >= 0.0 && beta <= 1.0, "beta=" + fmt(beta) + ", need 0 <= beta <= 1"}};
    if (!r.hypotheses_ok()) return r;

    const UEParams params = UEParams::make(2.0, s);
    const double u_ab = unified_entropy_of_spectrum(in.spectrum_ab, params);
    const double u_a = unified_entropy_of_spectrum(in.spectrum_a, params);
    const double u_b = unified_entropy_of_spectrum(in.spectrum_b, params);
    const double f_ab = f_qs(in.c_ab, params);
    double x = f_ab;
    double y = f_ab;
    for (double c : in.c_a_others) x += f_qs(c, params);
    for (double c : in.c_b_others) y += f_qs(c, params);

    r.lhs = std::pow(u_ab, beta);
    const double xb = std::pow(x, beta);
    const double yb = std::pow(y, beta);
    const double ab = std::pow(u_a, beta);
    const double bb = std::pow(u_b, beta);
    if (dir == Direction::at_least) {
        r.rhs = std::abs(xb - yb);
        r.diagnostics.emplace_back("rhs_entropy_route", std::abs(ab - bb));
    } else {
        r.rhs = xb + yb;
        r.diagnostics.emplace_back("rhs_entropy_route", ab + bb);
    }
    r.diagnostics.emplace_back("X", x);
    r.diagnostics.emplace_back("Y", y);
    r.diagnostics.emplace_back("U_A_entropy", u_a);
    r.diagnostics.emplace_back("U_B_entropy", u_b);
    r.diagnostics.emplace_back("U_AB_entropy", u_ab);
    return finish(std::move(r));
}

}  // namespace

TwoSiteInputs two_site_inputs(const PureStateVector& psi, int site_a, int site_b) {
    const int n = psi.sites();
    if (site_a == site_b) throw InputError("sites A and B must differ");
    normalized_sites({site_a, site_b}, n);
    TwoSiteInputs in;
    in.spectrum_ab = spectrum(reduce(psi, {site_a, site_b}));
    in.spectrum_a = schmidt_spectrum(psi, {site_a});
    in.spectrum_b = schmidt_spectrum(psi, {site_b});
    in.c_ab = gw_block_concurrence_oracle(psi, {site_a}, {site_b});
    for (int c = 0; c < n; ++c) {
        if (c == site_a || c == site_b) continue;
        in.c_a_others.push_back(gw_block_concurrence_oracle(psi, {site_a}, {c}));
        in.c_b_others.push_back(gw_block_concurrence_oracle(psi, {site_b}, {c}));
    }
    return in;
}

MonogamyReport beta_lower_bound_theorem6(const TwoSiteInputs& in, double beta, double s) {
    return beta_report("beta_power_lower_bound", Direction::at_least, in, beta, s);
}

MonogamyReport beta_upper_bound_theorem7(const TwoSiteInputs& in, double beta, double s) {
    return beta_report("beta_power_upper_bound", Direction::at_most, in, beta, s);
}

MonogamyReport beta_lower_bound_theorem6(const PureStateVector& psi, int site_a, int site_b, double beta, double s) {
    return beta_lower_bound_theorem6(two_site_inputs(psi, site_a, site_b), beta, s);
}

MonogamyReport beta_upper_bound_theorem7(const PureStateVector& psi, int site_a, int site_b, double beta, double s) {
    return beta_upper_bound_theorem7(two_site_inputs(psi, site_a, site_b), beta, s);
}

MonogamyReport subadditivity_sandwich(const PureStateVector& psi, const SiteSet& a_in, const SiteSet& b_in,
                                      const UEParams& params) {
    const int n = psi.sites();
    const SiteSet a = normalized_sites(a_in, n);
    const SiteSet b = normalized_sites(b_in, n);
    SiteSet ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    normalized_sites(ab, n);  // rejects overlap

    const double u_a = unified_entropy(reduce(psi, a), params);
    const double u_b = unified_entropy(reduce(psi, b), params);
    const double u_ab = unified_entropy(reduce(psi, ab), params);
    MonogamyReport r;
    r.inequality_id = "unified_entropy_subadditivity";
    r.params = {{"q", params.q()}, {"s", params.s()}};
    r.lhs = u_ab;
    r.rhs = std::abs(u_a - u_b);
    r.extra_margins = {{"upper", u_a + u_b - u_ab}};
    r.diagnostics = {{"U_A", u_a}, {"U_B", u_b}};
    return finish(std::move(r));
}

double lemma5_gap(double x, double h, double p, double m) {
    if (!(x >= h && h >= 0.0)) throw InputError("need x >= h >= 0");
    if (!(m >= 1.0)) throw InputError("need m >= 1");
    if (!(p >= 1.0) || (x > 0.0 && p > 1.0 + 1.0 / x)) throw InputError("need 1 <= p <= 1 + 1/x");
    const double pm = std::pow(p, m - 1.0);
    return std::pow(1.0 + x, m) - pm * std::pow(x, m) - std::pow(1.0 + h, m) + pm * std::pow(h, m);
}

std::pair<double, double> lemma6_check(double x, double y, double beta) {
    if (!(x >= y && y >= 0.0)) throw InputError("need x >= y >= 0");
    if (!(beta >= 0.0 && beta <= 1.0)) throw InputError("need 0 <= beta <= 1");
    const double xb = std::pow(x, beta);
    const double yb = std::pow(y, beta);
    return {std::pow(x - y, beta) - (xb - yb), xb + yb - std::pow(x + y, beta)};
}

}  // namespace gwmono
