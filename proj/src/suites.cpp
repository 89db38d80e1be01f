#include "gwmono/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gwmono/errors.hpp"
#include "gwmono/pre.hpp"

namespace gwmono {

void SuiteSummary::record(const MonogamyReport& report, double tolerance, std::size_t keep) {
    ++instances;
    switch (report.verdict(tolerance)) {
        case Verdict::holds: ++held; break;
        case Verdict::refused: ++refused; return;
        case Verdict::violated:
            ++violated;
            if (failures.size() < keep) failures.push_back(report);
            break;
    }
    worst_margin = std::min(worst_margin, report.margin);
    for (const auto& [name, m] : report.extra_margins) worst_margin = std::min(worst_margin, m);
}

std::vector<UEParams> region_grid() {
    std::vector<UEParams> out;
    for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (double q : linspace(region_lower_q(s), std::min(region_upper_q(s), 4.30), 5)) {
            out.push_back(UEParams::make(q, s));
        }
    }
    return out;
}

namespace {

void check_options(const SuiteOptions& o) {
    if (o.states < 1 || o.n_min < 3 || o.n_max < o.n_min || o.d_min < 2 || o.d_max < o.d_min) {
        throw InputError("invalid suite options");
    }
}

std::string format_alpha(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", a);
    return buf;
}

SiteSet random_subset(Rng& rng, int n, int size) {
    SiteSet all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    for (std::size_t i = all.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.integer(0, static_cast<int>(i) - 1));
        std::swap(all[i - 1], all[j]);
    }
    all.resize(static_cast<std::size_t>(size));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

std::vector<SuiteSummary> run_block_monogamy_suite(const SuiteOptions& options) {
    check_options(options);
    Rng rng(options.seed);
    const std::vector<UEParams> grid = region_grid();
    const std::vector<double> forward = {2.0, 2.5, 3.0, 5.0};
    const std::vector<double> reverse = {-0.5, -1.0};

    std::vector<SuiteSummary> out(1 + forward.size() + reverse.size());
    out[0].name = "squared";
    for (std::size_t i = 0; i < forward.size(); ++i) out[1 + i].name = "alpha=" + format_alpha(forward[i]);
    for (std::size_t i = 0; i < reverse.size(); ++i) {
        out[1 + forward.size() + i].name = "alpha=" + format_alpha(reverse[i]);
    }

    for (int t = 0; t < options.states; ++t) {
        const int n = rng.integer(options.n_min, options.n_max);
        const int d = rng.integer(options.d_min, options.d_max);
        const PureStateVector psi = to_state_vector(random_gw_state(rng, n, d));
        const int size = rng.integer(2, n);
        const SiteSet sites = random_subset(rng, n, size);
        const int blocks = rng.integer(2, std::min(size, 5));
        const Partition part = random_partition(rng, n, sites, blocks);
        const auto focus = static_cast<std::size_t>(rng.integer(0, blocks - 1));
        const FocusConcurrences c = focus_concurrences(psi, part, focus);

        for (const UEParams& params : grid) {
            out[0].record(check_squared_monogamy(c, params), options.tolerance, options.keep_failures);
            for (std::size_t i = 0; i < forward.size(); ++i) {
                out[1 + i].record(check_alpha_monogamy(c, params, forward[i]), options.tolerance,
                                  options.keep_failures);
            }
            bool applicable = c.pair_sq.size() >= 2;
            for (double p : c.pair_sq) applicable = applicable && g_qs(std::min(1.0, p), params) > 1e-6;
            for (std::size_t i = 0; i < reverse.size(); ++i) {
                SuiteSummary& s = out[1 + forward.size() + i];
                if (!applicable) {
                    ++s.skipped;
                    continue;
                }
                s.record(check_alpha_monogamy(c, params, reverse[i]), options.tolerance, options.keep_failures);
            }
        }
    }
    return out;
}

std::vector<SuiteSummary> run_two_site_suite(const SuiteOptions& options) {
    check_options(options);
    Rng rng(options.seed);
    const std::vector<double> betas = {0.0, 0.25, 0.5, 0.75, 1.0};
    const std::vector<double> ss = {0.5, 0.75, 1.0};
    std::vector<SuiteSummary> out(3);
    out[0].name = "beta_lower";
    out[1].name = "beta_upper";
    out[2].name = "subadditivity";

    for (int t = 0; t < options.states; ++t) {
        const int n = rng.integer(options.n_min, options.n_max);
        const int d = rng.integer(options.d_min, options.d_max);
        const PureStateVector psi = to_state_vector(random_gw_state(rng, n, d));
        const SiteSet pair = random_subset(rng, n, 2);
        const bool swap = rng.integer(0, 1) == 1;
        const int a = swap ? pair[1] : pair[0];
        const int b = swap ? pair[0] : pair[1];
        const TwoSiteInputs in = two_site_inputs(psi, a, b);
        for (double s : ss) {
            for (double beta : betas) {
                out[0].record(beta_lower_bound_theorem6(in, beta, s), options.tolerance, options.keep_failures);
                out[1].record(beta_upper_bound_theorem7(in, beta, s), options.tolerance, options.keep_failures);
            }
            out[2].record(subadditivity_sandwich(psi, {a}, {b}, UEParams::make(2.0, s)), options.tolerance,
                          options.keep_failures);
        }
    }
    return out;
}

}  // namespace gwmono
