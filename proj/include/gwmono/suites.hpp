#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gwmono/monogamy.hpp"
#include "gwmono/random.hpp"

namespace gwmono {

// Randomized sweeps of the state-level inequalities over GW states with
// n in [n_min, n_max] sites of local dimension d in [d_min, d_max].
struct SuiteOptions {
    int states = 500;
    std::uint64_t seed = kDefaultSeed;
    int n_min = 3;
    int n_max = 8;
    int d_min = 2;
    int d_max = 4;
    double tolerance = kMarginTolerance;
    std::size_t keep_failures = 5;
};

struct SuiteSummary {
    std::string name;
    long instances = 0;
    long held = 0;
    long violated = 0;
    long refused = 0;
    long skipped = 0;  // not applicable (e.g. reverse form with a vanishing pair term)
    double worst_margin = std::numeric_limits<double>::infinity();
    std::vector<MonogamyReport> failures;  // first few violations, in sample order

    void record(const MonogamyReport& report, double tolerance, std::size_t keep);
};

// (q, s) grid inside region R: s in {0, 1/4, 1/2, 3/4, 1}, five q values from
// the lower edge to min(upper edge, 4.30) at each s.
std::vector<UEParams> region_grid();

// Squared form, then the alpha forms: alpha in {2, 2.5, 3, 5} and the strict
// reverse for alpha in {-1/2, -1} (only where every pair UE exceeds 1e-6).
std::vector<SuiteSummary> run_block_monogamy_suite(const SuiteOptions& options);

// Two-site bounds at q = 2, beta in {0, 1/4, 1/2, 3/4, 1}, s in {1/2, 3/4, 1},
// plus the subadditivity sandwich, on random site pairs.
std::vector<SuiteSummary> run_two_site_suite(const SuiteOptions& options);

}  // namespace gwmono
