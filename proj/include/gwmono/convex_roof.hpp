#pragma once

#include <vector>

#include "gwmono/random.hpp"
#include "gwmono/states.hpp"
#include "gwmono/unified.hpp"

namespace gwmono {

struct ConvexRoofOptions {
    int decomposition_size = 4;
    int restarts = 20;
    double initial_step = 0.5;
    double step_tolerance = 1e-10;
    long max_evaluations_per_restart = 20000;
};

struct ConvexRoofResult {
    double value = 0.0;
    // false when some restart hit the evaluation cap before its step shrank
    // below step_tolerance; value is still the best point seen.
    bool converged = true;
    long evaluations = 0;
    // best value for decomposition sizes rank, rank+1, ..., decomposition_size
    std::vector<double> best_by_size;
};

// Unified entropy of a normalized two-qubit pure state across its qubit cut.
double two_qubit_pure_ue(const Eigen::Vector4cd& phi, const UEParams& params);

// Numerical convex roof min sum_i p_i U(phi_i) over pure decompositions of a
// two-qubit state of rank <= 2. Decompositions of size K are parametrized as
// phi~_i = sum_j W_ij sqrt(l_j) e_j with W a K x rank isometry (obtained by
// Gram-Schmidt from an unconstrained complex matrix), and minimized by
// multi-start coordinate pattern search. Sizes are swept upward from the rank,
// each warm-started from the previous optimum, so best_by_size never increases.
// Throws InputError when rho is not two-qubit or has rank above 2 (1e-10).
ConvexRoofResult convex_roof_ue_rank2(const DensityMatrix& rho, const UEParams& params, Rng& rng,
                                      const ConvexRoofOptions& options = {});

}  // namespace gwmono
