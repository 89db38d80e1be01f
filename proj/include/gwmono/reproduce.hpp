#pragma once

#include "gwmono/monogamy.hpp"
#include "gwmono/pre.hpp"
#include "gwmono/states.hpp"

namespace gwmono {

// 0.3|0001> + 0.4|0010> + 0.5|0100> + sqrt(0.5)|1000>
GWState example1_state();

// Three single-site blocks P1, P2, P3 of the four-qubit example state, with the
// remaining site traced out. Concurrences come from the partial trace and the
// effective-qubit oracle; U is g_{2,1}(C^2).
struct Example1Values {
    double c_whole;  // C(rho_{P1|P2P3})
    double c12;
    double c13;
    double u_whole;
    double u12;
    double u13;
};

Example1Values example1_values(const SiteSet& sites = {0, 1, 2});
NamedValues example1_named(const SiteSet& sites = {0, 1, 2});

// alpha sweep on [2, 5]: exact U^alpha(P1|P2P3), the tightened bound at each
// p in `factors`, and the gamma = 2 earlier bound, for the example values.
DataTable fig1_series(double step = 0.05, double mu = 4.0, double h = 1.0, std::vector<double> factors = {2.6, 1.8});

}  // namespace gwmono
