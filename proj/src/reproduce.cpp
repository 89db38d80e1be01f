#include "gwmono/reproduce.hpp"

#include <cmath>
#include <cstdio>

#include "gwmono/errors.hpp"

namespace gwmono {

GWState example1_state() {
    return make_gw_state(4, 2, {{std::sqrt(0.5)}, {0.5}, {0.4}, {0.3}});
}

Example1Values example1_values(const SiteSet& sites) {
    if (sites.size() != 3) throw InputError("example needs three sites P1, P2, P3");
    const PureStateVector psi = to_state_vector(example1_state());
    const Partition part = Partition::make(4, {{sites[0]}, {sites[1]}, {sites[2]}});
    const FocusConcurrences c = focus_concurrences(psi, part, 0);
    const UEParams params = UEParams::make(2.0, 1.0);
    Example1Values v{};
    v.c_whole = std::sqrt(c.whole_sq);
    v.c12 = std::sqrt(c.pair_sq[0]);
    v.c13 = std::sqrt(c.pair_sq[1]);
    v.u_whole = g_qs(c.whole_sq, params);
    v.u12 = g_qs(c.pair_sq[0], params);
    v.u13 = g_qs(c.pair_sq[1], params);
    return v;
}

NamedValues example1_named(const SiteSet& sites) {
    const Example1Values v = example1_values(sites);
    return {{"C(P1|P2P3)", v.c_whole}, {"C(P1P2)", v.c12},     {"C(P1P3)", v.c13},
            {"U21(P1|P2P3)", v.u_whole}, {"U21(P1P2)", v.u12}, {"U21(P1P3)", v.u13}};
}

DataTable fig1_series(double step, double mu, double h, std::vector<double> factors) {
    if (!(step > 0.0)) throw InputError("alpha step must be positive");
    const Example1Values v = example1_values();
    DataTable t;
    t.source = "oracle";
    t.header = {"alpha", "exact"};
    for (double p : factors) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "bound_p%g", p);
        t.header.emplace_back(buf);
    }
    t.header.emplace_back("bound_gamma2");
    const int count = static_cast<int>(std::floor(3.0 / step + 1e-9));
    for (int i = 0; i <= count; ++i) {
        const double alpha = 2.0 + i * step;
        std::vector<double> row{alpha, std::pow(v.u_whole, alpha)};
        for (double p : factors) row.push_back(tighter_bound_theorem4(v.u12, v.u13, mu, h, p, alpha));
        row.push_back(ref34_bound(v.u12, v.u13, mu, h, alpha, 2.0));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace gwmono
