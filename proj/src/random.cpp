#include "gwmono/random.hpp"

#include <cmath>
#include <numbers>

#include "gwmono/errors.hpp"

namespace gwmono {

int Rng::integer(int lo, int hi) {
    if (hi < lo) throw InputError("empty integer range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(static_cast<std::uint64_t>(uniform() * static_cast<double>(span)) % span);
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    const double u = 1.0 - uniform();
    const double v = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u));
    spare_ = radius * std::sin(2.0 * std::numbers::pi * v);
    has_spare_ = true;
    return radius * std::cos(2.0 * std::numbers::pi * v);
}

GWState random_gw_state(Rng& rng, int n, int d) {
    std::vector<std::vector<Complex>> coeffs(static_cast<std::size_t>(n));
    for (auto& row : coeffs) {
        for (int i = 1; i < d; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            row.emplace_back(re, im);
        }
    }
    return make_gw_state(n, d, coeffs, Normalization::renormalize);
}

Partition random_partition(Rng& rng, int n, const SiteSet& sites, int blocks) {
    if (blocks < 1 || static_cast<std::size_t>(blocks) > sites.size()) {
        throw InputError("cannot split the site set into that many blocks");
    }
    // Fisher-Yates shuffle, then seed one site per block and scatter the rest.
    SiteSet order = sites;
    for (std::size_t i = order.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.integer(0, static_cast<int>(i) - 1));
        std::swap(order[i - 1], order[j]);
    }
    std::vector<SiteSet> out(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t target =
            i < out.size() ? i : static_cast<std::size_t>(rng.integer(0, blocks - 1));
        out[target].push_back(order[i]);
    }
    return Partition::make(n, std::move(out));
}

}  // namespace gwmono
