#include "gwmono/unified.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gwmono/errors.hpp"

namespace gwmono {

namespace {

constexpr double kDomainSlack = 1e-12;

double power_sum(std::span<const double> eigenvalues, double q) {
    double t = 0.0;
    for (double l : eigenvalues) {
        if (l > 0.0) t += std::pow(l, q);
    }
    return t;
}

double clamp_unit(double x, const char* what) {
    if (!(x >= -kDomainSlack && x <= 1.0 + kDomainSlack)) {
        throw InputError(std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
    }
    return std::min(1.0, std::max(0.0, x));
}

}  // namespace

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::generic: return "generic";
        case Regime::q_near_1: return "q_near_1";
        case Regime::s_near_0: return "s_near_0";
        case Regime::s_near_1: return "s_near_1";
    }
    return "unknown";
}

UEParams UEParams::make(double q, double s) {
    if (!(q > 0.0) || !std::isfinite(q)) throw InputError("q must be positive and finite");
    if (!(s >= 0.0) || !std::isfinite(s)) throw InputError("s must be non-negative and finite");
    return UEParams(q, s);
}

Regime UEParams::regime() const noexcept {
    if (std::abs(q_ - 1.0) < kRegimeThreshold) return Regime::q_near_1;
    if (s_ < kRegimeThreshold) return Regime::s_near_0;
    if (std::abs(s_ - 1.0) < kRegimeThreshold) return Regime::s_near_1;
    return Regime::generic;
}

bool UEParams::in_region_r() const { return gwmono::in_region_r(*this); }

bool UEParams::in_closed_form_domain() const { return q_ >= 1.0 && s_ >= 0.0 && s_ <= 1.0 && q_ * s_ <= 3.0; }

double region_lower_q(double s) {
    constexpr double kSingular = 2.0 / 3.0;
    if (std::abs(s - kSingular) < 1e-9) return 0.75;
    return (std::sqrt(9.0 * s * s - 24.0 * s + 28.0) - (2.0 + 3.0 * s)) / (2.0 * (2.0 - 3.0 * s));
}

double region_upper_q(double s) {
    if (s == 0.0) return std::numeric_limits<double>::infinity();
    return (5.0 + std::sqrt(13.0)) / (2.0 * s);
}

bool in_region_r(const UEParams& params) {
    const double q = params.q();
    const double s = params.s();
    if (s < 0.0 || s > 1.0) return false;
    return region_lower_q(s) <= q && q <= region_upper_q(s);
}

double unified_entropy_generic(std::span<const double> eigenvalues, double q, double s) {
    const double t = power_sum(eigenvalues, q);
    return std::expm1(s * std::log(t)) / ((1.0 - q) * s);
}

double renyi_entropy(std::span<const double> eigenvalues, double q) {
    return std::log(power_sum(eigenvalues, q)) / (1.0 - q);
}

double tsallis_entropy(std::span<const double> eigenvalues, double q) {
    return (power_sum(eigenvalues, q) - 1.0) / (1.0 - q);
}

double von_neumann_entropy(std::span<const double> eigenvalues) {
    double h = 0.0;
    for (double l : eigenvalues) {
        if (l > 0.0) h -= l * std::log(l);
    }
    return h;
}

double unified_entropy_of_spectrum(std::span<const double> eigenvalues, const UEParams& params) {
    switch (params.regime()) {
        case Regime::q_near_1: return von_neumann_entropy(eigenvalues);
        case Regime::s_near_0: return renyi_entropy(eigenvalues, params.q());
        case Regime::s_near_1: return tsallis_entropy(eigenvalues, params.q());
        case Regime::generic: break;
    }
    return unified_entropy_generic(eigenvalues, params.q(), params.s());
}

double unified_entropy(const DensityMatrix& rho, const UEParams& params) {
    const auto ev = spectrum(rho);
    return unified_entropy_of_spectrum(ev, params);
}

double f_qs(double x, const UEParams& params) {
    x = clamp_unit(x, "concurrence");
    if (x == 0.0) return 0.0;
    // Schmidt weights (1 +- r)/2; the small one is rewritten to avoid cancellation.
    const double r = std::sqrt((1.0 - x) * (1.0 + x));
    const double big = 0.5 * (1.0 + r);
    const double small = 0.5 * x * x / (1.0 + r);
    const double weights[2] = {big, small};
    return unified_entropy_of_spectrum(weights, params);
}

double g_qs(double y, const UEParams& params) {
    y = clamp_unit(y, "squared concurrence");
    return f_qs(std::sqrt(y), params);
}

double ue_pure(const PureStateVector& psi, const SiteSet& side_a, const UEParams& params) {
    const SiteSet side = normalized_sites(side_a, psi.sites());
    if (side.size() == static_cast<std::size_t>(psi.sites())) {
        throw InputError("bipartition needs a non-empty complement");
    }
    const auto ev = schmidt_spectrum(psi, side);
    return unified_entropy_of_spectrum(ev, params);
}

double ue_gw_reduced(double c, const UEParams& params) { return f_qs(c, params); }

}  // namespace gwmono
