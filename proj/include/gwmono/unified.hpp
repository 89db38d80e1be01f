#pragma once

#include <span>
#include <string_view>

#include "gwmono/states.hpp"

namespace gwmono {

// Which closed form the unified-(q,s) quantities are evaluated with. Near the
// 0/0 points of the generic formula the exact limit is used instead.
enum class Regime {
    generic,
    q_near_1,  // von Neumann entropy (entanglement of formation), independent of s
    s_near_0,  // Renyi-q entropy
    s_near_1,  // Tsallis-q entropy
};

std::string_view to_string(Regime regime);

inline constexpr double kRegimeThreshold = 1e-6;

// All logarithms are natural: the q -> 1 and s -> 0 limits come out in nats.
class UEParams {
public:
    // q > 0, s >= 0
    static UEParams make(double q, double s);

    double q() const noexcept { return q_; }
    double s() const noexcept { return s_; }
    Regime regime() const noexcept;

    // (q, s) in the region where U = f_{q,s}(C) and f is monotone and convex.
    bool in_region_r() const;
    // q >= 1, 0 <= s <= 1, q s <= 3: the older hypothesis set for U = f_{q,s}(C).
    bool in_closed_form_domain() const;

private:
    UEParams(double q, double s) : q_(q), s_(s) {}
    double q_;
    double s_;
};

// Lower q-bound of the region at s in [0, 1]:
//   (sqrt(9 s^2 - 24 s + 28) - (2 + 3 s)) / (2 (2 - 3 s)).
// The removable singularity at s = 2/3 is filled with its limit 3/4.
double region_lower_q(double s);
// Upper q-bound (5 + sqrt(13)) / (2 s); +infinity at s = 0.
double region_upper_q(double s);
bool in_region_r(const UEParams& params);

// Unified entropy of a probability spectrum, dispatching on params.regime().
double unified_entropy_of_spectrum(std::span<const double> eigenvalues, const UEParams& params);

// [(sum l^q)^s - 1] / ((1 - q) s) with no limit handling. Undefined at q = 1 or s = 0.
double unified_entropy_generic(std::span<const double> eigenvalues, double q, double s);
// Closed limits, all in nats.
double renyi_entropy(std::span<const double> eigenvalues, double q);
double tsallis_entropy(std::span<const double> eigenvalues, double q);
double von_neumann_entropy(std::span<const double> eigenvalues);

double unified_entropy(const DensityMatrix& rho, const UEParams& params);

// f_{q,s}(x): unified entropy of the Schmidt-rank-2 spectrum with concurrence x,
//   ((1 + r)^q + (1 - r)^q)^s - 2^{qs}) / ((1 - q) s 2^{qs}),  r = sqrt(1 - x^2).
// x must lie in [0, 1] (1e-12 slack); f(0) = 0 exactly.
double f_qs(double x, const UEParams& params);

// g_{q,s}(y) = f_{q,s}(sqrt(y)), y in [0, 1].
double g_qs(double y, const UEParams& params);

// U_{q,s} of psi across side_a | rest, from the reduced spectrum.
double ue_pure(const PureStateVector& psi, const SiteSet& side_a, const UEParams& params);

// U_{q,s} of a reduced GW state with concurrence c, i.e. f_{q,s}(c).
double ue_gw_reduced(double c, const UEParams& params);

}  // namespace gwmono
