#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwmono/concurrence.hpp"
#include "gwmono/states.hpp"
#include "gwmono/unified.hpp"

namespace gwmono {

// Additive slack on every inequality margin.
inline constexpr double kMarginTolerance = 1e-9;

struct Hypothesis {
    std::string name;
    bool ok;
    std::string detail;
};

using NamedValues = std::vector<std::pair<std::string, double>>;

enum class Direction { at_least, at_most };  // lhs >= rhs, lhs <= rhs
enum class Verdict { holds, violated, refused };

std::string_view to_string(Verdict verdict);

// One evaluated inequality instance. margin is oriented so that a
// non-negative value means the inequality holds: lhs - rhs for at_least,
// rhs - lhs for at_most. A strict inequality needs margin > 0.
struct MonogamyReport {
    std::string inequality_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    Direction direction = Direction::at_least;
    bool strict = false;
    std::vector<Hypothesis> hypotheses;
    NamedValues params;
    // secondary margins that must also be >= -tolerance (multi-tier chains)
    NamedValues extra_margins;
    // values reported for inspection only
    NamedValues diagnostics;

    bool hypotheses_ok() const;
    // refused when any hypothesis fails; never claims a violation then
    Verdict verdict(double tolerance = kMarginTolerance) const;
};

// Squared concurrences seen from one block of a partition: the block against
// the union of the others, and the block against each other block.
struct FocusConcurrences {
    double whole_sq = 0.0;
    std::vector<double> pair_sq;  // in partition order, focus block skipped
    bool whole_is_pure = false;   // partition covers every site of the state
};

// Pair terms and the mixed "whole" term come from the effective-qubit oracle;
// when the partition covers all sites the whole term is the pure-state value.
FocusConcurrences focus_concurrences(const PureStateVector& psi, const Partition& partition, std::size_t focus);

// U^2(P_focus | rest) >= sum_i U^2(P_focus P_i), with U = g_{q,s}(C^2).
// Only the oracle source is meaningful for arbitrary states; printed closed
// forms exist only for W-state block cuts, so passing them throws InputError.
MonogamyReport check_squared_monogamy(const PureStateVector& psi, const Partition& partition, std::size_t focus,
                                      const UEParams& params,
                                      PairConcurrenceSource source = PairConcurrenceSource::effective_qubit_oracle);
MonogamyReport check_squared_monogamy(const FocusConcurrences& c, const UEParams& params);

// alpha >= 2: U^a(P1|rest) >= sum U^a(P1 Pi).  alpha <= 0: the strict reverse,
// which additionally needs at least two pair terms. Throws HypothesisError for
// alpha <= 0 when some pair UE vanishes (negative power of zero).
MonogamyReport check_alpha_monogamy(const PureStateVector& psi, const Partition& partition, std::size_t focus,
                                    const UEParams& params, double alpha,
                                    PairConcurrenceSource source = PairConcurrenceSource::effective_qubit_oracle);
MonogamyReport check_alpha_monogamy(const FocusConcurrences& c, const UEParams& params, double alpha);

// p^{a/2-1} U12^a + ((mu+h)^{a/2} - p^{a/2-1} h^{a/2}) U13^a, unchecked.
double tighter_bound_formula(double u12, double u13, double mu, double h, double p, double alpha);
// mu >= 1, h >= 1, alpha >= 2, U12^2 >= h U13^2, 1 <= p <= 1 + mu U13^2 / U12^2
std::vector<Hypothesis> tighter_bound_hypotheses(double u12, double u13, double mu, double h, double p,
                                                 double alpha);
// Checked version; throws HypothesisError naming the first failed predicate.
double tighter_bound_theorem4(double u12, double u13, double mu, double h, double p, double alpha);

// Earlier bound U12^a + ((mu+h)^{a/gamma} - h^{a/gamma}) U13^a, for
// alpha >= gamma >= 1, mu >= 1, h >= 1 (HypothesisError otherwise).
double ref34_bound(double u12, double u13, double mu, double h, double alpha, double gamma);

// U^a(P1|P2P3) >= tighter bound, with the (27)-type premise
// U^2(P1|P2P3) >= U12^2 + mu U13^2 added to the hypotheses.
MonogamyReport check_tighter_monogamy(double u_whole, double u12, double u13, double mu, double h, double p,
                                      double alpha);
// State version: partition has exactly three blocks; the two non-focus blocks
// play P2 and P3 in partition order.
MonogamyReport check_tighter_monogamy(const PureStateVector& psi, const Partition& partition, std::size_t focus,
                                      const UEParams& params, double mu, double h, double p, double alpha);

// Multi-block chain. With r - 1 outer blocks B_1..B_{r-1} around A:
//   pair_ues[i] = U(A B_{i+1}),              i = 0..r-2
//   tail_ues[i] = U(A | B_{i+1} ... B_{r-1}), i = 0..r-2 (tail_ues[r-2] = pair_ues[r-2])
//   mu, h, p    : r - 2 entries each
//   k           : 1 <= k <= r - 3, r >= 4
struct ChainedInputs {
    std::vector<double> pair_ues;
    std::vector<double> tail_ues;
    std::vector<double> mu;
    std::vector<double> h;
    std::vector<double> p;
    int k = 1;
    double alpha = 2.0;
};

// Throws InputError on inconsistent list lengths or k.
double chained_bound_formula(const ChainedInputs& in);
// The two hypothesis families, evaluated on squared UEs. The second family's
// p ceiling is mu_j U^2(A B_j) / U^2(A | B_{j+1}...).
std::vector<Hypothesis> chained_bound_hypotheses(const ChainedInputs& in);
// Throws HypothesisError when a hypothesis fails.
double chained_bound_theorem5(const ChainedInputs& in);

MonogamyReport check_chained_monogamy(const PureStateVector& psi, const Partition& partition, std::size_t focus,
                                      const UEParams& params, const std::vector<double>& mu,
                                      const std::vector<double>& h, const std::vector<double>& p, int k,
                                      double alpha);

// Two-site bounds at q = 2 with X = sum_i f(C(rho_{A C_i})) + f(C(rho_{AB})) and
// Y the same with A and B exchanged (f = f_{2,s}, C from the oracle):
//   lower:  U(rho_AB)^beta >= |X^beta - Y^beta|
//   upper:  U(rho_AB)^beta <= X^beta + Y^beta
// Hypotheses 1/2 <= s <= 1, 0 <= beta <= 1. Diagnostics carry the entropy-route
// values U(rho_A), U(rho_B) next to X and Y.
MonogamyReport beta_lower_bound_theorem6(const PureStateVector& psi, int site_a, int site_b, double beta, double s);
MonogamyReport beta_upper_bound_theorem7(const PureStateVector& psi, int site_a, int site_b, double beta, double s);

// The parameter-independent pieces of the two bounds, for sweeps over (beta, s).
struct TwoSiteInputs {
    std::vector<double> spectrum_ab;
    std::vector<double> spectrum_a;
    std::vector<double> spectrum_b;
    double c_ab = 0.0;
    std::vector<double> c_a_others;  // C(rho_{A C_i}) over the remaining sites
    std::vector<double> c_b_others;
};

TwoSiteInputs two_site_inputs(const PureStateVector& psi, int site_a, int site_b);
MonogamyReport beta_lower_bound_theorem6(const TwoSiteInputs& in, double beta, double s);
MonogamyReport beta_upper_bound_theorem7(const TwoSiteInputs& in, double beta, double s);

// |U(rho_A) - U(rho_B)| <= U(rho_AB) <= U(rho_A) + U(rho_B) for disjoint site sets.
// margin is the lower gap; extra_margins holds the upper gap.
MonogamyReport subadditivity_sandwich(const PureStateVector& psi, const SiteSet& a, const SiteSet& b,
                                      const UEParams& params);

// (1+x)^m - p^{m-1} x^m - (1+h)^m + p^{m-1} h^m for x >= h >= 0, m >= 1,
// 1 <= p <= 1 + 1/x. Throws InputError on a violated precondition.
double lemma5_gap(double x, double h, double p, double m);

// ((x-y)^b - (x^b - y^b), x^b + y^b - (x+y)^b) for x >= y >= 0, 0 <= b <= 1.
std::pair<double, double> lemma6_check(double x, double y, double beta);

}  // namespace gwmono
