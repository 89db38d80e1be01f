#pragma once

#include <string>
#include <vector>

#include "gwmono/concurrence.hpp"
#include "gwmono/monogamy.hpp"
#include "gwmono/unified.hpp"

namespace gwmono {

// Residual entanglements under a two-level partition of an n-qubit W state:
//   upsilon       = g^2(C^2_top) - sum over the four block pairs of g^2(C^2)
//   upsilon_prime = g^2(C^2_top) - m (n - m) g^2(C^2_{A_i A_j})
// with g = g_{q,s}. Both require (q, s) in region R (HypothesisError otherwise).

enum class PREKind { upsilon, upsilon_prime };

struct PREResult {
    PREKind kind;
    BlockCut cut;  // a, b unused for upsilon_prime
    UEParams params;
    double value;
    PairConcurrenceSource source;
};

// Squared concurrences of one cut of the uniform W state, from either source.
// Pairs involving an empty block are 0.
struct CutConcurrences {
    double top_sq = 0.0;
    double p11_p21 = 0.0;
    double p12_p21 = 0.0;
    double p11_p22 = 0.0;
    double p12_p22 = 0.0;
    double qubit_pair = 0.0;
};

CutConcurrences cut_concurrences(const BlockCut& cut, PairConcurrenceSource source);

double upsilon(const BlockCut& cut, const UEParams& params, PairConcurrenceSource source);
double upsilon(const CutConcurrences& c, const UEParams& params);
// 1 <= m <= n - 1
double upsilon_prime(int n, int m, const UEParams& params, PairConcurrenceSource source);

PREResult upsilon_result(const BlockCut& cut, const UEParams& params, PairConcurrenceSource source);
PREResult upsilon_prime_result(int n, int m, const UEParams& params, PairConcurrenceSource source);

// Same quantities for an arbitrary GW-shaped psi on cut.n sites, all
// concurrences from the state (pure top cut, oracle pairs). The primed form
// sums every cross pair A_i A_j, i < m <= j.
double upsilon_of_state(const PureStateVector& psi, const BlockCut& cut, const UEParams& params);
double upsilon_prime_of_state(const PureStateVector& psi, int m, const UEParams& params);

// U^2(P11P12|P21P22) >= sum of block-pair U^2 >= sum_{i <= m < j} U^2(A_i A_j),
// oracle concurrences. margin is the first gap, extra_margins["pairs_over_qubits"]
// the second.
MonogamyReport monogamy_like_pre_check(const PureStateVector& psi, const BlockCut& cut, const UEParams& params);

// First column is the sweep variable (q or alpha); one column per series.
struct DataTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::string source;  // concurrence source, empty when not applicable
};

std::vector<double> linspace(double lo, double hi, int count);

// Rows q, columns a (upsilon at fixed n, m, b) or m (upsilon_prime at fixed n).
DataTable upsilon_table(int n, int m, int b, const std::vector<int>& a_values, const std::vector<double>& q_values,
                        double s, PairConcurrenceSource source);
DataTable upsilon_prime_table(int n, const std::vector<int>& m_values, const std::vector<double>& q_values, double s,
                              PairConcurrenceSource source);

// The published grids: q in {2.0, ..., 2.4}, s = 1, n = 6.
std::vector<double> published_q_values();
DataTable table1(PairConcurrenceSource source = PairConcurrenceSource::printed_closed_form);  // m=4, b=5
DataTable table2(PairConcurrenceSource source = PairConcurrenceSource::printed_closed_form);  // m=4, b=6
DataTable table3(PairConcurrenceSource source = PairConcurrenceSource::printed_closed_form);  // m=1..5

// q sweeps over the s = 1 section of region R, [(5-sqrt13)/2, (5+sqrt13)/2].
DataTable fig2(int points = 101, PairConcurrenceSource source = PairConcurrenceSource::printed_closed_form);
DataTable fig3(int points = 101, PairConcurrenceSource source = PairConcurrenceSource::printed_closed_form);
DataTable fig4(int points = 101, PairConcurrenceSource source = PairConcurrenceSource::printed_closed_form);

// Printed vs state-derived C^2 for the uniform n-qubit W state over every cut
// with the given m (all a in [1, m], b in (m, n]).
struct DiscrepancyRow {
    std::string quantity;
    int a;
    int b;
    double printed;
    double oracle;
};

std::vector<DiscrepancyRow> discrepancy_rows(int n = 6, int m = 4);

}  // namespace gwmono
