#pragma once

#include <string_view>

#include "gwmono/states.hpp"

namespace gwmono {

// Where pair concurrences come from when evaluating residual entanglements.
// printed_closed_form reproduces the published W-state formulas verbatim;
// effective_qubit_oracle computes them from the state. The two disagree for
// block pairs of W states, so every caller chooses explicitly.
enum class PairConcurrenceSource { printed_closed_form, effective_qubit_oracle };

std::string_view to_string(PairConcurrenceSource source);

// Two-level block cut of n qubits: P11 = sites [0, a), P12 = [a, m),
// P21 = [m, b), P22 = [b, n). One-based parameters, 1 <= a <= m < b <= n.
// P12 is empty when a == m and P22 is empty when b == n.
struct BlockCut {
    int n;
    int m;
    int a;
    int b;

    static BlockCut make(int n, int m, int a, int b);

    SiteSet p11() const;
    SiteSet p12() const;
    SiteSet p21() const;
    SiteSet p22() const;
    SiteSet first() const;   // P11 u P12
    SiteSet second() const;  // P21 u P22
};

enum class PrintedPair { p11_p21, p12_p21, p11_p22, p12_p22, top_cut, qubit_pair };

std::string_view to_string(PrintedPair pair);

// Pure-state concurrence sqrt(2(1 - tr rho_A^2)) across side_a | rest.
double concurrence_pure(const PureStateVector& psi, const SiteSet& side_a);

// Wootters concurrence of a two-qubit state: max(0, l1 - l2 - l3 - l4) where
// l_i are the singular values of tau = V^dagger (Y x Y) V^*, V holding the
// eigenvectors of rho scaled by the square roots of their eigenvalues. These
// coincide with the square roots of the eigenvalues of rho (Y x Y) rho^* (Y x Y).
double wootters_concurrence(const DensityMatrix& rho);

// The reduction of a GW (or GWV) state onto blocks p and q, expressed in the
// effective qubit basis {|0..0>, |e_block>} of each block, where |e_block> is
// the normalized restriction of the excitation pattern to the block.
struct EffectiveQubitState {
    DensityMatrix rho;     // 4x4, dims {2, 2}
    double leaked_weight;  // 1 - weight inside the effective support
};

// Throws InputError when the reduction leaks outside the effective support or
// has rank above 2 (tolerance 1e-10), i.e. when psi is not GW-shaped, and when
// a block carries no excitation amplitude (its effective support is 1-dimensional).
EffectiveQubitState effective_two_qubit_state(const PureStateVector& psi, const SiteSet& block_p,
                                              const SiteSet& block_q);

// Mixed-state concurrence of rho_{PQ} for a GW-shaped psi, via the effective
// two-qubit embedding and the Wootters formula. Returns 0 when either block
// carries no excitation amplitude (the block is then in |0..0> and unentangled).
double gw_block_concurrence_oracle(const PureStateVector& psi, const SiteSet& block_p, const SiteSet& block_q);

// Published W-state formulas for C^2 at a BlockCut.
//   top_cut    : 4 m (n - m) / n^2
//   block pairs: [sqrt((n-m)^2 + 4 k) - (n-m)]^2 / n^2 with k = |X||Y| for the pair
//   qubit_pair : [sqrt(4 + (n-2)^2) - (n-2)]^2 / n^2
double printed_pair_concurrence_sq(const BlockCut& cut, PrintedPair pair);

// C^2(rho_{P_s | rest}) - sum_{k != s} C^2(rho_{P_s P_k}). The first term is
// the pure-state value when the partition covers every site and the oracle
// value otherwise; pair terms always come from the oracle. Vanishes for GW states.
double lemma4_residual(const PureStateVector& psi, const Partition& partition, std::size_t s_index);

}  // namespace gwmono
