#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace gwmono {

using Complex = std::complex<double>;

// Zero-based site indices. Site 0 is the leftmost tensor factor, so for qubits
// the basis label |1000> has site 0 excited.
using SiteSet = std::vector<int>;

inline constexpr std::size_t kDefaultAmplitudeCap = std::size_t{1} << 24;

// Coefficient tables within this distance of unit norm are rescaled silently.
inline constexpr double kNormSnapTolerance = 1e-9;

enum class Normalization {
    snap,         // accept |norm - 1| <= kNormSnapTolerance, rescale exactly
    renormalize,  // rescale any non-zero table
};

// Single-excitation superposition sum_{s,i} a_{si} |0..i_s..0> on n sites of
// local dimension d. Coefficients are stored site-major: a_{si} lives at
// s * (d - 1) + (i - 1).
class GWState {
public:
    int sites() const noexcept { return n_; }
    int local_dim() const noexcept { return d_; }

    // level in [1, d-1]
    Complex coeff(int site, int level) const;
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

    // sum_i |a_{si}|^2
    double site_weight(int site) const;
    double block_weight(const SiteSet& block) const;

private:
    friend GWState make_gw_state(int, int, const std::vector<std::vector<Complex>>&, Normalization);
    GWState(int n, int d, std::vector<Complex> coeffs) : n_(n), d_(d), coeffs_(std::move(coeffs)) {}

    int n_;
    int d_;
    std::vector<Complex> coeffs_;
};

// coeffs[s][i-1] = a_{si}; n rows of d-1 entries.
GWState make_gw_state(int n, int d, const std::vector<std::vector<Complex>>& coeffs,
                      Normalization norm = Normalization::snap);

// a_s = 1/sqrt(n) on every site, d = 2.
GWState uniform_w_state(int n);

// sqrt(p) |GW> + sqrt(1-p) |0...0>
struct GWVState {
    GWState gw;
    double vacuum_weight;
};

GWVState make_gwv_state(GWState gw, double p);

class PureStateVector {
public:
    // Throws InputError unless prod(dims) == amps.size() and the norm is 1 within 1e-12.
    PureStateVector(std::vector<int> dims, Eigen::VectorXcd amps);

    const std::vector<int>& dims() const noexcept { return dims_; }
    int sites() const noexcept { return static_cast<int>(dims_.size()); }
    const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_(static_cast<Eigen::Index>(index)); }

    // Flat index of a computational basis label, one level per site.
    std::size_t index_of(const std::vector<int>& levels) const;

private:
    std::vector<int> dims_;
    Eigen::VectorXcd amps_;
};

class DensityMatrix {
public:
    // Validates Hermiticity (1e-10), unit trace (1e-10) and eigenvalues >= -1e-10.
    DensityMatrix(std::vector<int> dims, Eigen::MatrixXcd entries);

    // rho = M M^dagger. Positive semidefinite by construction; only the trace is checked.
    static DensityMatrix from_gram(std::vector<int> dims, const Eigen::MatrixXcd& m);

    const std::vector<int>& dims() const noexcept { return dims_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
    Eigen::Index dim() const noexcept { return entries_.rows(); }

private:
    struct Trusted {};
    DensityMatrix(Trusted, std::vector<int> dims, Eigen::MatrixXcd entries)
        : dims_(std::move(dims)), entries_(std::move(entries)) {}

    std::vector<int> dims_;
    Eigen::MatrixXcd entries_;
};

// Partition blocks over a subset of {0..n-1}; blocks are non-empty and pairwise disjoint.
class Partition {
public:
    static Partition make(int n, std::vector<SiteSet> blocks);

    int sites() const noexcept { return n_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    const SiteSet& block(std::size_t i) const { return blocks_.at(i); }
    const std::vector<SiteSet>& blocks() const noexcept { return blocks_; }

    // Sorted union of all blocks.
    SiteSet covered() const;
    // Sorted union of all blocks except `skip`.
    SiteSet union_except(std::size_t skip) const;
    bool covers_all_sites() const;

private:
    Partition(int n, std::vector<SiteSet> blocks) : n_(n), blocks_(std::move(blocks)) {}

    int n_;
    std::vector<SiteSet> blocks_;
};

PureStateVector to_state_vector(const GWState& state, std::size_t amplitude_cap = kDefaultAmplitudeCap);
PureStateVector to_state_vector(const GWVState& state, std::size_t amplitude_cap = kDefaultAmplitudeCap);

// Sorts, checks range and duplicates; throws InputError on empty or out-of-range sets.
SiteSet normalized_sites(const SiteSet& sites, int n);
SiteSet complement(const SiteSet& sites, int n);

// Reshape psi into a (keep x rest) matrix; row and column labels follow
// ascending site order within each side.
Eigen::MatrixXcd bipartite_amplitudes(const PureStateVector& psi, const SiteSet& keep);

// Partial trace onto `keep`; subsystem order of the result is ascending.
DensityMatrix reduce(const PureStateVector& psi, const SiteSet& keep);

// tr rho^2
double purity(const DensityMatrix& rho);

// tr rho_A^2 for rho_A = tr_{rest} |psi><psi|, evaluated on whichever side is smaller.
double reduced_purity(const PureStateVector& psi, const SiteSet& side);

// Eigenvalues in descending order, negative round-off clamped to 0.
std::vector<double> spectrum(const DensityMatrix& rho);

// Non-zero Schmidt weights of psi across side|rest (descending, clamped at 0).
std::vector<double> schmidt_spectrum(const PureStateVector& psi, const SiteSet& side);

}  // namespace gwmono
