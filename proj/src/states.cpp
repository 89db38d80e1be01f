#include "gwmono/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gwmono/errors.hpp"

namespace gwmono {

namespace {

constexpr double kStateNormTolerance = 1e-12;
constexpr double kDensityTolerance = 1e-10;

std::size_t checked_product(const std::vector<int>& dims, std::size_t cap) {
    std::size_t total = 1;
    for (int d : dims) {
        if (d < 1) throw InputError("local dimension must be positive");
        if (total > cap / static_cast<std::size_t>(d)) {
            throw SizeError("state needs more than " + std::to_string(cap) + " amplitudes");
        }
        total *= static_cast<std::size_t>(d);
    }
    return total;
}

}  // namespace

Complex GWState::coeff(int site, int level) const {
    if (site < 0 || site >= n_ || level < 1 || level >= d_) {
        throw InputError("coefficient index out of range");
    }
    return coeffs_[static_cast<std::size_t>(site * (d_ - 1) + level - 1)];
}

double GWState::site_weight(int site) const {
    double w = 0.0;
    for (int i = 1; i < d_; ++i) w += std::norm(coeff(site, i));
    return w;
}

double GWState::block_weight(const SiteSet& block) const {
    double w = 0.0;
    for (int s : block) w += site_weight(s);
    return w;
}

GWState make_gw_state(int n, int d, const std::vector<std::vector<Complex>>& coeffs, Normalization norm) {
    if (n < 2) throw InputError("a GW state needs at least 2 sites");
    if (d < 2) throw InputError("local dimension must be at least 2");
    if (coeffs.size() != static_cast<std::size_t>(n)) {
        throw InputError("coefficient table has " + std::to_string(coeffs.size()) + " rows, expected " +
                         std::to_string(n));
    }
    std::vector<Complex> flat;
    flat.reserve(static_cast<std::size_t>(n * (d - 1)));
    for (const auto& row : coeffs) {
        if (row.size() != static_cast<std::size_t>(d - 1)) {
            throw InputError("each coefficient row needs d-1 = " + std::to_string(d - 1) + " entries");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    double sq = 0.0;
    for (const auto& c : flat) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw InputError("non-finite coefficient");
        sq += std::norm(c);
    }
    if (sq == 0.0) throw InputError("coefficient table is the zero vector");
    const double nrm = std::sqrt(sq);
    if (norm == Normalization::snap && std::abs(nrm - 1.0) > kNormSnapTolerance) {
        throw InputError("coefficient norm " + std::to_string(nrm) +
                         " deviates from 1; pass Normalization::renormalize to rescale");
    }
    for (auto& c : flat) c /= nrm;
    return GWState(n, d, std::move(flat));
}

GWState uniform_w_state(int n) {
    if (n < 2) throw InputError("a W state needs at least 2 sites");
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<std::vector<Complex>> coeffs(static_cast<std::size_t>(n), std::vector<Complex>{Complex(a, 0.0)});
    return make_gw_state(n, 2, coeffs, Normalization::renormalize);
}

GWVState make_gwv_state(GWState gw, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("vacuum superposition weight must lie in [0, 1]");
    return GWVState{std::move(gw), p};
}

PureStateVector::PureStateVector(std::vector<int> dims, Eigen::VectorXcd amps)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
    if (dims_.empty()) throw InputError("state needs at least one subsystem");
    const std::size_t total = checked_product(dims_, static_cast<std::size_t>(-1));
    if (total != static_cast<std::size_t>(amps_.size())) {
        throw InputError("amplitude count does not match the product of local dimensions");
    }
    if (std::abs(amps_.squaredNorm() - 1.0) > kStateNormTolerance) {
        throw InputError("state vector is not normalized");
    }
}

std::size_t PureStateVector::index_of(const std::vector<int>& levels) const {
    if (levels.size() != dims_.size()) throw InputError("basis label has the wrong number of sites");
    std::size_t idx = 0;
    for (std::size_t s = 0; s < dims_.size(); ++s) {
        if (levels[s] < 0 || levels[s] >= dims_[s]) throw InputError("basis level out of range");
        idx = idx * static_cast<std::size_t>(dims_[s]) + static_cast<std::size_t>(levels[s]);
    }
    return idx;
}

DensityMatrix::DensityMatrix(std::vector<int> dims, Eigen::MatrixXcd entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
    const std::size_t total = checked_product(dims_, static_cast<std::size_t>(-1));
    if (entries_.rows() != entries_.cols() || static_cast<std::size_t>(entries_.rows()) != total) {
        throw InputError("density matrix shape does not match its subsystem dimensions");
    }
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
        throw InputError("density matrix is not Hermitian");
    }
    if (std::abs(entries_.trace().real() - 1.0) > kDensityTolerance) {
        throw InputError("density matrix trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kDensityTolerance) {
        throw InputError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_gram(std::vector<int> dims, const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd rho = m * m.adjoint();
    if (std::abs(rho.trace().real() - 1.0) > kDensityTolerance) {
        throw InputError("reduced state trace differs from 1");
    }
    return DensityMatrix(Trusted{}, std::move(dims), std::move(rho));
}

Partition Partition::make(int n, std::vector<SiteSet> blocks) {
    if (n < 1) throw InputError("partition needs a positive site count");
    if (blocks.empty()) throw InputError("partition needs at least one block");
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (auto& b : blocks) {
        if (b.empty()) throw InputError("partition blocks must be non-empty");
        std::sort(b.begin(), b.end());
        for (int s : b) {
            if (s < 0 || s >= n) throw InputError("partition site " + std::to_string(s) + " out of range");
            if (used[static_cast<std::size_t>(s)]) throw InputError("partition blocks overlap at site " + std::to_string(s));
            used[static_cast<std::size_t>(s)] = true;
        }
    }
    return Partition(n, std::move(blocks));
}

SiteSet Partition::covered() const {
    SiteSet all;
    for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return all;
}

SiteSet Partition::union_except(std::size_t skip) const {
    SiteSet all;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i != skip) all.insert(all.end(), blocks_[i].begin(), blocks_[i].end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

bool Partition::covers_all_sites() const { return covered().size() == static_cast<std::size_t>(n_); }

PureStateVector to_state_vector(const GWState& state, std::size_t amplitude_cap) {
    return to_state_vector(GWVState{state, 1.0}, amplitude_cap);
}

PureStateVector to_state_vector(const GWVState& state, std::size_t amplitude_cap) {
    const GWState& gw = state.gw;
    const int n = gw.sites();
    const int d = gw.local_dim();
    std::vector<int> dims(static_cast<std::size_t>(n), d);
    const std::size_t total = checked_product(dims, amplitude_cap);

    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(total));
    const double excited = std::sqrt(state.vacuum_weight);
    amps(0) = std::sqrt(1.0 - state.vacuum_weight);
    std::size_t stride = total;
    for (int s = 0; s < n; ++s) {
        stride /= static_cast<std::size_t>(d);
        for (int i = 1; i < d; ++i) {
            amps(static_cast<Eigen::Index>(static_cast<std::size_t>(i) * stride)) += excited * gw.coeff(s, i);
        }
    }
    // Rounding in sqrt(p), sqrt(1-p) can leave the norm off by an ulp or two.
    amps /= amps.norm();
    return PureStateVector(std::move(dims), std::move(amps));
}

SiteSet normalized_sites(const SiteSet& sites, int n) {
    if (sites.empty()) throw InputError("site set must be non-empty");
    SiteSet out = sites;
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw InputError("duplicate site index");
    if (out.front() < 0 || out.back() >= n) throw InputError("site index out of range");
    return out;
}

SiteSet complement(const SiteSet& sites, int n) {
    SiteSet out;
    for (int s = 0; s < n; ++s) {
        if (std::find(sites.begin(), sites.end(), s) == sites.end()) out.push_back(s);
    }
    return out;
}

Eigen::MatrixXcd bipartite_amplitudes(const PureStateVector& psi, const SiteSet& keep_in) {
    const int n = psi.sites();
    const SiteSet keep = normalized_sites(keep_in, n);
    const auto& dims = psi.dims();

    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    for (int s : keep) kept[static_cast<std::size_t>(s)] = true;

    // Per-site strides inside the row (kept) and column (traced) index spaces.
    std::vector<std::size_t> row_stride(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> col_stride(static_cast<std::size_t>(n), 0);
    std::size_t rows = 1;
    std::size_t cols = 1;
    for (int s = n - 1; s >= 0; --s) {
        const auto us = static_cast<std::size_t>(s);
        if (kept[us]) {
            row_stride[us] = rows;
            rows *= static_cast<std::size_t>(dims[us]);
        } else {
            col_stride[us] = cols;
            cols *= static_cast<std::size_t>(dims[us]);
        }
    }

    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    std::size_t r = 0;
    std::size_t c = 0;
    const auto total = static_cast<std::size_t>(psi.amplitudes().size());
    for (std::size_t flat = 0; flat < total; ++flat) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = psi.amplitude(flat);
        // odometer increment, last site fastest
        for (int s = n - 1; s >= 0; --s) {
            const auto us = static_cast<std::size_t>(s);
            const std::size_t step = kept[us] ? row_stride[us] : col_stride[us];
            std::size_t& target = kept[us] ? r : c;
            if (++digit[us] < dims[us]) {
                target += step;
                break;
            }
            target -= step * static_cast<std::size_t>(dims[us] - 1);
            digit[us] = 0;
        }
    }
    return m;
}

DensityMatrix reduce(const PureStateVector& psi, const SiteSet& keep_in) {
    const SiteSet keep = normalized_sites(keep_in, psi.sites());
    std::vector<int> dims;
    for (int s : keep) dims.push_back(psi.dims()[static_cast<std::size_t>(s)]);
    return DensityMatrix::from_gram(std::move(dims), bipartite_amplitudes(psi, keep));
}

double purity(const DensityMatrix& rho) { return rho.matrix().cwiseAbs2().sum(); }

namespace {

// Gram matrix of the smaller side of the cut.
Eigen::MatrixXcd smaller_gram(const PureStateVector& psi, const SiteSet& side) {
    const Eigen::MatrixXcd m = bipartite_amplitudes(psi, side);
    if (m.rows() <= m.cols()) return m * m.adjoint();
    return m.adjoint() * m;
}

}  // namespace

double reduced_purity(const PureStateVector& psi, const SiteSet& side) {
    return smaller_gram(psi, side).cwiseAbs2().sum();
}

namespace {

std::vector<double> sorted_clamped(const Eigen::VectorXd& ev) {
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    for (auto& v : out) v = std::max(v, 0.0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

std::vector<double> spectrum(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix(), Eigen::EigenvaluesOnly);
    return sorted_clamped(es.eigenvalues());
}

std::vector<double> schmidt_spectrum(const PureStateVector& psi, const SiteSet& side) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(smaller_gram(psi, side), Eigen::EigenvaluesOnly);
    return sorted_clamped(es.eigenvalues());
}

}  // namespace gwmono
