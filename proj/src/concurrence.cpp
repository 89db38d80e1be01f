#include "gwmono/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gwmono/errors.hpp"

namespace gwmono {

namespace {

constexpr double kSupportTolerance = 1e-10;
// Eigenvalues of rho below this are treated as exact zeros before forming tau.
constexpr double kRankCutoff = 1e-14;

SiteSet site_range(int begin, int end) {
    SiteSet out;
    for (int s = begin; s < end; ++s) out.push_back(s);
    return out;
}

bool disjoint(const SiteSet& x, const SiteSet& y) {
    for (int s : x) {
        if (std::find(y.begin(), y.end(), s) != y.end()) return false;
    }
    return true;
}

double block_excitation_weight(const PureStateVector& psi, const SiteSet& block) {
    std::vector<int> levels(static_cast<std::size_t>(psi.sites()), 0);
    double w = 0.0;
    for (int s : block) {
        const int d = psi.dims()[static_cast<std::size_t>(s)];
        for (int i = 1; i < d; ++i) {
            levels[static_cast<std::size_t>(s)] = i;
            w += std::norm(psi.amplitude(psi.index_of(levels)));
        }
        levels[static_cast<std::size_t>(s)] = 0;
    }
    return w;
}

}  // namespace

std::string_view to_string(PairConcurrenceSource source) {
    switch (source) {
        case PairConcurrenceSource::printed_closed_form: return "printed";
        case PairConcurrenceSource::effective_qubit_oracle: return "oracle";
    }
    return "unknown";
}

std::string_view to_string(PrintedPair pair) {
    switch (pair) {
        case PrintedPair::p11_p21: return "P11P21";
        case PrintedPair::p12_p21: return "P12P21";
        case PrintedPair::p11_p22: return "P11P22";
        case PrintedPair::p12_p22: return "P12P22";
        case PrintedPair::top_cut: return "P11P12|P21P22";
        case PrintedPair::qubit_pair: return "AiAj";
    }
    return "unknown";
}

BlockCut BlockCut::make(int n, int m, int a, int b) {
    if (!(1 <= a && a <= m && m < b && b <= n)) {
        throw InputError("block cut needs 1 <= a <= m < b <= n (got n=" + std::to_string(n) + ", m=" +
                         std::to_string(m) + ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
    }
    return BlockCut{n, m, a, b};
}

SiteSet BlockCut::p11() const { return site_range(0, a); }
SiteSet BlockCut::p12() const { return site_range(a, m); }
SiteSet BlockCut::p21() const { return site_range(m, b); }
SiteSet BlockCut::p22() const { return site_range(b, n); }
SiteSet BlockCut::first() const { return site_range(0, m); }
SiteSet BlockCut::second() const { return site_range(m, n); }

double concurrence_pure(const PureStateVector& psi, const SiteSet& side_a) {
    const SiteSet side = normalized_sites(side_a, psi.sites());
    if (side.size() == static_cast<std::size_t>(psi.sites())) {
        throw InputError("bipartition needs a non-empty complement");
    }
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - reduced_purity(psi, side))));
}

double wootters_concurrence(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<int>{2, 2}) throw InputError("Wootters concurrence needs a two-qubit state");

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix());
    Eigen::Matrix4cd v = es.eigenvectors();
    for (int k = 0; k < 4; ++k) {
        const double p = es.eigenvalues()(k);
        v.col(k) *= p > kRankCutoff ? std::sqrt(p) : 0.0;
    }
    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    const Eigen::Matrix4cd tau = v.adjoint() * flip * v.conjugate();

    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
    const Eigen::Vector4d sv = svd.singularValues();  // descending
    return std::max(0.0, sv(0) - sv(1) - sv(2) - sv(3));
}

EffectiveQubitState effective_two_qubit_state(const PureStateVector& psi, const SiteSet& block_p,
                                              const SiteSet& block_q) {
    const int n = psi.sites();
    const SiteSet p = normalized_sites(block_p, n);
    const SiteSet q = normalized_sites(block_q, n);
    if (!disjoint(p, q)) throw InputError("blocks must be disjoint");

    SiteSet both = p;
    both.insert(both.end(), q.begin(), q.end());
    std::sort(both.begin(), both.end());

    // Row strides of each site inside the (p u q) index space, ascending site order.
    std::vector<std::size_t> stride(static_cast<std::size_t>(n), 0);
    std::size_t rows = 1;
    for (auto it = both.rbegin(); it != both.rend(); ++it) {
        stride[static_cast<std::size_t>(*it)] = rows;
        rows *= static_cast<std::size_t>(psi.dims()[static_cast<std::size_t>(*it)]);
    }

    // Excitation pattern of a block as a vector in the (p u q) space, with the
    // other block in |0..0>.
    auto excitation = [&](const SiteSet& block) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(rows));
        std::vector<int> levels(static_cast<std::size_t>(n), 0);
        for (int s : block) {
            const int d = psi.dims()[static_cast<std::size_t>(s)];
            for (int i = 1; i < d; ++i) {
                levels[static_cast<std::size_t>(s)] = i;
                e(static_cast<Eigen::Index>(static_cast<std::size_t>(i) * stride[static_cast<std::size_t>(s)])) =
                    psi.amplitude(psi.index_of(levels));
            }
            levels[static_cast<std::size_t>(s)] = 0;
        }
        const double nrm = e.norm();
        if (nrm == 0.0) throw InputError("block carries no excitation amplitude");
        return Eigen::VectorXcd(e / nrm);
    };
    const Eigen::VectorXcd ep = excitation(p);
    const Eigen::VectorXcd eq = excitation(q);

    // Basis |00>, |0 e_q>, |e_p 0>, |e_p e_q> of the embedded two-qubit space.
    // The product e_p (x) e_q lives on index sums because p and q use disjoint sites.
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), 4);
    basis(0, 0) = 1.0;
    basis.col(1) = eq;
    basis.col(2) = ep;
    for (Eigen::Index i = 1; i < ep.size(); ++i) {
        if (ep(i) == Complex(0.0)) continue;
        for (Eigen::Index j = 1; j < eq.size(); ++j) {
            if (eq(j) != Complex(0.0)) basis(i + j, 3) += ep(i) * eq(j);
        }
    }

    const Eigen::MatrixXcd m = bipartite_amplitudes(psi, both);
    const Eigen::MatrixXcd projected = basis.adjoint() * m;
    const Eigen::Matrix4cd rho = projected * projected.adjoint();
    const double leaked = 1.0 - rho.trace().real();
    if (std::abs(leaked) > kSupportTolerance) {
        throw InputError("reduced state has weight " + std::to_string(leaked) +
                         " outside the effective two-qubit support; input is not GW-shaped");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    // ascending order: the two smallest must vanish
    if (es.eigenvalues()(1) > kSupportTolerance) {
        throw InputError("reduced state has rank above 2; input is not GW-shaped");
    }
    return EffectiveQubitState{DensityMatrix({2, 2}, rho), leaked};
}

double gw_block_concurrence_oracle(const PureStateVector& psi, const SiteSet& block_p, const SiteSet& block_q) {
    const int n = psi.sites();
    const SiteSet p = normalized_sites(block_p, n);
    const SiteSet q = normalized_sites(block_q, n);
    if (!disjoint(p, q)) throw InputError("blocks must be disjoint");
    if (block_excitation_weight(psi, p) == 0.0 || block_excitation_weight(psi, q) == 0.0) return 0.0;
    return wootters_concurrence(effective_two_qubit_state(psi, p, q).rho);
}

double printed_pair_concurrence_sq(const BlockCut& cut, PrintedPair pair) {
    const double n = cut.n;
    const double m = cut.m;
    const double a = cut.a;
    const double b = cut.b;
    auto block_pair = [&](double k) {
        const double t = std::sqrt((n - m) * (n - m) + 4.0 * k) - (n - m);
        return t * t / (n * n);
    };
    switch (pair) {
        case PrintedPair::top_cut: return 4.0 * m * (n - m) / (n * n);
        case PrintedPair::p11_p21: return block_pair(a * (b - m));
        case PrintedPair::p12_p21: return block_pair((m - a) * (b - m));
        case PrintedPair::p11_p22: return block_pair(a * (n - b));
        case PrintedPair::p12_p22: return block_pair((m - a) * (n - b));
        case PrintedPair::qubit_pair: {
            const double t = std::sqrt(4.0 + (n - 2.0) * (n - 2.0)) - (n - 2.0);
            return t * t / (n * n);
        }
    }
    throw InputError("unknown printed pair");
}

double lemma4_residual(const PureStateVector& psi, const Partition& partition, std::size_t s_index) {
    if (s_index >= partition.size()) throw InputError("block index out of range");
    if (partition.size() < 2) throw InputError("residual needs at least two blocks");
    if (partition.sites() != psi.sites()) throw InputError("partition and state disagree on the site count");

    const SiteSet& focus = partition.block(s_index);
    const SiteSet rest = partition.union_except(s_index);
    double whole = 0.0;
    if (partition.covers_all_sites()) {
        whole = concurrence_pure(psi, focus);
    } else {
        whole = gw_block_concurrence_oracle(psi, focus, rest);
    }
    double pairs = 0.0;
    for (std::size_t k = 0; k < partition.size(); ++k) {
        if (k == s_index) continue;
        const double c = gw_block_concurrence_oracle(psi, focus, partition.block(k));
        pairs += c * c;
    }
    return whole * whole - pairs;
}

}  // namespace gwmono
