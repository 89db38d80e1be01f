#include "gwmono/convex_roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gwmono/errors.hpp"

namespace gwmono {

namespace {

constexpr double kRankTolerance = 1e-10;

class DecompositionObjective {
public:
    DecompositionObjective(Eigen::Matrix<Complex, 4, Eigen::Dynamic> weighted, int size, const UEParams& params)
        : weighted_(std::move(weighted)), size_(size), params_(params) {}

    int rank() const { return static_cast<int>(weighted_.cols()); }
    int dimension() const { return 2 * size_ * rank(); }

    double operator()(const std::vector<double>& x) const {
        const int r = rank();
        Eigen::MatrixXcd w(size_, r);
        for (int i = 0; i < size_; ++i) {
            for (int j = 0; j < r; ++j) {
                const auto k = static_cast<std::size_t>(2 * (i * r + j));
                w(i, j) = Complex(x[k], x[k + 1]);
            }
        }
        // Modified Gram-Schmidt on the columns.
        for (int j = 0; j < r; ++j) {
            for (int k = 0; k < j; ++k) w.col(j) -= w.col(k).dot(w.col(j)) * w.col(k);
            const double nrm = w.col(j).norm();
            if (nrm < 1e-12) return std::numeric_limits<double>::infinity();
            w.col(j) /= nrm;
        }
        double total = 0.0;
        for (int i = 0; i < size_; ++i) {
            Eigen::Vector4cd phi = weighted_ * w.row(i).transpose();
            const double p = phi.squaredNorm();
            if (p < 1e-300) continue;
            phi /= std::sqrt(p);
            total += p * two_qubit_pure_ue(phi, params_);
        }
        return total;
    }

private:
    Eigen::Matrix<Complex, 4, Eigen::Dynamic> weighted_;
    int size_;
    UEParams params_;
};

struct SearchOutcome {
    std::vector<double> x;
    double value;
    bool converged;
    long evaluations;
};

// Coordinate pattern search: probe +-step along each axis, accept the first
// improvement, halve the step after a sweep without progress.
SearchOutcome pattern_search(const DecompositionObjective& objective, std::vector<double> x,
                             const ConvexRoofOptions& options) {
    double best = objective(x);
    long evaluations = 1;
    double step = options.initial_step;
    while (step > options.step_tolerance) {
        if (evaluations >= options.max_evaluations_per_restart) return {x, best, false, evaluations};
        bool improved = false;
        for (std::size_t k = 0; k < x.size(); ++k) {
            for (double dir : {1.0, -1.0}) {
                const double saved = x[k];
                x[k] = saved + dir * step;
                const double v = objective(x);
                ++evaluations;
                if (v < best) {
                    best = v;
                    improved = true;
                    break;
                }
                x[k] = saved;
            }
        }
        if (!improved) step *= 0.5;
    }
    return {x, best, true, evaluations};
}

}  // namespace

double two_qubit_pure_ue(const Eigen::Vector4cd& phi, const UEParams& params) {
    Eigen::Matrix2cd m;
    m << phi(0), phi(1), phi(2), phi(3);
    const Eigen::Matrix2cd rho_a = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho_a, Eigen::EigenvaluesOnly);
    const double weights[2] = {std::max(0.0, es.eigenvalues()(0)), std::max(0.0, es.eigenvalues()(1))};
    return unified_entropy_of_spectrum(weights, params);
}

ConvexRoofResult convex_roof_ue_rank2(const DensityMatrix& rho, const UEParams& params, Rng& rng,
                                      const ConvexRoofOptions& options) {
    if (rho.dims() != std::vector<int>{2, 2}) throw InputError("convex roof oracle needs a two-qubit state");
    if (options.decomposition_size < 1 || options.restarts < 1) throw InputError("invalid minimizer options");

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix());
    // ascending eigenvalues
    if (es.eigenvalues()(1) > kRankTolerance) throw InputError("convex roof oracle needs rank <= 2");
    std::vector<int> support;
    for (int k = 3; k >= 2; --k) {
        if (es.eigenvalues()(k) > kRankTolerance) support.push_back(k);
    }
    const int rank = static_cast<int>(support.size());
    Eigen::Matrix<Complex, 4, Eigen::Dynamic> weighted(4, rank);
    for (int j = 0; j < rank; ++j) {
        const int k = support[static_cast<std::size_t>(j)];
        weighted.col(j) = es.eigenvectors().col(k) * std::sqrt(es.eigenvalues()(k));
    }

    ConvexRoofResult result;
    std::vector<double> warm;  // best point of the previous size
    const int largest = std::max(options.decomposition_size, rank);
    for (int size = rank; size <= largest; ++size) {
        const DecompositionObjective objective(weighted, size, params);
        double best = std::numeric_limits<double>::infinity();
        std::vector<double> best_x;
        for (int restart = 0; restart < options.restarts; ++restart) {
            std::vector<double> x(static_cast<std::size_t>(objective.dimension()));
            if (restart == 0 && !warm.empty()) {
                // previous rows, plus one zero row (an empty decomposition element)
                std::fill(x.begin(), x.end(), 0.0);
                std::copy(warm.begin(), warm.end(), x.begin());
            } else {
                for (auto& v : x) v = rng.normal();
            }
            const SearchOutcome out = pattern_search(objective, std::move(x), options);
            result.evaluations += out.evaluations;
            result.converged = result.converged && out.converged;
            if (out.value < best) {
                best = out.value;
                best_x = out.x;
            }
        }
        result.best_by_size.push_back(best);
        warm = std::move(best_x);
    }
    result.value = result.best_by_size.back();
    return result;
}

}  // namespace gwmono
