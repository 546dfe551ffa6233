#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mwroute/errors.hpp"

namespace mwroute {

/// Positive reciprocal pairwise comparison matrix ("1-9 scale" scores).
class PairwiseMatrix {
  public:
    PairwiseMatrix(std::size_t order, std::vector<double> entries)
        : order_(order), entries_(std::move(entries)) {
        if (order_ < 2) throw ValidationError("pairwise matrix order must be >= 2");
        if (entries_.size() != order_ * order_)
            throw ValidationError("pairwise matrix needs " + std::to_string(order_ * order_) +
                                  " entries, got " + std::to_string(entries_.size()));
    }

    static PairwiseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        std::vector<double> flat;
        for (const auto& row : rows)
            for (double v : row) flat.push_back(v);
        return PairwiseMatrix(rows.size(), std::move(flat));
    }

    double at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    std::size_t order() const { return order_; }

    /// Throws NonReciprocalMatrix unless entries are positive, the diagonal is
    /// 1 and a_ji = 1/a_ij, all within 1e-9.
    void require_reciprocal() const {
        for (std::size_t i = 0; i < order_; ++i) {
            if (std::abs(at(i, i) - 1.0) > 1e-9)
                throw NonReciprocalMatrix("diagonal entry (" + std::to_string(i) + "," +
                                          std::to_string(i) + ") must be 1");
            for (std::size_t j = 0; j < order_; ++j) {
                if (!(at(i, j) > 0))
                    throw NonReciprocalMatrix("entry (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") must be positive");
                if (j > i && std::abs(at(j, i) - 1.0 / at(i, j)) > 1e-9)
                    throw NonReciprocalMatrix("entries (" + std::to_string(i) + "," + std::to_string(j) +
                                              ") and (" + std::to_string(j) + "," + std::to_string(i) +
                                              ") are not reciprocal");
            }
        }
    }

  private:
    std::size_t order_;
    std::vector<double> entries_;
};

struct AhpResult {
    std::vector<double> weights;     // principal eigenvector, normalized to sum 1
    double lambda_max = 0.0;
    double consistency_index = 0.0;  // (lambda_max - n) / (n - 1)
    double consistency_ratio = 0.0;  // CI / RI(n), informational only
    bool consistent = false;         // CI < 0.1
};

/// Saaty's random index for matrices of order n (informational CR only).
inline double saaty_random_index(std::size_t n) {
    static constexpr double table[] = {0.0,  0.0,  0.0,  0.58, 0.90, 1.12,
                                       1.24, 1.32, 1.41, 1.45, 1.49};
    return n < std::size(table) ? table[n] : 1.49;
}

/// Principal eigenpair of the comparison matrix by power iteration
/// (uniform start, L1 normalization, tolerance 1e-10, at most 1000 steps).
inline AhpResult derive_weights(const PairwiseMatrix& pcm) {
    pcm.require_reciprocal();
    const std::size_t n = pcm.order();

    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> y(n);
    double lambda = 0.0;
    bool converged = false;
    for (int step = 0; step < 1000 && !converged; ++step) {
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += pcm.at(i, j) * x[j];
            y[i] = acc;
            norm += acc;
        }
        // x is L1-normalized, so the norm of A*x estimates the eigenvalue
        lambda = norm;
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] /= norm;
            delta = std::max(delta, std::abs(y[i] - x[i]));
        }
        x.swap(y);
        converged = delta < 1e-10;
    }
    if (!converged)
        throw ConvergenceFailure("power iteration did not converge within 1000 steps");

    AhpResult r;
    r.weights = std::move(x);
    r.lambda_max = lambda;
    r.consistency_index = (lambda - static_cast<double>(n)) / (static_cast<double>(n) - 1.0);
    r.consistency_ratio = n <= 2 ? 0.0 : r.consistency_index / saaty_random_index(n);
    r.consistent = r.consistency_index < 0.1;
    return r;
}

/// Built-in comparison of the four risk criteria, in the order population
/// density, property loss, environment pollution, other accident effects.
/// The (other, environment) cell is the reciprocal completion of the scored
/// table, which as published was not reciprocal in that one pair.
inline const PairwiseMatrix& default_pcm() {
    static const PairwiseMatrix pcm = PairwiseMatrix::from_rows({
        {1.0, 2.0, 7.0, 5.0},
        {1.0 / 2.0, 1.0, 5.0, 3.0},
        {1.0 / 7.0, 1.0 / 5.0, 1.0, 1.0 / 2.0},
        {1.0 / 5.0, 1.0 / 3.0, 2.0, 1.0},
    });
    return pcm;
}

} // namespace mwroute
