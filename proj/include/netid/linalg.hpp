#pragma once

#include <Eigen/Dense>

#include "netid/graph.hpp"

namespace netid {

/// The discrete Laplacian L = D - A of an optimal graph: symmetric, doubly
/// centered, off-diagonals -1/length for adjacent pairs, rank n-1 when the
/// graph is connected.
class DiscreteLaplacian {
public:
    explicit DiscreteLaplacian(Eigen::MatrixXd m);

    int size() const { return static_cast<int>(matrix_.rows()); }
    const Eigen::MatrixXd& matrix() const { return matrix_; }

private:
    Eigen::MatrixXd matrix_;
};

/// Build the discrete Laplacian of an optimal graph.
DiscreteLaplacian laplacian(const MetrizedGraph& g);

/// The Moore-Penrose pseudoinverse of a discrete Laplacian, computed by the
/// rank-completion formula (L + J/n)^-1 - J/n. Symmetric (enforced exactly),
/// doubly centered and positive semi-definite up to roundoff.
class PseudoInverse {
public:
    PseudoInverse(Eigen::MatrixXd m, double condition_estimate);

    int size() const { return static_cast<int>(matrix_.rows()); }
    const Eigen::MatrixXd& matrix() const { return matrix_; }

    /// 1-norm condition estimate of L + J/n.
    double condition_estimate() const { return condition_estimate_; }
    /// Warning flag: condition estimate above 1e12. Results are still returned.
    bool condition_warning() const { return condition_estimate_ > 1e12; }

private:
    Eigen::MatrixXd matrix_;
    double condition_estimate_;
};

PseudoInverse pseudo_inverse(const DiscreteLaplacian& lap);

/// Solve the singular system L u = b for the unique u with u[pin] = 0.
/// Requires b centered (entries summing to ~0); throws
/// InconsistentSystemError otherwise. Implemented as a grounded solve: the
/// pin row/column is removed and the reduced SPD system factored, so
/// u[pin] = 0 holds exactly.
Eigen::VectorXd solve_centered(const DiscreteLaplacian& lap, const Eigen::VectorXd& b, int pin);

}  // namespace netid
