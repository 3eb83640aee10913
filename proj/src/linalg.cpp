#include "netid/linalg.hpp"

#include <cmath>

#include "netid/errors.hpp"

namespace netid {

DiscreteLaplacian::DiscreteLaplacian(Eigen::MatrixXd m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1)
        throw PreconditionError("Laplacian must be square and nonempty");
    const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
    if ((matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw PreconditionError("Laplacian must be symmetric");
    if (matrix_.rowwise().sum().cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw PreconditionError("Laplacian rows must sum to zero");
}

DiscreteLaplacian laplacian(const MetrizedGraph& g) {
    if (!g.is_optimal())
        throw PreconditionError("Laplacian requires an optimal graph");
    const int n = g.vertex_count();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        double c = 1.0 / e.length;
        m(e.a, e.b) -= c;
        m(e.b, e.a) -= c;
        m(e.a, e.a) += c;
        m(e.b, e.b) += c;
    }
    return DiscreteLaplacian(std::move(m));
}

PseudoInverse::PseudoInverse(Eigen::MatrixXd m, double condition_estimate)
    : matrix_(std::move(m)), condition_estimate_(condition_estimate) {}

PseudoInverse pseudo_inverse(const DiscreteLaplacian& lap) {
    const int n = lap.size();
    const double shift = 1.0 / n;
    Eigen::MatrixXd completed = lap.matrix().array() + shift;  // L + J/n, SPD for connected graphs

    Eigen::LDLT<Eigen::MatrixXd> solver(completed);
    if (solver.info() != Eigen::Success)
        throw NumericalError("factorization of L + J/n failed",
                             std::numeric_limits<double>::infinity());

    Eigen::MatrixXd inv = solver.solve(Eigen::MatrixXd::Identity(n, n));
    // one step of iterative refinement keeps the residual near roundoff
    inv += solver.solve(Eigen::MatrixXd::Identity(n, n) - completed * inv);
    if (!inv.allFinite())
        throw NumericalError("L + J/n is numerically singular",
                             std::numeric_limits<double>::infinity());

    double cond = completed.cwiseAbs().colwise().sum().maxCoeff() *
                  inv.cwiseAbs().colwise().sum().maxCoeff();

    Eigen::MatrixXd pinv = inv.array() - shift;
    pinv = ((pinv + pinv.transpose()) / 2.0).eval();  // exact symmetry
    return PseudoInverse(std::move(pinv), cond);
}

Eigen::VectorXd solve_centered(const DiscreteLaplacian& lap, const Eigen::VectorXd& b, int pin) {
    const int n = lap.size();
    if (b.size() != n)
        throw PreconditionError("right-hand side has wrong dimension");
    if (pin < 0 || pin >= n)
        throw PreconditionError("pin vertex out of range");
    const double total = b.sum();
    if (std::abs(total) > 1e-9 * std::max(1.0, b.cwiseAbs().sum()))
        throw InconsistentSystemError("right-hand side entries must sum to zero (sum = " +
                                      std::to_string(total) + ")");
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    if (n == 1)
        return u;

    // grounded solve: drop the pin row/column, factor the reduced SPD block
    Eigen::MatrixXd reduced(n - 1, n - 1);
    Eigen::VectorXd rhs(n - 1);
    for (int i = 0, ri = 0; i < n; ++i) {
        if (i == pin)
            continue;
        rhs(ri) = b(i);
        for (int j = 0, rj = 0; j < n; ++j) {
            if (j == pin)
                continue;
            reduced(ri, rj) = lap.matrix()(i, j);
            ++rj;
        }
        ++ri;
    }
    Eigen::LDLT<Eigen::MatrixXd> solver(reduced);
    if (solver.info() != Eigen::Success)
        throw NumericalError("grounded Laplacian factorization failed",
                             std::numeric_limits<double>::infinity());
    Eigen::VectorXd sol = solver.solve(rhs);
    sol += solver.solve(rhs - reduced * sol);
    if (!sol.allFinite())
        throw NumericalError("grounded Laplacian solve produced non-finite values",
                             std::numeric_limits<double>::infinity());
    for (int i = 0, ri = 0; i < n; ++i) {
        if (i == pin)
            continue;
        u(i) = sol(ri++);
    }
    return u;
}

}  // namespace netid
