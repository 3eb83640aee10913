#pragma once

#include <Eigen/Dense>

#include "netid/linalg.hpp"

namespace netid {

/// Effective resistances r(p,q) between all vertex pairs; a metric.
class ResistanceMatrix {
public:
    explicit ResistanceMatrix(Eigen::MatrixXd m) : matrix_(std::move(m)) {}

    int size() const { return static_cast<int>(matrix_.rows()); }
    const Eigen::MatrixXd& matrix() const { return matrix_; }
    double operator()(int p, int q) const { return matrix_(p, q); }

private:
    Eigen::MatrixXd matrix_;
};

/// r(p,q) = l+_pp - 2 l+_pq + l+_qq for all pairs.
ResistanceMatrix resistance_matrix(const PseudoInverse& lp);

/// Voltage j_p(q,s): potential at q relative to p when unit current enters
/// at s and exits at p. Computed as l+_pp - (l+_pq + l+_ps) + l+_qs, which
/// is bitwise symmetric in (q,s). Satisfies j_p(p,s) = 0 and
/// j_p(q,q) = r(p,q).
double voltage(const PseudoInverse& lp, int p, int q, int s);

/// Same quantity from resistances alone: (r(p,q) + r(p,s) - r(q,s)) / 2.
double voltage_from_resistance(const ResistanceMatrix& r, int p, int q, int s);

/// Branch voltages of the Y-equivalent network on three terminals.
struct YBranches {
    double at_p = 0.0;  // j_p(x,q)
    double at_q = 0.0;  // j_q(x,p)
    double at_x = 0.0;  // j_x(p,q)
};

/// Reduce the network to a 3-branch star on distinct terminals x, p, q.
/// The branches satisfy r(p,x) = at_p + at_x, r(q,x) = at_q + at_x,
/// r(p,q) = at_p + at_q.
YBranches y_reduction(const ResistanceMatrix& r, int x, int p, int q);

/// Equilibrium measure of the vertex set minus {base}: the unique solution
/// of L u = e - n e^base with u[base] = 0. Off-base values are positive on
/// connected graphs; min_off_base is provided for warning-level checks
/// (flag values below -1e-12).
struct EquilibriumMeasure {
    int base = 0;
    Eigen::VectorXd values;

    double min_off_base() const;
};

EquilibriumMeasure equilibrium_measure(const DiscreteLaplacian& lap, int i);

/// r(i,t) = (nu^i_t + nu^t_i) / n, the equilibrium-measure route.
double resistance_via_equilibrium(const DiscreteLaplacian& lap, int i, int t);

/// 2 j_i(s,t) = (nu^i_s + nu^s_i + nu^i_t + nu^t_i - nu^s_t - nu^t_s) / n.
double voltage_via_equilibrium(const DiscreteLaplacian& lap, int i, int s, int t);

/// All n equilibrium measures at once; row i holds nu^i. Amortizes the
/// grounded solves when many pairs or triples are queried.
class EquilibriumTable {
public:
    explicit EquilibriumTable(const DiscreteLaplacian& lap);

    int size() const { return static_cast<int>(nu_.rows()); }
    const Eigen::MatrixXd& matrix() const { return nu_; }
    double resistance(int i, int t) const;
    double voltage(int i, int s, int t) const;

private:
    Eigen::MatrixXd nu_;
};

}  // namespace netid
