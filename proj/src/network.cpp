#include "netid/network.hpp"

#include "netid/errors.hpp"

namespace netid {

ResistanceMatrix resistance_matrix(const PseudoInverse& lp) {
    const Eigen::MatrixXd& m = lp.matrix();
    Eigen::VectorXd diag = m.diagonal();
    Eigen::MatrixXd r = diag.replicate(1, lp.size()) + diag.transpose().replicate(lp.size(), 1) -
                        2.0 * m;
    r.diagonal().setZero();
    return ResistanceMatrix(std::move(r));
}

double voltage(const PseudoInverse& lp, int p, int q, int s) {
    const Eigen::MatrixXd& m = lp.matrix();
    // grouped so that swapping q and s gives the bitwise-identical result
    return m(p, p) - (m(p, q) + m(p, s)) + m(q, s);
}

double voltage_from_resistance(const ResistanceMatrix& r, int p, int q, int s) {
    return (r(p, q) + r(p, s) - r(q, s)) / 2.0;
}

YBranches y_reduction(const ResistanceMatrix& r, int x, int p, int q) {
    if (x == p || x == q || p == q)
        throw PreconditionError("Y-reduction requires three distinct vertices");
    YBranches out;
    out.at_p = (r(p, x) + r(p, q) - r(q, x)) / 2.0;
    out.at_q = (r(q, x) + r(q, p) - r(p, x)) / 2.0;
    out.at_x = (r(x, p) + r(x, q) - r(p, q)) / 2.0;
    return out;
}

double EquilibriumMeasure::min_off_base() const {
    double m = std::numeric_limits<double>::infinity();
    for (int t = 0; t < values.size(); ++t)
        if (t != base)
            m = std::min(m, values(t));
    return m;
}

EquilibriumMeasure equilibrium_measure(const DiscreteLaplacian& lap, int i) {
    const int n = lap.size();
    if (i < 0 || i >= n)
        throw PreconditionError("base vertex out of range");
    Eigen::VectorXd b = Eigen::VectorXd::Ones(n);
    b(i) -= n;
    return EquilibriumMeasure{i, solve_centered(lap, b, i)};
}

double resistance_via_equilibrium(const DiscreteLaplacian& lap, int i, int t) {
    if (i == t)
        return 0.0;
    EquilibriumMeasure nu_i = equilibrium_measure(lap, i);
    EquilibriumMeasure nu_t = equilibrium_measure(lap, t);
    return (nu_i.values(t) + nu_t.values(i)) / lap.size();
}

double voltage_via_equilibrium(const DiscreteLaplacian& lap, int i, int s, int t) {
    EquilibriumMeasure nu_i = equilibrium_measure(lap, i);
    EquilibriumMeasure nu_s = equilibrium_measure(lap, s);
    EquilibriumMeasure nu_t = equilibrium_measure(lap, t);
    double sum = nu_i.values(s) + nu_s.values(i) + nu_i.values(t) + nu_t.values(i) -
                 nu_s.values(t) - nu_t.values(s);
    return sum / (2.0 * lap.size());
}

EquilibriumTable::EquilibriumTable(const DiscreteLaplacian& lap) {
    const int n = lap.size();
    nu_.resize(n, n);
    for (int i = 0; i < n; ++i)
        nu_.row(i) = equilibrium_measure(lap, i).values.transpose();
}

double EquilibriumTable::resistance(int i, int t) const {
    return (nu_(i, t) + nu_(t, i)) / size();
}

double EquilibriumTable::voltage(int i, int s, int t) const {
    double sum = nu_(i, s) + nu_(s, i) + nu_(i, t) + nu_(t, i) - nu_(s, t) - nu_(t, s);
    return sum / (2.0 * size());
}

}  // namespace netid
