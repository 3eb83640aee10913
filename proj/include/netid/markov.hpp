#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "netid/graph.hpp"

namespace netid {

/// The reversible Markov chain of the network: P = (p_it) with
/// p_it = C_it / C_i. Row-stochastic; the diagonal is zero on optimal
/// graphs, so tr(P) = 0. Powers are memoized on first use; the power cache
/// is the only mutable state, so share a kernel across threads only after
/// the powers you need have been materialized.
class TransitionKernel {
public:
    explicit TransitionKernel(const ConductanceProfile& profile);

    int size() const { return static_cast<int>(cond_.size()); }
    const Eigen::MatrixXd& matrix() const { return powers_.front(); }
    const Eigen::VectorXd& vertex_conductance() const { return cond_; }

    /// k-th power of P, k >= 1. Throws DomainError for k = 0 (steps are
    /// counted from 1).
    const Eigen::MatrixXd& kstep(int k);

    /// tr(P^1) .. tr(P^kmax).
    std::vector<double> trace_sequence(int kmax);

private:
    Eigen::VectorXd cond_;
    std::vector<Eigen::MatrixXd> powers_;  // powers_[k-1] = P^k
};

/// Kernel of the chain whose step distribution from i is C_it / C_i.
TransitionKernel transition_matrix(const ConductanceProfile& profile);

/// Empirical distribution of the walk position after exactly k steps over
/// `walks` independent runs started at `start`. Fully determined by the
/// seed.
Eigen::VectorXd simulate_kstep_frequencies(const MetrizedGraph& g, int start, int k,
                                           std::int64_t walks, std::uint64_t seed);

}  // namespace netid
