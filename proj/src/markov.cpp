#include "netid/markov.hpp"

#include <random>

#include "netid/errors.hpp"
#include "netid/rng.hpp"

namespace netid {

TransitionKernel::TransitionKernel(const ConductanceProfile& profile) : cond_(profile.vertex) {
    const int n = static_cast<int>(cond_.size());
    if (n < 2)
        throw PreconditionError("transition kernel needs at least two vertices");
    for (int i = 0; i < n; ++i)
        if (!(cond_(i) > 0.0))
            throw PreconditionError("vertex conductance must be positive");
    powers_.push_back((profile.pair.array().colwise() / cond_.array()).matrix());
}

const Eigen::MatrixXd& TransitionKernel::kstep(int k) {
    if (k < 1)
        throw DomainError("step count must be >= 1");
    while (static_cast<int>(powers_.size()) < k)
        powers_.push_back(powers_.back() * powers_.front());
    return powers_[k - 1];
}

std::vector<double> TransitionKernel::trace_sequence(int kmax) {
    if (kmax < 1)
        throw DomainError("kmax must be >= 1");
    std::vector<double> traces;
    traces.reserve(kmax);
    for (int k = 1; k <= kmax; ++k)
        traces.push_back(kstep(k).trace());
    return traces;
}

TransitionKernel transition_matrix(const ConductanceProfile& profile) {
    return TransitionKernel(profile);
}

Eigen::VectorXd simulate_kstep_frequencies(const MetrizedGraph& g, int start, int k,
                                           std::int64_t walks, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (start < 0 || start >= n)
        throw PreconditionError("start vertex out of range");
    if (k < 1)
        throw DomainError("step count must be >= 1");
    if (walks < 1)
        throw PreconditionError("need at least one walk");

    ConductanceProfile profile = conductance_profile(g);

    // per-vertex neighbor lists with cumulative step probabilities
    std::vector<std::vector<int>> nbr(n);
    std::vector<std::vector<double>> cum(n);
    for (int i = 0; i < n; ++i) {
        if (!(profile.vertex(i) > 0.0))
            throw PreconditionError("walk visits a vertex with no neighbors");
        double acc = 0.0;
        for (int t = 0; t < n; ++t) {
            if (profile.pair(i, t) > 0.0) {
                acc += profile.pair(i, t) / profile.vertex(i);
                nbr[i].push_back(t);
                cum[i].push_back(acc);
            }
        }
        cum[i].back() = 1.0;  // guard against roundoff in the last slot
    }

    std::mt19937_64 gen(seed);
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(n);
    for (std::int64_t w = 0; w < walks; ++w) {
        int at = start;
        for (int step = 0; step < k; ++step) {
            double u = uniform_unit(gen);
            const auto& c = cum[at];
            std::size_t lo = 0;
            while (c[lo] <= u) ++lo;
            at = nbr[at][lo];
        }
        counts(at) += 1.0;
    }
    return counts / static_cast<double>(walks);
}

}  // namespace netid
