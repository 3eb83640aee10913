#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "netid/linalg.hpp"
#include "netid/markov.hpp"
#include "netid/network.hpp"

namespace netid {

enum class CheckName {
    theorem_main,
    corollary_main,
    recurrence,
    trans2,
    low_order_1,
    low_order_2,
    low_order_3,
    low_order_4,
};

std::string to_string(CheckName name);
CheckName check_name_from_string(const std::string& s);

/// Outcome of one certified identity: both sides, the residual
/// |lhs - rhs|, and pass iff residual <= tol * max(1, |rhs|).
struct IdentityCheck {
    CheckName name = CheckName::theorem_main;
    int k = 0;                          // step count, or the order for low_order_*
    std::optional<std::string> source;  // source vertex s where applicable
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool pass = false;

    bool operator==(const IdentityCheck&) const = default;
};

/// Aggregate of every identity check run on one graph.
struct IdentityReport {
    int n = 0;
    int e = 0;
    double tolerance = 0.0;
    std::vector<IdentityCheck> checks;
    bool pass = false;

    bool operator==(const IdentityReport&) const = default;
};

/// JSON of the shape
/// {"graph":{"n":..,"e":..},"tolerance":..,"checks":[{"name":..,"k":..,
///  "s":..|null,"lhs":..,"rhs":..,"residual":..,"pass":..},...],"pass":..}
/// with numbers printed to 17 significant digits.
std::string report_to_json(const IdentityReport& report);
IdentityReport report_from_json(const std::string& text);

/// Precomputed operators for the identity checks on one optimal graph.
///
/// Voltages and resistances are evaluated through the pseudoinverse;
/// conductances, the transition kernel and its traces come from the graph
/// directly. The two-graph constructor feeds the pseudoinverse path from a
/// different graph — a deliberate fault-injection hook for negative
/// controls (the identities hold on every consistent graph, so only
/// mismatched inputs can make them fail).
class IdentitySuite {
public:
    explicit IdentitySuite(const MetrizedGraph& g, double tolerance = 1e-8);
    IdentitySuite(const MetrizedGraph& g, const MetrizedGraph& lhs_graph, double tolerance);

    const MetrizedGraph& graph() const { return graph_; }
    double tolerance() const { return tolerance_; }
    const PseudoInverse& pinv() const { return pinv_; }
    const ResistanceMatrix& resistance() const { return resist_; }
    TransitionKernel& kernel() { return kernel_; }

    /// sum_{i,t} C_i j_i(s,t) p_it^(k)  vs  n - k + sum_{i<k} tr(P^i).
    IdentityCheck theorem_main(int s, int k);

    /// (1/2) sum_{i,t} C_i r(i,t) p_it^(k)  vs the same right side; at
    /// k = 1 the left side is the classical sum of r(edge)/length = n - 1.
    IdentityCheck extended_foster(int k);

    /// Level-k pair: the one-step recurrence
    ///   S(k+1) = 1 - tr(P^k) + S(k),  S(k) = sum_{i,t} C_i l+_it p_it^(k),
    /// and its closed form
    ///   S(k) = k - n - sum_{i<k} tr(P^i) + sum_i C_i l+_ii.
    std::array<IdentityCheck, 2> recurrence(int k);

    /// Symmetrized low-order identity (orders 1..4): half the ordered
    /// walk-sum of voltages against the displayed conductance right side
    /// with v = n. The right side's conductance sums are evaluated
    /// directly from edges and triangles, not via traces.
    IdentityCheck low_order(int s, int order);

    /// The order-restricted ("p < q") sums as displayed, evaluated
    /// verbatim against the construction vertex order. Order-dependent
    /// under this voltage convention, hence diagnostic only: no pass/fail.
    double low_order_literal(int s, int order);

    /// Direct conductance sums bridging the low-order right sides to
    /// traces: sum over ordered adjacent pairs of C_pq^2/(C_p C_q), which
    /// equals tr(P^2), and the ordered-triangle sum, which equals tr(P^3).
    double adjacent_pair_conductance_sum() const;
    double triangle_conductance_sum() const;

    /// Run theorem_main for every requested source and k <= kmax,
    /// extended_foster / recurrence / trans2 for k <= kmax, and low_order
    /// orders 1..4; aggregate in deterministic (name, s, k) order.
    IdentityReport full_report(std::optional<int> source, int kmax);

private:
    double volt(int base, int y, int z) const;
    IdentityCheck make_check(CheckName name, int k, std::optional<int> s, double lhs, double rhs) const;
    double rhs_main(int k);

    MetrizedGraph graph_;
    double tolerance_;
    ConductanceProfile profile_;
    DiscreteLaplacian lap_;
    PseudoInverse pinv_;
    ResistanceMatrix resist_;
    TransitionKernel kernel_;
    std::vector<std::vector<int>> neighbors_;
};

// One-shot wrappers over IdentitySuite.
IdentityCheck theorem_main_check(const MetrizedGraph& g, int s, int k, double tolerance = 1e-8);
IdentityCheck extended_foster_check(const MetrizedGraph& g, int k, double tolerance = 1e-8);
std::array<IdentityCheck, 2> recurrence_check(const MetrizedGraph& g, int k, double tolerance = 1e-8);
IdentityCheck low_order_identity(const MetrizedGraph& g, int s, int order, double tolerance = 1e-8);
double low_order_literal(const MetrizedGraph& g, int s, int order);
IdentityReport full_report(const MetrizedGraph& g, std::optional<int> source, int kmax,
                           double tolerance = 1e-8);

}  // namespace netid
