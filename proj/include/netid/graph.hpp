#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace netid {

/// An undirected edge between two vertex indices. The length is the
/// resistance of the segment in ohms; its reciprocal is the conductance.
struct Edge {
    int a = 0;
    int b = 0;
    double length = 0.0;

    bool operator==(const Edge&) const = default;
};

/// A finite connected weighted multigraph viewed as a resistive network.
///
/// Vertices are opaque string identifiers; their order is fixed at
/// construction (first appearance in the input) and determines matrix
/// indexing everywhere else in the library. Self-loops and parallel edges
/// are permitted here; optimalize() removes them. Instances are immutable
/// after construction and safe to read from multiple threads.
class MetrizedGraph {
public:
    MetrizedGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& vertex_name(int i) const { return vertices_.at(i); }

    /// Index of a vertex id; throws ValueError if unknown.
    int index_of(std::string_view id) const;
    std::optional<int> find_vertex(std::string_view id) const;

    /// True when the graph has no self-loops and no parallel edges.
    bool is_optimal() const;

    /// Edge-list text that parse_edge_list() maps back to this graph.
    std::string serialize() const;

    bool operator==(const MetrizedGraph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, int> index_;
};

/// Parse the edge-list format: one `<id_a> <id_b> <length>` per line,
/// whitespace-separated, `#` starts a comment, blank lines ignored.
MetrizedGraph parse_edge_list(std::string_view text);

/// Return an equivalent graph with no self-loops and no parallel edges.
///
/// Each self-loop of length L becomes a 3-cycle through two fresh
/// valence-2 vertices with segments L/3 each; within a parallel bundle the
/// first edge is kept and every other edge is split at its midpoint. Fresh
/// vertices are named "__sub<k>". Resistances between original vertices
/// are unchanged; already-optimal graphs come back structurally equal.
MetrizedGraph optimalize(const MetrizedGraph& g);

/// Pairwise and per-vertex conductances of an optimal graph.
struct ConductanceProfile {
    Eigen::MatrixXd pair;    // C_pq = C_qp = 1/length, 0 on the diagonal and for non-adjacent pairs
    Eigen::VectorXd vertex;  // C_p = row sum of pair
};

/// Conductances of an optimal graph; throws PreconditionError otherwise.
ConductanceProfile conductance_profile(const MetrizedGraph& g);

}  // namespace netid
