#include "netid/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "netid/errors.hpp"

namespace netid {

namespace {

// %.17g round-trips doubles exactly; used for all text output.
std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void check_connected(int n, const std::vector<Edge>& edges) {
    if (n == 0)
        throw ConnectivityError("graph has no vertices");
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = n;
    for (const Edge& e : edges) {
        int ra = find(e.a), rb = find(e.b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    if (components != 1)
        throw ConnectivityError("graph is not connected (" + std::to_string(components) +
                                " components)");
}

}  // namespace

MetrizedGraph::MetrizedGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        if (vertices_[i].empty())
            throw ValueError("empty vertex identifier");
        if (!index_.emplace(vertices_[i], i).second)
            throw ValueError("duplicate vertex identifier '" + vertices_[i] + "'");
    }
    const int n = vertex_count();
    for (const Edge& e : edges_) {
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
            throw ValueError("edge endpoint out of range");
        if (!(e.length > 0.0) || !std::isfinite(e.length))
            throw ValueError("edge length must be positive and finite");
    }
    check_connected(n, edges_);
}

int MetrizedGraph::index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        throw ValueError("unknown vertex '" + std::string(id) + "'");
    return it->second;
}

std::optional<int> MetrizedGraph::find_vertex(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool MetrizedGraph::is_optimal() const {
    std::map<std::pair<int, int>, int> seen;
    for (const Edge& e : edges_) {
        if (e.a == e.b)
            return false;
        auto key = std::minmax(e.a, e.b);
        if (++seen[{key.first, key.second}] > 1)
            return false;
    }
    return true;
}

std::string MetrizedGraph::serialize() const {
    std::string out;
    for (const Edge& e : edges_) {
        out += vertices_[e.a];
        out += ' ';
        out += vertices_[e.b];
        out += ' ';
        out += format_double(e.length);
        out += '\n';
    }
    return out;
}

MetrizedGraph parse_edge_list(std::string_view text) {
    std::vector<std::string> vertices;
    std::unordered_map<std::string, int> index;
    std::vector<Edge> edges;

    auto intern = [&](const std::string& id) {
        auto it = index.find(id);
        if (it != index.end())
            return it->second;
        int i = static_cast<int>(vertices.size());
        vertices.push_back(id);
        index.emplace(id, i);
        return i;
    };

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, len_text, extra;
        if (!(fields >> a))
            continue;  // blank or comment-only line
        if (!(fields >> b >> len_text))
            throw ParseError(lineno, "expected '<id_a> <id_b> <length>'");
        if (fields >> extra)
            throw ParseError(lineno, "trailing token '" + extra + "'");

        std::size_t used = 0;
        double length;
        try {
            length = std::stod(len_text, &used);
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad length '" + len_text + "'");
        }
        if (used != len_text.size())
            throw ParseError(lineno, "bad length '" + len_text + "'");
        if (!(length > 0.0) || !std::isfinite(length))
            throw ValueError("line " + std::to_string(lineno) +
                             ": edge length must be positive and finite, got '" + len_text + "'");

        edges.push_back({intern(a), intern(b), length});
    }
    if (vertices.empty())
        throw ParseError(lineno, "no edges in input");
    return MetrizedGraph(std::move(vertices), std::move(edges));
}

MetrizedGraph optimalize(const MetrizedGraph& g) {
    std::vector<std::string> vertices = g.vertices();
    std::unordered_map<std::string, bool> taken;
    for (const auto& v : vertices) taken[v] = true;

    int counter = 0;
    auto fresh_vertex = [&]() {
        std::string name;
        do {
            name = "__sub" + std::to_string(counter++);
        } while (taken.count(name));
        taken[name] = true;
        vertices.push_back(name);
        return static_cast<int>(vertices.size()) - 1;
    };

    std::vector<Edge> edges;
    std::map<std::pair<int, int>, int> bundle_count;
    for (const Edge& e : g.edges()) {
        if (e.a == e.b) {
            // self-loop -> 3-cycle through two fresh vertices
            int s1 = fresh_vertex();
            int s2 = fresh_vertex();
            double third = e.length / 3.0;
            edges.push_back({e.a, s1, third});
            edges.push_back({s1, s2, third});
            edges.push_back({s2, e.b, third});
            continue;
        }
        auto key = std::minmax(e.a, e.b);
        if (++bundle_count[{key.first, key.second}] == 1) {
            edges.push_back(e);  // first edge of the bundle stays
        } else {
            int mid = fresh_vertex();
            double half = e.length / 2.0;
            edges.push_back({e.a, mid, half});
            edges.push_back({mid, e.b, half});
        }
    }
    return MetrizedGraph(std::move(vertices), std::move(edges));
}

ConductanceProfile conductance_profile(const MetrizedGraph& g) {
    if (!g.is_optimal())
        throw PreconditionError("conductance profile requires an optimal graph");
    const int n = g.vertex_count();
    ConductanceProfile profile;
    profile.pair = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        double c = 1.0 / e.length;
        profile.pair(e.a, e.b) = c;
        profile.pair(e.b, e.a) = c;
    }
    profile.vertex = profile.pair.rowwise().sum();
    return profile;
}

}  // namespace netid
