#include "netid/random_graph.hpp"

#include <random>

#include "netid/errors.hpp"
#include "netid/rng.hpp"

namespace netid {

MetrizedGraph generate_random_graph(int n, double edge_prob, double min_length, double max_length,
                                    std::uint64_t seed) {
    if (n < 2)
        throw PreconditionError("random graph needs n >= 2");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw PreconditionError("edge probability must be in [0, 1]");
    if (!(min_length > 0.0) || !(max_length >= min_length))
        throw PreconditionError("length range must satisfy 0 < min <= max");

    std::mt19937_64 gen(seed);
    auto length = [&]() {
        return min_length == max_length ? min_length : uniform_real(gen, min_length, max_length);
    };

    std::vector<std::string> vertices;
    vertices.reserve(n);
    for (int i = 0; i < n; ++i)
        vertices.push_back("v" + std::to_string(i));

    std::vector<Edge> edges;
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    // spanning tree: attach each vertex to a random earlier one
    for (int i = 1; i < n; ++i) {
        int j = static_cast<int>(uniform_below(gen, i));
        edges.push_back({j, i, length()});
        present[i][j] = present[j][i] = true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (present[i][j])
                continue;
            if (uniform_unit(gen) < edge_prob)
                edges.push_back({i, j, length()});
        }
    return MetrizedGraph(std::move(vertices), std::move(edges));
}

}  // namespace netid
