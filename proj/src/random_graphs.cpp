#include "chipfire/random_graphs.hpp"

#include <set>

#include "chipfire/errors.hpp"

namespace chipfire {

Graph random_connected_graph(std::size_t n, double edge_probability, Rng& rng) {
    if (n == 0) throw InputError("random graph needs n >= 1");
    if (!(edge_probability > 0.0) || edge_probability > 1.0)
        throw InputError("edge probability must lie in (0, 1]");
    std::bernoulli_distribution coin(edge_probability);
    while (true) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        if (is_connected(g)) return g;
    }
}

Graph tree_from_pruefer(const std::vector<Vertex>& sequence) {
    const std::size_t n = sequence.size() + 2;
    std::vector<std::size_t> remaining_degree(n, 1);
    for (Vertex v : sequence) {
        if (v >= n) throw InputError("Pruefer entry out of range");
        ++remaining_degree[v];
    }
    std::set<Vertex> current_leaves;
    for (Vertex v = 0; v < n; ++v)
        if (remaining_degree[v] == 1) current_leaves.insert(v);

    std::vector<Edge> edges;
    for (Vertex v : sequence) {
        const Vertex leaf = *current_leaves.begin();
        current_leaves.erase(current_leaves.begin());
        edges.emplace_back(leaf, v);
        if (--remaining_degree[v] == 1) current_leaves.insert(v);
    }
    edges.emplace_back(*current_leaves.begin(), *current_leaves.rbegin());
    return Graph::from_edge_list(n, edges);
}

Graph random_tree(std::size_t n, Rng& rng) {
    if (n == 0) throw InputError("random tree needs n >= 1");
    if (n == 1) return complete(1);
    if (n == 2) return path(2);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::vector<Vertex> sequence(n - 2);
    for (Vertex& v : sequence) v = pick(rng);
    return tree_from_pruefer(sequence);
}

std::vector<Graph> all_labeled_trees(std::size_t n) {
    if (n == 0) throw InputError("trees need n >= 1");
    if (n == 1) return {complete(1)};
    if (n == 2) return {path(2)};
    std::vector<Graph> out;
    std::vector<Vertex> sequence(n - 2, 0);
    while (true) {
        out.push_back(tree_from_pruefer(sequence));
        // Odometer increment over [0, n)^(n-2).
        std::size_t i = 0;
        while (i < sequence.size() && ++sequence[i] == n) sequence[i++] = 0;
        if (i == sequence.size()) break;
    }
    return out;
}

}  // namespace chipfire
