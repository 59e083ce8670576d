#include "chipfire/graph.hpp"

#include <algorithm>
#include <string>

#include "chipfire/errors.hpp"

namespace chipfire {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw InputError("vertex set contains duplicates");
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n * n, 0) {
    for (const auto& [u, v] : edges_) {
        adjacency_[u * n_ + v] = 1;
        adjacency_[v * n_ + u] = 1;
    }
}

Graph Graph::from_edge_list(std::size_t n, const std::vector<Edge>& pairs) {
    if (n == 0) throw InputError("graph must have at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

std::size_t Graph::degree(Vertex v) const {
    return static_cast<std::size_t>(
        std::count(adjacency_.begin() + static_cast<std::ptrdiff_t>(v * n_),
                   adjacency_.begin() + static_cast<std::ptrdiff_t>((v + 1) * n_), 1));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n_; ++w)
        if (adjacent(v, w)) out.push_back(w);
    return out;
}

Graph complete(std::size_t m) {
    if (m == 0) throw InputError("complete graph needs m >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(m, edges);
}

Graph path(std::size_t m) {
    if (m == 0) throw InputError("path graph needs m >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(m, edges);
}

Graph cycle(std::size_t m) {
    if (m < 3) throw InputError("cycle graph needs m >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(m - 1, 0);
    return Graph::from_edge_list(m, edges);
}

Graph join(const Graph& g1, const Graph& g2) {
    const std::size_t k1 = g1.vertex_count();
    const std::size_t k2 = g2.vertex_count();
    std::vector<Edge> edges = g1.edges();
    edges.reserve(edges.size() + g2.edge_count() + k1 * k2);
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + k1, v + k1);
    for (Vertex u = 0; u < k1; ++u)
        for (Vertex v = 0; v < k2; ++v) edges.emplace_back(u, v + k1);
    return Graph::from_edge_list(k1 + k2, edges);
}

Graph cone(const Graph& g, std::size_t n) {
    if (n == 0) throw InputError("cone size must be >= 1");
    return join(g, complete(n));
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w = 0; w < n; ++w) {
            if (!seen[w] && g.adjacent(u, w)) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::size_t degree(const Graph& g, Vertex v) {
    if (v >= g.vertex_count()) throw InputError("vertex out of range");
    return g.degree(v);
}

VertexSet leaves(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return VertexSet(std::move(out));
}

bool is_tree(const Graph& g) {
    return g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool has_conformity_property(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw InputError("conformity set must be nonempty");
    const auto& m = s.members();
    if (m.back() >= g.vertex_count()) throw InputError("conformity set vertex out of range");

    // Induced subgraph: all pairs adjacent, or none.
    std::size_t inner = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (g.adjacent(m[i], m[j])) ++inner;
    const std::size_t pairs = m.size() * (m.size() - 1) / 2;
    if (inner != 0 && inner != pairs) return false;

    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (s.contains(x)) continue;
        const bool first = g.adjacent(m.front(), x);
        for (Vertex w : m)
            if (g.adjacent(w, x) != first) return false;
    }
    return true;
}

}  // namespace chipfire
