#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace chipfire {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted set of distinct vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Finite simple undirected graph on vertices 0..vertex_count-1.
///
/// Edges are stored once each as (u, v) with u < v, sorted, so two graphs
/// with the same labeled edge set compare equal. Adjacency is kept as a
/// dense matrix alongside the edge list; graphs here have at most a few
/// dozen vertices. Connectedness is not an invariant of the type.
class Graph {
public:
    /// Builds a graph from arbitrary pairs; duplicates are merged.
    /// Throws InputError on n == 0, out-of-range endpoints or self-loops.
    static Graph from_edge_list(std::size_t n, const std::vector<Edge>& pairs);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const { return adjacency_[u * n_ + v] != 0; }
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<unsigned char> adjacency_;
};

Graph complete(std::size_t m);
Graph path(std::size_t m);
Graph cycle(std::size_t m);

/// Disjoint union of g1 and g2 plus every edge between them. g1 keeps its
/// indices; g2's vertices are shifted by g1.vertex_count().
Graph join(const Graph& g1, const Graph& g2);

/// The n-th cone: join(g, complete(n)). Cone vertices are k..k+n-1.
Graph cone(const Graph& g, std::size_t n);

bool is_connected(const Graph& g);
std::size_t degree(const Graph& g, Vertex v);
VertexSet leaves(const Graph& g);
bool is_tree(const Graph& g);

/// Induced subgraph on s is complete or edgeless, and every member of s has
/// the same neighbors outside s. Throws InputError for an empty or
/// out-of-range set.
bool has_conformity_property(const Graph& g, const VertexSet& s);

}  // namespace chipfire
