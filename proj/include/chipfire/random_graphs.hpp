#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chipfire/graph.hpp"

namespace chipfire {

using Rng = std::mt19937_64;

/// G(n, p), redrawn until connected.
Graph random_connected_graph(std::size_t n, double edge_probability, Rng& rng);

/// Uniform labeled tree on n >= 1 vertices via a random Pruefer sequence.
Graph random_tree(std::size_t n, Rng& rng);

/// The labeled tree encoded by a Pruefer sequence over [0, sequence.size() + 2).
Graph tree_from_pruefer(const std::vector<Vertex>& sequence);

/// Every labeled tree on n vertices (n^(n-2) of them for n >= 2).
std::vector<Graph> all_labeled_trees(std::size_t n);

}  // namespace chipfire
