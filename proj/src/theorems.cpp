#include "chipfire/theorems.hpp"

#include <numeric>
#include <string>

#include "chipfire/errors.hpp"
#include "chipfire/int_poly.hpp"
#include "chipfire/sandpile.hpp"

namespace chipfire {

namespace {

std::vector<Divisor> cone_differences(std::size_t k, std::size_t n) {
    std::vector<Divisor> out;
    for (std::size_t i = 1; i < n; ++i) out.push_back(Divisor::difference(k + n, k + i, k));
    return out;
}

bool is_eigenvector(const IntMatrix& l, const std::vector<BigInt>& x, const BigInt& eigenvalue) {
    const auto image = l * x;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (image[i] != eigenvalue * x[i]) return false;
    return true;
}

}  // namespace

ConeSequenceReport verify_cone_theorem(const Graph& g, std::size_t n) {
    if (n == 0) throw InputError("cone size must be >= 1");
    if (!is_connected(g)) throw NotConnectedError("base graph is not connected");
    const std::size_t k = g.vertex_count();

    const ChipFiringGroup pic(cone(g, n));
    const auto generators = cone_differences(k, n);

    ConeSequenceReport r;
    r.base_vertices = k;
    r.cone_size = n;
    r.pic0 = pic.structure();
    r.subgroup = pic.subgroup(generators);
    r.quotient_h = pic.quotient(generators);
    r.p_at_minus_n = abs(poly_eval(char_poly_restricted(g), -BigInt(static_cast<unsigned long>(n))));
    r.order_formula_holds = r.quotient_h.order() == r.p_at_minus_n;
    r.subgroup_is_expected =
        r.subgroup == CriticalGroup::from_diagonal(
                          std::vector<BigInt>(n - 1, BigInt(static_cast<unsigned long>(n + k))));
    r.splits = groups_isomorphic(r.pic0, direct_sum(r.subgroup, r.quotient_h));
    r.h_generator_count = r.quotient_h.rank();
    return r;
}

JoinOrderReport verify_join_theorem(const std::vector<Graph>& gs) {
    if (gs.size() < 2) throw InputError("join theorem needs at least two graphs");

    JoinOrderReport r;
    Graph joined = gs.front();
    for (std::size_t i = 1; i < gs.size(); ++i) joined = join(joined, gs[i]);
    for (const Graph& g : gs) r.factor_vertex_counts.push_back(g.vertex_count());
    r.total_vertices = joined.vertex_count();

    r.lhs = critical_group(joined).order();

    const BigInt k = static_cast<unsigned long>(r.total_vertices);
    r.rhs = big_pow(k, gs.size() - 2);
    for (const Graph& g : gs) {
        const BigInt ki = static_cast<unsigned long>(g.vertex_count());
        r.rhs *= abs(poly_eval(char_poly_degree_zero_part(g), ki - k));
    }
    r.holds = r.lhs == r.rhs;
    return r;
}

TreeBoundReport verify_tree_bound(const Graph& g, std::size_t n) {
    if (g.vertex_count() < 2 || !is_tree(g)) throw InputError("tree bound needs a tree with >= 2 vertices");
    if (n == 0) throw InputError("cone size must be >= 1");
    const std::size_t k = g.vertex_count();
    const CriticalGroup h = ChipFiringGroup(cone(g, n)).quotient(cone_differences(k, n));

    TreeBoundReport r;
    r.leaf_count = leaves(g).size();
    r.h_generators = h.rank();
    r.holds = r.h_generators + 1 <= r.leaf_count;
    return r;
}

bool verify_eigenvectors(const Graph& g, std::size_t n) {
    if (n == 0) throw InputError("cone size must be >= 1");
    const std::size_t k = g.vertex_count();
    const IntMatrix l = laplacian(cone(g, n));
    const BigInt eigenvalue = static_cast<unsigned long>(n + k);

    for (const Divisor& d : cone_differences(k, n))
        if (!is_eigenvector(l, d.coefficients(), eigenvalue)) return false;

    std::vector<BigInt> split(k + n);
    for (std::size_t i = 0; i < k; ++i) split[i] = static_cast<unsigned long>(n);
    for (std::size_t i = k; i < k + n; ++i) split[i] = -static_cast<long>(k);
    return is_eigenvector(l, split, eigenvalue);
}

ElementaryOrderReport check_elementary_order(const Graph& g, Vertex v1, Vertex v2) {
    if (g.vertex_count() < 3) throw InputError("elementary order needs at least three vertices");
    if (v1 == v2) throw InputError("conformal pair needs two distinct vertices");
    if (!has_conformity_property(g, VertexSet{v1, v2})) throw InputError("pair is not conformal");

    ElementaryOrderReport r;
    r.degree = g.degree(v1);
    r.adjacent = g.adjacent(v1, v2);
    r.expected = static_cast<unsigned long>(r.adjacent ? r.degree + 1 : r.degree);
    r.actual = class_order(g, Divisor::difference(g.vertex_count(), v1, v2));
    r.holds = r.expected == r.actual;
    return r;
}

ConformalIndependenceReport check_conformal_independence(const Graph& g, const std::vector<VertexSet>& sets) {
    std::vector<char> covered(g.vertex_count(), 0);
    std::size_t covered_count = 0;
    for (const VertexSet& s : sets) {
        if (!has_conformity_property(g, s)) throw InputError("set is not conformal");
        for (Vertex v : s) {
            if (covered[v]) throw InputError("conformal sets overlap at vertex " + std::to_string(v));
            covered[v] = 1;
            ++covered_count;
        }
    }
    if (covered_count == g.vertex_count()) throw InputError("conformal sets cover every vertex");

    const ChipFiringGroup pic(g);
    std::vector<Divisor> generators;
    CriticalGroup expected;
    for (const VertexSet& s : sets) {
        const auto& m = s.members();
        for (std::size_t j = 1; j < m.size(); ++j) {
            generators.push_back(Divisor::difference(g.vertex_count(), m.front(), m[j]));
            expected = direct_sum(expected, CriticalGroup::cyclic(pic.class_order(generators.back())));
        }
    }

    ConformalIndependenceReport r;
    r.generated = pic.subgroup(generators);
    r.expected = expected;
    r.holds = r.generated == r.expected;
    return r;
}

namespace {

/// Union-find with undo; no path compression so merges can be rolled back.
class RollbackDsu {
public:
    explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    /// Returns false (and records nothing) if a and b are already joined.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        return true;
    }
    void undo() {
        const std::size_t b = history_.back();
        history_.pop_back();
        size_[parent_[b]] -= size_[b];
        parent_[b] = b;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<std::size_t> history_;
};

void count_forests(const std::vector<Edge>& edges, std::size_t next, std::size_t needed, RollbackDsu& dsu,
                   BigInt& count) {
    if (needed == 0) {
        ++count;
        return;
    }
    for (std::size_t i = next; i + needed <= edges.size(); ++i) {
        if (!dsu.unite(edges[i].first, edges[i].second)) continue;
        count_forests(edges, i + 1, needed - 1, dsu, count);
        dsu.undo();
    }
}

}  // namespace

BigInt brute_force_spanning_trees(const Graph& g) {
    if (g.vertex_count() > kBruteForceVertexLimit)
        throw SizeError("brute-force spanning tree count is limited to " +
                        std::to_string(kBruteForceVertexLimit) + " vertices");
    // n - 1 acyclic edges on n vertices always form a spanning tree.
    RollbackDsu dsu(g.vertex_count());
    BigInt count = 0;
    count_forests(g.edges(), 0, g.vertex_count() - 1, dsu, count);
    return count;
}

}  // namespace chipfire
