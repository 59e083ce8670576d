#pragma once

#include <initializer_list>
#include <vector>

#include "chipfire/abelian_group.hpp"
#include "chipfire/bigint.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/int_matrix.hpp"
#include "chipfire/int_poly.hpp"
#include "chipfire/smith.hpp"

namespace chipfire {

/// Integer chip counts indexed by vertex. The degree-zero constraint is a
/// precondition of the group queries, not part of the type.
class Divisor {
public:
    explicit Divisor(std::size_t graph_size) : coeffs_(graph_size) {}
    explicit Divisor(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {}
    Divisor(std::initializer_list<long> coefficients);

    /// v
    static Divisor vertex(std::size_t graph_size, Vertex v);
    /// a - b
    static Divisor difference(std::size_t graph_size, Vertex a, Vertex b);

    std::size_t size() const { return coeffs_.size(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& operator[](Vertex v) const { return coeffs_[v]; }
    BigInt& operator[](Vertex v) { return coeffs_[v]; }
    BigInt degree() const;

    Divisor& operator+=(const Divisor& other);
    Divisor& operator-=(const Divisor& other);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(const BigInt& m, Divisor d);
    friend bool operator==(const Divisor&, const Divisor&) = default;

private:
    std::vector<BigInt> coeffs_;
};

enum class FireDirection { lend, borrow };

/// Degree matrix minus adjacency matrix.
IntMatrix laplacian(const Graph& g);

/// Laplacian with row and column `remove` deleted. Throws
/// NotConnectedError for a disconnected graph.
IntMatrix reduced_laplacian(const Graph& g, Vertex remove);

/// Pic0(g) = Div0(g) / im Laplacian, computed once from the SNF of a reduced
/// Laplacian and then queried for divisor classes.
///
/// Div0 is identified with Z^(k-1) by dropping the coordinate of the
/// removed vertex; under that identification the image of the Laplacian is
/// the column lattice of the reduced Laplacian R. With U R V = S, a divisor
/// with coordinates c is principal iff every (U c)_i is divisible by s_i.
class ChipFiringGroup {
public:
    explicit ChipFiringGroup(const Graph& g, Vertex remove = 0);

    std::size_t vertex_count() const { return vertex_count_; }
    Vertex removed_vertex() const { return remove_; }
    const IntMatrix& reduced() const { return reduced_; }
    const SnfResult& snf() const { return snf_; }
    const CriticalGroup& structure() const { return group_; }

    /// Coordinates of a degree-zero divisor in Z^(k-1). Throws InputError
    /// on a size mismatch or nonzero degree.
    std::vector<BigInt> coordinates(const Divisor& d) const;

    bool is_principal(const Divisor& d) const;
    /// Least m >= 1 with m*d principal: lcm_i s_i / gcd(s_i, (U c)_i).
    BigInt class_order(const Divisor& d) const;
    /// Pic0 / <classes of generators>.
    CriticalGroup quotient(const std::vector<Divisor>& generators) const;
    /// The subgroup <classes of generators>, as Z^g modulo the relation
    /// lattice of the generators.
    CriticalGroup subgroup(const std::vector<Divisor>& generators) const;

private:
    IntMatrix generator_columns(const std::vector<Divisor>& generators) const;

    std::size_t vertex_count_;
    Vertex remove_;
    IntMatrix reduced_;
    SnfResult snf_;
    CriticalGroup group_;
};

CriticalGroup critical_group(const Graph& g, Vertex remove = 0);
BigInt spanning_tree_count(const Graph& g);

/// det(xI - L) / x for a connected graph: the characteristic polynomial of
/// the Laplacian on degree-zero divisors. Equals 1 for a single vertex.
IntPoly char_poly_restricted(const Graph& g);

/// Same quotient without the connectivity check. For a graph with c
/// components the result still has c - 1 zero roots.
IntPoly char_poly_degree_zero_part(const Graph& g);

/// lend subtracts the Laplacian column of v, borrow adds it.
Divisor fire_vertex(const Graph& g, const Divisor& d, Vertex v, FireDirection direction);

bool is_principal(const Graph& g, const Divisor& d);
BigInt class_order(const Graph& g, const Divisor& d);
CriticalGroup quotient_by_classes(const Graph& g, const std::vector<Divisor>& generators);
CriticalGroup subgroup_invariants(const Graph& g, const std::vector<Divisor>& generators);

}  // namespace chipfire
