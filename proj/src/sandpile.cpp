#include "chipfire/sandpile.hpp"

#include <string>

#include "chipfire/errors.hpp"

namespace chipfire {

Divisor::Divisor(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
}

Divisor Divisor::vertex(std::size_t graph_size, Vertex v) {
    if (v >= graph_size) throw InputError("vertex out of range");
    Divisor d(graph_size);
    d[v] = 1;
    return d;
}

Divisor Divisor::difference(std::size_t graph_size, Vertex a, Vertex b) {
    if (a >= graph_size || b >= graph_size) throw InputError("vertex out of range");
    Divisor d(graph_size);
    d[a] += 1;
    d[b] -= 1;
    return d;
}

BigInt Divisor::degree() const {
    BigInt sum = 0;
    for (const BigInt& c : coeffs_) sum += c;
    return sum;
}

Divisor& Divisor::operator+=(const Divisor& other) {
    if (other.size() != size()) throw InputError("divisor size mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
    if (other.size() != size()) throw InputError("divisor size mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Divisor operator*(const BigInt& m, Divisor d) {
    for (BigInt& c : d.coeffs_) c *= m;
    return d;
}

IntMatrix laplacian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    IntMatrix l(n, n);
    for (Vertex v = 0; v < n; ++v) l(v, v) = static_cast<unsigned long>(g.degree(v));
    for (const auto& [u, v] : g.edges()) {
        l(u, v) = -1;
        l(v, u) = -1;
    }
    return l;
}

namespace {

void require_connected(const Graph& g) {
    if (!is_connected(g))
        throw NotConnectedError("graph with " + std::to_string(g.vertex_count()) +
                                " vertices is not connected");
}

}  // namespace

IntMatrix reduced_laplacian(const Graph& g, Vertex remove) {
    if (remove >= g.vertex_count()) throw InputError("removed vertex out of range");
    require_connected(g);
    return laplacian(g).without_row_col(remove, remove);
}

ChipFiringGroup::ChipFiringGroup(const Graph& g, Vertex remove)
    : vertex_count_(g.vertex_count()),
      remove_(remove),
      reduced_(reduced_laplacian(g, remove)),
      snf_(smith_normal_form(reduced_)),
      group_(CriticalGroup::from_diagonal(snf_.diagonal)) {}

std::vector<BigInt> ChipFiringGroup::coordinates(const Divisor& d) const {
    if (d.size() != vertex_count_)
        throw InputError("divisor has " + std::to_string(d.size()) + " entries, graph has " +
                         std::to_string(vertex_count_) + " vertices");
    if (d.degree() != 0) throw InputError("divisor has nonzero degree " + d.degree().get_str());
    std::vector<BigInt> out;
    out.reserve(vertex_count_ - 1);
    for (Vertex v = 0; v < vertex_count_; ++v)
        if (v != remove_) out.push_back(d[v]);
    return out;
}

bool ChipFiringGroup::is_principal(const Divisor& d) const {
    const auto y = snf_.u * coordinates(d);
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!big_divides(snf_.diagonal[i], y[i])) return false;
    return true;
}

BigInt ChipFiringGroup::class_order(const Divisor& d) const {
    const auto y = snf_.u * coordinates(d);
    BigInt order = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const BigInt& s = snf_.diagonal[i];
        order = big_lcm(order, big_divexact(s, big_gcd(s, y[i])));
    }
    return order;
}

IntMatrix ChipFiringGroup::generator_columns(const std::vector<Divisor>& generators) const {
    IntMatrix cols(vertex_count_ - 1, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
        const auto c = coordinates(generators[j]);
        for (std::size_t i = 0; i < c.size(); ++i) cols(i, j) = c[i];
    }
    return cols;
}

CriticalGroup ChipFiringGroup::quotient(const std::vector<Divisor>& generators) const {
    if (generators.empty()) return group_;
    return CriticalGroup::from_diagonal(smith_normal_form(reduced_.hconcat(generator_columns(generators))).diagonal);
}

CriticalGroup ChipFiringGroup::subgroup(const std::vector<Divisor>& generators) const {
    const std::size_t count = generators.size();
    if (count == 0) return {};
    // a is a relation iff C a = R b for some b; project ker [C | R] onto a.
    const IntMatrix kernel = integer_kernel(generator_columns(generators).hconcat(reduced_));
    IntMatrix relations(count, kernel.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < kernel.cols(); ++j) relations(i, j) = kernel(i, j);
    return CriticalGroup::from_diagonal(smith_normal_form(relations).diagonal);
}

CriticalGroup critical_group(const Graph& g, Vertex remove) {
    return ChipFiringGroup(g, remove).structure();
}

BigInt spanning_tree_count(const Graph& g) { return determinant(reduced_laplacian(g, 0)); }

IntPoly char_poly_degree_zero_part(const Graph& g) { return poly_divide_by_x(char_poly(laplacian(g))); }

IntPoly char_poly_restricted(const Graph& g) {
    require_connected(g);
    return char_poly_degree_zero_part(g);
}

Divisor fire_vertex(const Graph& g, const Divisor& d, Vertex v, FireDirection direction) {
    if (v >= g.vertex_count()) throw InputError("vertex out of range");
    if (d.size() != g.vertex_count()) throw InputError("divisor size mismatch");
    Divisor out = d;
    const long sign = direction == FireDirection::lend ? 1 : -1;
    out[v] -= sign * static_cast<long>(g.degree(v));
    for (Vertex w : g.neighbors(v)) out[w] += sign;
    return out;
}

bool is_principal(const Graph& g, const Divisor& d) { return ChipFiringGroup(g).is_principal(d); }

BigInt class_order(const Graph& g, const Divisor& d) { return ChipFiringGroup(g).class_order(d); }

CriticalGroup quotient_by_classes(const Graph& g, const std::vector<Divisor>& generators) {
    return ChipFiringGroup(g).quotient(generators);
}

CriticalGroup subgroup_invariants(const Graph& g, const std::vector<Divisor>& generators) {
    return ChipFiringGroup(g).subgroup(generators);
}

}  // namespace chipfire
