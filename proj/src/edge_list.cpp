#include "chipfire/edge_list.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        if (token.empty() || token[0] == '-' || token[0] == '+') throw std::invalid_argument(token);
        value = std::stoull(token, &pos);
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                         token + "'");
    }
    if (pos != token.size())
        throw InputError("line " + std::to_string(line_no) + ": trailing characters in '" + token + "'");
    return static_cast<std::size_t>(value);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::optional<std::size_t> n;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::size_t line_no = 0;

    for (std::string line; std::getline(in, line);) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto toks = tokens_of(line);
        if (toks.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected two integers, found " +
                             std::to_string(toks.size()) + " tokens");
        const std::size_t a = parse_index(toks[0], line_no);
        const std::size_t b = parse_index(toks[1], line_no);
        if (!n) {
            n = a;
            m = b;
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m)
            throw InputError("line " + std::to_string(line_no) + ": more edge lines than the declared " +
                             std::to_string(m));
        edges.emplace_back(a, b);
    }
    if (!n) throw InputError("empty edge list: missing 'n m' header");
    if (edges.size() != m)
        throw InputError("declared " + std::to_string(m) + " edges but found " + std::to_string(edges.size()));
    return Graph::from_edge_list(*n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph read_edge_list(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open '" + file.string() + "'");
    try {
        return parse_edge_list(in);
    } catch (const InputError& e) {
        throw InputError(file.string() + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace chipfire
