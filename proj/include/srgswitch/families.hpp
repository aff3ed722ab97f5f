#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "srgswitch/error.hpp"
#include "srgswitch/graph.hpp"

namespace srgsw {

namespace detail {

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

/// T(n): 2-subsets of an n-set, adjacent iff they intersect.
inline Graph triangular_graph(std::size_t n) {
  if (n < 4) throw ParameterError("triangular graph needs order >= 4");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  Graph g(pairs.size());
  for (std::size_t x = 0; x < pairs.size(); ++x)
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      const auto [a, b] = pairs[x];
      const auto [c, d] = pairs[y];
      if (a == c || a == d || b == c || b == d) g.set_edge(x, y);
    }
  return g;
}

/// L2(n): the n x n rook's graph.
inline Graph lattice_graph(std::size_t n) {
  if (n < 2) throw ParameterError("lattice graph needs order >= 2");
  Graph g(n * n);
  for (std::size_t x = 0; x < n * n; ++x)
    for (std::size_t y = x + 1; y < n * n; ++y)
      if (x / n == y / n || x % n == y % n) g.set_edge(x, y);
  return g;
}

/// Paley graph on Z_q, q prime with q = 1 mod 4.
inline Graph paley_graph(std::size_t q) {
  if (!detail::is_prime(q) || q % 4 != 1 || q > 300)
    throw ParameterError("paley graph needs a prime order q = 1 mod 4 with q <= 300");
  std::vector<char> square(q, 0);
  for (std::size_t a = 1; a < q; ++a) square[(a * a) % q] = 1;
  Graph g(q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y)
      if (square[(y - x) % q]) g.set_edge(x, y);
  return g;
}

/// Clebsch graph: {0,1}^4 with adjacency at Hamming distance 1 or 4.
inline Graph clebsch_graph() {
  Graph g(16);
  for (unsigned x = 0; x < 16; ++x)
    for (unsigned y = x + 1; y < 16; ++y) {
      const int d = __builtin_popcount(x ^ y);
      if (d == 1 || d == 4) g.set_edge(x, y);
    }
  return g;
}

/// Shrikhande graph: Cayley graph of Z4 x Z4 with connection set +-(1,0), +-(0,1), +-(1,1).
inline Graph shrikhande_graph() {
  Graph g(16);
  auto id = [](int a, int b) { return static_cast<std::size_t>(((a + 4) % 4) * 4 + (b + 4) % 4); };
  const int gens[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (const auto& s : gens) g.set_edge(id(a, b), id(a + s[0], b + s[1]));
  return g;
}

inline Graph petersen_graph() { return complement(triangular_graph(5)); }

/// The three Chang graphs, obtained from T(8) by switching on the vertex sets
/// (edges of K8) of a perfect matching (index 1), C8 (index 2) and C3 + C5 (index 3).
inline Graph chang_graph(std::size_t index) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (index) {
    case 1: edges = {{0, 1}, {2, 3}, {4, 5}, {6, 7}}; break;
    case 2: edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}}; break;
    case 3: edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}}; break;
    default: throw ParameterError("chang graph index must be 1, 2 or 3");
  }
  // vertex index of pair {a,b}, a<b, in triangular_graph(8) enumeration order
  auto vertex = [](std::size_t a, std::size_t b) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a; ++i) idx += 7 - i;
    return idx + (b - a - 1);
  };
  Graph g = triangular_graph(8);
  std::vector<char> in(28, 0);
  for (auto [a, b] : edges) in[vertex(a, b)] = 1;
  for (std::size_t x = 0; x < 28; ++x)
    for (std::size_t y = x + 1; y < 28; ++y)
      if (in[x] != in[y]) g.toggle_edge(x, y);
  return g;
}

/// Constructs a named graph. Families: triangular, lattice, paley, clebsch,
/// shrikhande, petersen, chang, cycle, complete, and "complement-<family>".
inline Graph construct_named(std::string_view family, std::size_t order) {
  constexpr std::string_view prefix = "complement-";
  if (family.starts_with(prefix)) return complement(construct_named(family.substr(prefix.size()), order));
  auto fixed = [&](std::size_t want) {
    if (order != want)
      throw ParameterError(std::string(family) + " graph has fixed order " + std::to_string(want));
  };
  if (family == "triangular") return triangular_graph(order);
  if (family == "lattice") return lattice_graph(order);
  if (family == "paley") return paley_graph(order);
  if (family == "clebsch") return fixed(16), clebsch_graph();
  if (family == "shrikhande") return fixed(16), shrikhande_graph();
  if (family == "petersen") return fixed(10), petersen_graph();
  if (family == "chang") return chang_graph(order);
  if (family == "cycle") return cycle_graph(order);
  if (family == "complete") {
    if (order < 1) throw ParameterError("complete graph needs order >= 1");
    return complete_graph(order);
  }
  throw ParameterError("unknown graph family '" + std::string(family) + "'");
}

}  // namespace srgsw
