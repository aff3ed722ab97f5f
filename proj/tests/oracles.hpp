#pragma once

// Slow, independent reference implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "srgswitch/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const srgsw::Graph& g) {
  const std::size_t n = g.order();
  Matrix a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j) ? 1 : 0;
  return a;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

struct Params {
  int v, k, lambda, mu;
  bool operator==(const Params&) const = default;
};

// Parameters from A^2 = kI + lambda A + mu (J - I - A); nullopt if not strongly regular.
inline std::optional<Params> srg_params(const srgsw::Graph& g) {
  const auto a = adjacency(g);
  const auto a2 = multiply(a, a);
  const int n = static_cast<int>(a.size());
  std::optional<int> k, lambda, mu;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::optional<int>* slot = i == j ? &k : (a[i][j] ? &lambda : &mu);
      if (!*slot) *slot = a2[i][j];
      else if (**slot != a2[i][j]) return std::nullopt;
    }
  if (!k || !lambda || !mu) return std::nullopt;
  return Params{n, *k, *lambda, *mu};
}

// Upper-triangle bit string under the ordering pos -> vertex.
inline std::string upper_string(const srgsw::Graph& g, const std::vector<srgsw::Vertex>& ord) {
  std::string s;
  for (std::size_t i = 0; i < ord.size(); ++i)
    for (std::size_t j = i + 1; j < ord.size(); ++j) s.push_back(g.adjacent(ord[i], ord[j]) ? '1' : '0');
  return s;
}

// Lexicographically largest upper-triangle string over all n! orderings.
inline std::string brute_canon(const srgsw::Graph& g) {
  std::vector<srgsw::Vertex> ord(g.order());
  std::iota(ord.begin(), ord.end(), srgsw::Vertex{0});
  std::string best;
  do {
    best = std::max(best, upper_string(g, ord));
  } while (std::next_permutation(ord.begin(), ord.end()));
  return best;
}

// Plain backtracking isomorphism search with degree filtering.
inline std::optional<std::vector<srgsw::Vertex>> find_isomorphism(const srgsw::Graph& a, const srgsw::Graph& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return std::nullopt;
  std::vector<srgsw::Vertex> map(n);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || a.degree(x) != b.degree(y)) continue;
      bool ok = true;
      for (std::size_t p = 0; p < x && ok; ++p) ok = a.adjacent(p, x) == b.adjacent(map[p], y);
      if (!ok) continue;
      used[y] = 1;
      map[x] = static_cast<srgsw::Vertex>(y);
      if (self(self, x + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

// Every automorphism, by exhaustive backtracking.
inline std::vector<std::vector<srgsw::Vertex>> all_automorphisms(const srgsw::Graph& g) {
  const std::size_t n = g.order();
  std::vector<srgsw::Vertex> map(n);
  std::vector<char> used(n, 0);
  std::vector<std::vector<srgsw::Vertex>> out;
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      out.push_back(map);
      return;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < x && ok; ++p) ok = g.adjacent(p, x) == g.adjacent(map[p], y);
      if (!ok) continue;
      used[y] = 1;
      map[x] = static_cast<srgsw::Vertex>(y);
      self(self, x + 1);
      used[y] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

inline srgsw::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  srgsw::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.set_edge(i, j);
  return g;
}

inline std::vector<srgsw::Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<srgsw::Vertex> p(n);
  std::iota(p.begin(), p.end(), srgsw::Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<srgsw::Vertex> members(std::uint64_t mask, std::size_t n) {
  std::vector<srgsw::Vertex> out;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1U) out.push_back(static_cast<srgsw::Vertex>(i));
  return out;
}

}  // namespace oracle
