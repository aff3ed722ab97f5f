#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "srgswitch/bits.hpp"
#include "srgswitch/error.hpp"
#include "srgswitch/graph.hpp"
#include "srgswitch/srg.hpp"

namespace srgsw {

inline constexpr std::size_t kTwoGraphTripleCap = 160;

/// Triples of a graph's switching class carrying an odd number of edges.
struct TwoGraph {
  std::size_t n = 0;
  std::vector<std::array<Vertex, 3>> triples;  // lexicographic order
  std::optional<std::int64_t> regular;         // triples per pair, when constant

  friend bool operator==(const TwoGraph&, const TwoGraph&) = default;
};

namespace detail {

// Number of odd triples containing {x,y}: the z whose adjacency to x and y
// has the parity that makes the triple odd.
inline std::int64_t odd_triples_through(const Graph& g, std::size_t x, std::size_t y) {
  const auto n = static_cast<std::int64_t>(g.order());
  auto diff = static_cast<std::int64_t>(bits::count_xor(g.row(x), g.row(y)));
  diff -= 2;  // x in row(y), y in row(x) when adjacent; neither otherwise
  if (!g.adjacent(x, y)) diff += 2;
  // adjacent pair: odd iff z joins both or neither; non-adjacent: odd iff z joins exactly one
  return g.adjacent(x, y) ? (n - 2) - diff : diff;
}

}  // namespace detail

/// Constant number of odd triples per pair, or nullopt.
inline std::optional<std::int64_t> two_graph_regularity(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  const auto a = detail::odd_triples_through(g, 0, 1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (detail::odd_triples_through(g, x, y) != a) return std::nullopt;
  return a;
}

inline TwoGraph two_graph(const Graph& g, std::size_t cap = kTwoGraphTripleCap) {
  const std::size_t n = g.order();
  if (n > cap) throw ResourceError("two-graph triple listing capped at order " + std::to_string(cap));
  TwoGraph t;
  t.n = n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const int e = g.adjacent(x, y) + g.adjacent(x, z) + g.adjacent(y, z);
        if (e % 2 == 1) t.triples.push_back({static_cast<Vertex>(x), static_cast<Vertex>(y), static_cast<Vertex>(z)});
      }
  t.regular = two_graph_regularity(g);
  return t;
}

/// Exhaustive check that every 4-subset holds an even number of the triples.
inline bool is_two_graph(std::size_t n, const std::vector<std::array<Vertex, 3>>& triples, std::size_t cap = 40) {
  if (n > cap) throw ResourceError("4-subset two-graph check capped at order " + std::to_string(cap));
  std::vector<char> in(n * n * n, 0);
  for (const auto& t : triples) in[(t[0] * n + t[1]) * n + t[2]] = 1;
  auto has = [&](std::size_t a, std::size_t b, std::size_t c) { return in[(a * n + b) * n + c] != 0; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if ((has(a, b, c) + has(a, b, d) + has(a, c, d) + has(b, c, d)) % 2 != 0) return false;
  return true;
}

/// Returns (rho1, rho2), rho1 > 0 > rho2, when the Seidel matrix B has exactly
/// two distinct integral eigenvalues, certified by (B - rho1 I)(B - rho2 I) = 0.
///
/// Two eigenvalues force B^2 = sB + (n-1)I; s is read off one off-diagonal
/// entry of B^2 and the identity is then checked on every entry.
inline std::optional<std::pair<std::int64_t, std::int64_t>> seidel_spectrum_check(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  const auto nn = static_cast<std::int64_t>(n);
  // (B^2)_{xy} for x != y: agreements minus disagreements over z != x,y.
  auto b2 = [&](std::size_t x, std::size_t y) {
    auto diff = static_cast<std::int64_t>(bits::count_xor(g.row(x), g.row(y)));
    if (g.adjacent(x, y)) diff -= 2;
    return (nn - 2) - 2 * diff;
  };
  auto b = [&](std::size_t x, std::size_t y) -> std::int64_t { return g.adjacent(x, y) ? -1 : 1; };
  const std::int64_t s = b2(0, 1) * b(0, 1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (b2(x, y) != s * b(x, y)) return std::nullopt;
  // roots of t^2 - s t - (n-1)
  const std::int64_t disc = s * s + 4 * (nn - 1);
  const auto r = detail::exact_sqrt(disc);
  if (!r || (s + *r) % 2 != 0) return std::nullopt;
  return std::pair{(s + *r) / 2, (s - *r) / 2};
}

}  // namespace srgsw
