#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srgswitch/bits.hpp"
#include "srgswitch/error.hpp"

namespace srgsw {

using Vertex = std::uint32_t;

inline constexpr std::size_t kDefaultVertexCap = 512;

namespace detail {
inline std::atomic<std::size_t>& vertex_cap_storage() {
  static std::atomic<std::size_t> cap{kDefaultVertexCap};
  return cap;
}
}  // namespace detail

// Largest graph order any operation accepts. Process-wide; the CLI sets it from
// configuration before constructing graphs.
inline std::size_t vertex_cap() { return detail::vertex_cap_storage().load(std::memory_order_relaxed); }
inline void set_vertex_cap(std::size_t cap) {
  if (cap == 0) throw ParameterError("vertex cap must be positive");
  detail::vertex_cap_storage().store(cap, std::memory_order_relaxed);
}

inline void require_within_cap(std::size_t n) {
  if (n > vertex_cap())
    throw ResourceError("graph order " + std::to_string(n) + " exceeds vertex cap " +
                        std::to_string(vertex_cap()));
}

/// Simple undirected graph stored as a dense symmetric bit-matrix.
///
/// Row x holds the neighbourhood of x as a bitset of words_per_row() words.
/// The diagonal is always zero.
class Graph {
 public:
  explicit Graph(std::size_t n = 1) : n_(n), wpr_(bits::words_for(n)) {
    if (n == 0) throw ParameterError("graph must have at least one vertex");
    require_within_cap(n);
    adj_.assign(n_ * wpr_, 0);
  }

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return wpr_; }

  std::span<const bits::Word> row(std::size_t x) const { return {adj_.data() + x * wpr_, wpr_}; }

  bool adjacent(std::size_t x, std::size_t y) const { return bits::test(row(x), y); }

  void set_edge(std::size_t x, std::size_t y, bool on = true) {
    check_vertex(x);
    check_vertex(y);
    if (x == y) throw ParameterError("loops are not allowed");
    if (on) {
      bits::set(mut_row(x), y);
      bits::set(mut_row(y), x);
    } else {
      bits::reset(mut_row(x), y);
      bits::reset(mut_row(y), x);
    }
  }

  void toggle_edge(std::size_t x, std::size_t y) {
    bits::flip(mut_row(x), y);
    bits::flip(mut_row(y), x);
  }

  std::size_t degree(std::size_t x) const { return bits::count(row(x)); }

  std::size_t edge_count() const {
    std::size_t s = 0;
    for (std::size_t x = 0; x < n_; ++x) s += degree(x);
    return s / 2;
  }

  std::vector<Vertex> neighbours(std::size_t x) const {
    std::vector<Vertex> out;
    bits::for_each(row(x), [&](std::size_t y) { out.push_back(static_cast<Vertex>(y)); });
    return out;
  }

  /// Seidel switching: toggles every pair with exactly one end in `h`.
  Graph switched(const bits::Set& h) const {
    if (h.universe() != n_) throw ParameterError("switching set universe does not match graph order");
    Graph out = *this;
    const auto m = h.words();
    const bits::Word tail = n_ % bits::kWordBits == 0 ? ~bits::Word{0} : (bits::Word{1} << (n_ % bits::kWordBits)) - 1;
    for (std::size_t x = 0; x < n_; ++x) {
      auto r = out.mut_row(x);
      const bool inside = h.contains(x);
      for (std::size_t w = 0; w < wpr_; ++w) {
        bits::Word flip = inside ? ~m[w] : m[w];
        if (w + 1 == wpr_) flip &= tail;
        r[w] ^= flip;
      }
    }
    return out;
  }

  void check_vertex(std::size_t x) const {
    if (x >= n_)
      throw ParameterError("vertex " + std::to_string(x) + " out of range for order " + std::to_string(n_));
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::span<bits::Word> mut_row(std::size_t x) { return {adj_.data() + x * wpr_, wpr_}; }

  std::size_t n_;
  std::size_t wpr_;
  std::vector<bits::Word> adj_;
};

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph c(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (!g.adjacent(x, y)) c.set_edge(x, y);
  return c;
}

/// Subgraph induced on `vs`, relabelled 0..|vs|-1 in the given order.
inline Graph induced(const Graph& g, std::span<const Vertex> vs) {
  if (vs.empty()) throw ParameterError("induced subgraph needs a nonempty vertex set");
  for (Vertex v : vs) g.check_vertex(v);
  Graph s(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) throw ParameterError("induced subgraph vertex set has duplicates");
      if (g.adjacent(vs[i], vs[j])) s.set_edge(i, j);
    }
  return s;
}

inline std::optional<std::size_t> is_regular(const Graph& g) {
  const std::size_t d = g.degree(0);
  for (std::size_t x = 1; x < g.order(); ++x)
    if (g.degree(x) != d) return std::nullopt;
  return d;
}

/// Graph whose vertex perm[x] carries the adjacency of x, i.e. the image of g
/// under the permutation x -> perm[x].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw ParameterError("permutation length does not match graph order");
  Graph h(n);
  for (std::size_t x = 0; x < n; ++x)
    bits::for_each(g.row(x), [&](std::size_t y) {
      if (x < y) h.set_edge(perm[x], perm[y]);
    });
  return h;
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    bits::for_each(g.row(x), [&](std::size_t y) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    });
  }
  return reached == n;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) g.set_edge(x, y);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs order >= 3");
  Graph g(n);
  for (std::size_t x = 0; x < n; ++x) g.set_edge(x, (x + 1) % n);
  return g;
}

}  // namespace srgsw
