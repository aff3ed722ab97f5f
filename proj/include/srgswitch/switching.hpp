#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srgswitch/bits.hpp"
#include "srgswitch/error.hpp"
#include "srgswitch/graph.hpp"
#include "srgswitch/rational.hpp"
#include "srgswitch/srg.hpp"

namespace srgsw {

/// A vertex subset H, kept sorted and duplicate free.
class SwitchingSet {
 public:
  SwitchingSet() = default;
  explicit SwitchingSet(std::vector<Vertex> vs) : vs_(std::move(vs)) {
    std::sort(vs_.begin(), vs_.end());
    if (std::adjacent_find(vs_.begin(), vs_.end()) != vs_.end())
      throw ParameterError("switching set contains a repeated vertex");
  }

  static SwitchingSet from_mask(std::uint64_t mask) {
    std::vector<Vertex> vs;
    for (Vertex i = 0; mask; ++i, mask >>= 1)
      if (mask & 1U) vs.push_back(i);
    return SwitchingSet(std::move(vs));
  }

  static SwitchingSet from_bits(const bits::Set& s) {
    std::vector<Vertex> vs;
    bits::for_each(s.words(), [&](std::size_t i) { vs.push_back(static_cast<Vertex>(i)); });
    return SwitchingSet(std::move(vs));
  }

  /// Parses "3,5,7" (empty string means the empty set).
  static SwitchingSet parse(std::string_view text) {
    std::vector<Vertex> vs;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      Vertex v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError("switching set: bad vertex '" + std::string(tok) + "'");
      vs.push_back(v);
      pos = end + 1;
    }
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw ParseError("switching set: repeated vertex");
    return SwitchingSet(std::move(vs));
  }

  std::span<const Vertex> vertices() const { return vs_; }
  std::size_t size() const { return vs_.size(); }
  bool empty() const { return vs_.empty(); }

  bits::Set mask(std::size_t n) const {
    bits::Set m(n);
    for (Vertex v : vs_) {
      if (v >= n)
        throw ParameterError("switching set vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
      m.insert(v);
    }
    return m;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < vs_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(vs_[i]);
    }
    return out;
  }

  friend auto operator<=>(const SwitchingSet&, const SwitchingSet&) = default;

 private:
  std::vector<Vertex> vs_;
};

/// S(G,H): adjacency between H and V\H interchanged.
inline Graph switch_graph(const Graph& g, const SwitchingSet& h) { return g.switched(h.mask(g.order())); }

/// The (0,-1,1) matrix J - I - 2A; -1 marks adjacency.
class SeidelMatrix {
 public:
  explicit SeidelMatrix(const Graph& g) : n_(g.order()), e_(n_ * n_, 0) {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (x != y) e_[x * n_ + y] = g.adjacent(x, y) ? -1 : 1;
  }

  std::size_t order() const { return n_; }
  int operator()(std::size_t x, std::size_t y) const { return e_[x * n_ + y]; }

  /// D_H B D_H with D_H = diag(-1 on H, +1 elsewhere).
  SeidelMatrix conjugated(const SwitchingSet& h) const {
    const auto m = h.mask(n_);
    SeidelMatrix out = *this;
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (m.contains(x) != m.contains(y)) out.e_[x * n_ + y] = static_cast<std::int8_t>(-out.e_[x * n_ + y]);
    return out;
  }

  friend bool operator==(const SeidelMatrix&, const SeidelMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int8_t> e_;
};

namespace detail {

// Degree of every vertex of `part` into `part` equals `target`.
inline bool part_regular(const Graph& g, const bits::Set& part, std::int64_t target) {
  if (target < 0) return false;
  bool ok = true;
  bits::for_each(part.words(), [&](std::size_t x) {
    if (ok && static_cast<std::int64_t>(bits::count_and(g.row(x), part.words())) != target) ok = false;
  });
  return ok;
}

// Common degree inside `part`, or nullopt when irregular or empty.
inline std::optional<std::int64_t> part_degree(const Graph& g, const bits::Set& part) {
  std::optional<std::int64_t> d;
  bool ok = true;
  bits::for_each(part.words(), [&](std::size_t x) {
    const auto c = static_cast<std::int64_t>(bits::count_and(g.row(x), part.words()));
    if (!d) d = c;
    else if (*d != c) ok = false;
  });
  return ok ? d : std::nullopt;
}

inline bits::Set complement_set(const bits::Set& s) {
  bits::Set c(s.universe());
  for (std::size_t i = 0; i < s.universe(); ++i)
    if (!s.contains(i)) c.insert(i);
  return c;
}

inline void require_order(const Graph& g, const SrgSpectrum& s) {
  if (static_cast<std::int64_t>(g.order()) != s.params.v)
    throw PreconditionError("graph order " + std::to_string(g.order()) + " does not match spectrum parameters " +
                            s.params.str());
}

}  // namespace detail

/// Same-parameter switching criterion: H induces a (k - (v-h)/2)-regular subgraph.
/// H = {} and H = V are accepted. A parity mismatch h != v (mod 2) is simply false.
inline bool check_thm1(const Graph& g, const SrgSpectrum& s, const bits::Set& h) {
  require_switchable(s);
  detail::require_order(g, s);
  const auto hs = static_cast<std::int64_t>(h.size());
  const auto& p = s.params;
  if (hs == 0 || hs == p.v) return true;
  if ((p.v - hs) % 2 != 0) return false;
  return detail::part_regular(g, h, p.k - (p.v - hs) / 2);
}

inline bool check_thm1(const Graph& g, const SrgSpectrum& s, const SwitchingSet& h) {
  return check_thm1(g, s, h.mask(g.order()));
}

inline bool check_thm1(const Graph& g, const SwitchingSet& h) { return check_thm1(g, spectrum_of(g), h); }

/// Other-parameter criterion: |H| = v/2 and H induces a (k - mu)-regular subgraph.
/// Returns c = v/2 - 2mu; S(G,H) then has parameters (v, k+c, lambda+c, mu+c).
inline std::optional<std::int64_t> check_thm2(const Graph& g, const SrgSpectrum& s, const bits::Set& h) {
  require_switchable(s);
  detail::require_order(g, s);
  const auto& p = s.params;
  if (2 * static_cast<std::int64_t>(h.size()) != p.v) return std::nullopt;
  if (!detail::part_regular(g, h, p.k - p.mu)) return std::nullopt;
  return p.v / 2 - 2 * p.mu;
}

inline std::optional<std::int64_t> check_thm2(const Graph& g, const SrgSpectrum& s, const SwitchingSet& h) {
  return check_thm2(g, s, h.mask(g.order()));
}

inline std::optional<std::int64_t> check_thm2(const Graph& g, const SwitchingSet& h) {
  return check_thm2(g, spectrum_of(g), h);
}

inline SrgParams thm2_target(const SrgParams& p) {
  const std::int64_t c = p.v / 2 - 2 * p.mu;
  return {p.v, p.k + c, p.lambda + c, p.mu + c};
}

/// Degrees w1, w2 forced on H and V\H when S(G,H) has the other parameter set
/// and |H| = v1: w1 = k - mu - v/4 + v1/2, w2 = k - mu + v/4 - v1/2.
inline std::pair<Rational, Rational> thm2_degree_relations(const SrgParams& p, std::int64_t v1) {
  const Rational base(p.k - p.mu);
  const Rational shift = Rational(p.v, 4) - Rational(v1, 2);
  return {base - shift, base + shift};
}

/// Bose-Shrikhande switching criterion for SRGs with 2k - v/2 = lambda + mu:
/// H and V\H induce w1- and w2-regular subgraphs with w1 - w2 = (v1 - v2)/2.
inline bool bose_shrikhande_check(const Graph& g, const SrgParams& p, const bits::Set& h) {
  if (p.v % 2 != 0 || 2 * p.k - p.v / 2 != p.lambda + p.mu)
    throw PreconditionError("parameters " + p.str() + " violate 2k - v/2 = lambda + mu");
  if (static_cast<std::int64_t>(g.order()) != p.v) throw PreconditionError("graph order does not match parameters");
  const auto v1 = static_cast<std::int64_t>(h.size());
  const auto v2 = p.v - v1;
  if (v1 == 0 || v2 == 0) return true;
  const auto rest = detail::complement_set(h);
  const auto w1 = detail::part_degree(g, h);
  const auto w2 = detail::part_degree(g, rest);
  if (!w1 || !w2) return false;
  return 2 * (*w1 - *w2) == v1 - v2;
}

inline bool bose_shrikhande_check(const Graph& g, const SwitchingSet& h) {
  const auto cls = verify_srg(g);
  if (!cls.params) throw PreconditionError("graph is not strongly regular");
  return bose_shrikhande_check(g, *cls.params, h.mask(g.order()));
}

/// Cross-degree form of the same-parameter criterion: every vertex of H is
/// adjacent to exactly half of V\H and every vertex of V\H to half of H.
inline bool half_adjacency_check(const Graph& g, const bits::Set& h) {
  const auto rest = detail::complement_set(h);
  const std::size_t v1 = h.size();
  const std::size_t v2 = rest.size();
  if (v1 == 0 || v2 == 0) return true;
  if (v1 % 2 != 0 || v2 % 2 != 0) return false;
  bool ok = true;
  for (std::size_t x = 0; x < g.order() && ok; ++x) {
    const bool inside = h.contains(x);
    const auto& other = inside ? rest : h;
    ok = bits::count_and(g.row(x), other.words()) * 2 == (inside ? v2 : v1);
  }
  return ok;
}

/// 2x2 matrix of average block row sums for the partition {H, V\H}.
struct QuotientMatrix {
  std::array<std::array<Rational, 2>, 2> F{};
  bool equitable = false;

  Rational trace() const { return F[0][0] + F[1][1]; }
  Rational det() const { return F[0][0] * F[1][1] - F[0][1] * F[1][0]; }

  /// Eigenvalues (larger first) when they are rational.
  std::optional<std::pair<Rational, Rational>> eigenvalues() const {
    // roots of x^2 - t x + d; discriminant t^2 - 4d
    const Rational t = trace();
    const Rational disc = t * t - Rational(4) * det();
    if (disc < Rational(0)) return std::nullopt;
    const auto rn = detail::exact_sqrt(disc.num());
    const auto rd = detail::exact_sqrt(disc.den());
    if (!rn || !rd) return std::nullopt;
    const Rational root(*rn, *rd);
    return std::pair{(t + root) / Rational(2), (t - root) / Rational(2)};
  }
};

inline QuotientMatrix quotient_matrix(const Graph& g, const SwitchingSet& hs) {
  const auto h = hs.mask(g.order());
  const auto rest = detail::complement_set(h);
  if (h.empty() || rest.empty()) throw ParameterError("quotient matrix needs both parts nonempty");
  const std::array<const bits::Set*, 2> parts{&h, &rest};
  QuotientMatrix q;
  q.equitable = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::int64_t total = 0;
      std::optional<std::size_t> first;
      bits::for_each(parts[i]->words(), [&](std::size_t x) {
        const std::size_t c = bits::count_and(g.row(x), parts[j]->words());
        total += static_cast<std::int64_t>(c);
        if (!first) first = c;
        else if (*first != c) q.equitable = false;
      });
      q.F[i][j] = Rational(total, static_cast<std::int64_t>(parts[i]->size()));
    }
  return q;
}

}  // namespace srgsw
