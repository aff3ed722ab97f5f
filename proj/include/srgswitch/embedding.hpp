#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "srgswitch/bits.hpp"
#include "srgswitch/error.hpp"
#include "srgswitch/exact_rank.hpp"
#include "srgswitch/graph.hpp"
#include "srgswitch/rational.hpp"
#include "srgswitch/srg.hpp"
#include "srgswitch/switching.hpp"

namespace srgsw {

/// Gram matrix of a finite set on a unit sphere, stored as integer numerators
/// over one common positive denominator. Coordinates are never formed.
class RationalGram {
 public:
  /// Entries given as integers num[i*n+j] / den. Rank must be supplied by the
  /// caller after certification.
  static RationalGram from_scaled(std::size_t n, std::vector<std::int64_t> num, std::int64_t den, std::size_t rank) {
    RationalGram g(n, std::move(num), den);
    g.rank_ = rank;
    return g;
  }

  /// Arbitrary symmetric rational matrix with unit diagonal; rank certified by exact elimination.
  static RationalGram from_entries(std::size_t n, const std::vector<Rational>& m) {
    if (m.size() != n * n || n == 0) throw ParameterError("gram matrix size does not match point count");
    std::int64_t den = 1;
    for (const auto& e : m) den = std::lcm(den, e.den());
    std::vector<std::int64_t> num(n * n);
    for (std::size_t i = 0; i < n * n; ++i) num[i] = detail::checked_mul(m[i].num(), den / m[i].den());
    for (std::size_t i = 0; i < n; ++i)
      if (num[i * n + i] != den) throw ParameterError("gram matrix diagonal must be 1 (unit sphere)");
    const auto in = symmetric_inertia(n, m);
    if (in.negative != 0) throw ParameterError("gram matrix is not positive semidefinite");
    return from_scaled(n, std::move(num), den, in.positive);
  }

  std::size_t size() const { return n_; }
  std::size_t rank() const { return rank_; }
  std::int64_t denominator() const { return den_; }
  std::int64_t numerator(std::size_t i, std::size_t j) const { return num_[i * n_ + j]; }
  Rational operator()(std::size_t i, std::size_t j) const { return {numerator(i, j), den_}; }

  /// A(X): the distinct inner products between distinct points, ascending.
  std::vector<Rational> inner_values() const {
    std::vector<std::int64_t> seen;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j) seen.push_back(numerator(i, j));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::vector<Rational> out;
    for (auto s : seen) out.emplace_back(s, den_);
    return out;
  }

  std::vector<Rational> entries() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (auto x : num_) out.emplace_back(x, den_);
    return out;
  }

  /// Gram of the point set with the points in `h` replaced by their antipodes.
  RationalGram antipodal_on(const bits::Set& h) const {
    RationalGram out = *this;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (h.contains(i) != h.contains(j)) out.num_[i * n_ + j] = -out.num_[i * n_ + j];
    return out;
  }

  friend bool operator==(const RationalGram&, const RationalGram&) = default;

 private:
  RationalGram(std::size_t n, std::vector<std::int64_t> num, std::int64_t den)
      : n_(n), den_(den), num_(std::move(num)) {}

  std::size_t n_ = 0;
  std::int64_t den_ = 1;
  std::vector<std::int64_t> num_;
  std::size_t rank_ = 0;
};

/// Gram matrix I + B/rho of the spherical embedding for the theta2-eigenspace.
///
/// The rank is certified through the annihilating polynomial: with N = rho I + B,
/// N^2 = 2(theta1 - theta2) N, so N has eigenvalues 0 and 2(theta1 - theta2)
/// and rank trace(N) / (2(theta1 - theta2)).
inline RationalGram gram_from_graph(const Graph& g, const SrgSpectrum& s) {
  require_switchable(s);
  detail::require_order(g, s);
  const auto cls = verify_srg(g);
  if (!cls.is_primitive_with(s.params))
    throw PreconditionError("graph is not a primitive SRG with parameters " + s.params.str());

  const std::size_t n = g.order();
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t rho = *s.rho;
  const std::int64_t eig = 2 * (s.theta1 - s.theta2);

  std::vector<std::int64_t> num(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) num[x * n + y] = x == y ? rho : (g.adjacent(x, y) ? -1 : 1);

  if (rho * rho + nn - 1 != eig * rho) throw PreconditionError("annihilator check failed on the diagonal");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const std::int64_t b = g.adjacent(x, y) ? -1 : 1;
      auto diff = static_cast<std::int64_t>(bits::count_xor(g.row(x), g.row(y)));
      if (g.adjacent(x, y)) diff -= 2;
      const std::int64_t n2 = 2 * rho * b + (nn - 2) - 2 * diff;
      if (n2 != eig * b) throw PreconditionError("annihilator check failed off the diagonal");
    }
  }
  if ((nn * rho) % eig != 0) throw PreconditionError("embedding rank is not integral");
  const auto d = static_cast<std::size_t>(nn * rho / eig);
  if (static_cast<std::int64_t>(d) != s.m2) throw PreconditionError("embedding rank differs from m2");
  return RationalGram::from_scaled(n, std::move(num), rho, d);
}

/// (v/m_i) E_i = (1/m_i) sum_j q_i(j) A_j, entrywise, for i in {1,2}.
inline std::vector<Rational> idempotent_gram(const Graph& g, const SrgSpectrum& s, int i) {
  if (i != 1 && i != 2) throw ParameterError("idempotent index must be 1 or 2");
  const auto e = eigenmatrices(s);
  const Rational m = i == 1 ? Rational(s.m1) : Rational(s.m2);
  const std::size_t n = g.order();
  std::vector<Rational> out(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int rel = x == y ? 0 : (g.adjacent(x, y) ? 1 : 2);
      out[x * n + y] = e.Q[rel][i] / m;
    }
  return out;
}

/// Moment test for spherical t-designs, t in {1,2}:
/// t=1: sum <x,y> = 0; t=2: additionally sum <x,y>^2 = n^2 / d.
inline bool check_design_moments(const RationalGram& G, int t) {
  if (t != 1 && t != 2) throw ParameterError("design strength must be 1 or 2");
  const std::size_t n = G.size();
  BigInt s1 = 0, s2 = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt v = G.numerator(i, j);
      s1 += v;
      s2 += v * v;
    }
  if (s1 != 0) return false;
  if (t == 1) return true;
  if (G.rank() == 0) return false;
  const BigInt den = G.denominator();
  return s2 * BigInt(G.rank()) == BigInt(n) * BigInt(n) * den * den;
}

/// phi(H) is a spherical 1-design: sum over x,y in H of <x,y> = 0.
inline bool subset_design1(const RationalGram& G, const SwitchingSet& h) {
  if (h.empty()) throw ParameterError("subset design test needs a nonempty set");
  const auto vs = h.vertices();
  for (Vertex v : vs)
    if (v >= G.size()) throw ParameterError("subset vertex out of range");
  std::int64_t s = 0;
  for (Vertex x : vs)
    for (Vertex y : vs) s += G.numerator(x, y);
  return s == 0;
}

/// n_i(x): for each point, how many other points sit at each inner product.
inline std::vector<std::map<Rational, std::size_t>> inner_product_distribution(const RationalGram& G) {
  std::vector<std::map<Rational, std::size_t>> out(G.size());
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j)
      if (i != j) ++out[i][G(i, j)];
  return out;
}

inline bool is_distance_invariant(const RationalGram& G) {
  const auto d = inner_product_distribution(G);
  return std::all_of(d.begin(), d.end(), [&](const auto& m) { return m == d.front(); });
}

/// sigma = D_H j is an eigenvector of M with eigenvalue v/m2, i.e. every
/// embedded point has inner product +-c with sigma (two parallel hyperplanes).
inline bool parallel_hyperplane_check(const RationalGram& M, const SrgSpectrum& s, const bits::Set& h) {
  require_switchable(s);
  const std::size_t n = M.size();
  if (static_cast<std::int64_t>(n) != s.params.v || h.universe() != n)
    throw PreconditionError("gram size does not match spectrum parameters");
  // (N sigma)_x * m2 == den * v * sigma_x with M = N / den
  for (std::size_t x = 0; x < n; ++x) {
    std::int64_t acc = 0;
    for (std::size_t y = 0; y < n; ++y) acc += h.contains(y) ? -M.numerator(x, y) : M.numerator(x, y);
    const std::int64_t sigma = h.contains(x) ? -1 : 1;
    if (acc * s.m2 != M.denominator() * s.params.v * sigma) return false;
  }
  return true;
}

inline bool parallel_hyperplane_check(const Graph& g, const SrgSpectrum& s, const SwitchingSet& h) {
  return parallel_hyperplane_check(gram_from_graph(g, s), s, h.mask(g.order()));
}

/// Relative bound d(rho^2 - 1)/(rho^2 - d) on equiangular line systems.
inline Rational relative_bound(std::int64_t d, std::int64_t rho) {
  if (d <= 0 || rho <= 0) throw ParameterError("relative bound needs positive d and rho");
  const std::int64_t r2 = rho * rho;
  if (r2 <= d) throw ParameterError("relative bound not applicable: rho^2 <= d");
  return Rational(d * (r2 - 1), r2 - d);
}

}  // namespace srgsw
