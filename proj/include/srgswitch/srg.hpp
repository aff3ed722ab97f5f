#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "srgswitch/bits.hpp"
#include "srgswitch/error.hpp"
#include "srgswitch/graph.hpp"
#include "srgswitch/rational.hpp"

namespace srgsw {

struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  // k(k-lambda-1) = (v-k-1)mu
  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
  bool nontrivial() const { return 0 < k && k < v - 1; }

  std::string str() const {
    return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
           std::to_string(mu) + ")";
  }

  friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SrgParams& p) { return os << p.str(); }
};

enum class SrgKind { NotRegular, CompleteOrEmpty, RegularNotSrg, ImprimitiveSrg, PrimitiveSrg };

inline const char* to_string(SrgKind k) {
  switch (k) {
    case SrgKind::NotRegular: return "not-regular";
    case SrgKind::CompleteOrEmpty: return "complete-or-empty";
    case SrgKind::RegularNotSrg: return "regular-not-srg";
    case SrgKind::ImprimitiveSrg: return "imprimitive-srg";
    case SrgKind::PrimitiveSrg: return "primitive-srg";
  }
  return "?";
}

struct SrgClassification {
  SrgKind kind = SrgKind::NotRegular;
  std::optional<SrgParams> params;  // set for imprimitive and primitive SRGs

  bool primitive() const { return kind == SrgKind::PrimitiveSrg; }
  bool is_primitive_with(const SrgParams& p) const { return primitive() && params == p; }
  friend bool operator==(const SrgClassification&, const SrgClassification&) = default;
};

/// Classifies g by counting common neighbours of every vertex pair.
inline SrgClassification verify_srg(const Graph& g) {
  const std::size_t n = g.order();
  const auto k = is_regular(g);
  if (!k) return {SrgKind::NotRegular, std::nullopt};
  if (*k == 0 || *k == n - 1) return {SrgKind::CompleteOrEmpty, std::nullopt};

  std::optional<std::size_t> lambda, mu;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const std::size_t c = bits::count_and(g.row(x), g.row(y));
      auto& slot = g.adjacent(x, y) ? lambda : mu;
      if (!slot) slot = c;
      else if (*slot != c) return {SrgKind::RegularNotSrg, std::nullopt};
    }
  const SrgParams p{static_cast<std::int64_t>(n), static_cast<std::int64_t>(*k),
                    static_cast<std::int64_t>(*lambda), static_cast<std::int64_t>(*mu)};
  const bool primitive = is_connected(g) && is_connected(complement(g));
  return {primitive ? SrgKind::PrimitiveSrg : SrgKind::ImprimitiveSrg, p};
}

/// Closed-form spectral data of a primitive SRG with integral eigenvalues.
struct SrgSpectrum {
  SrgParams params;
  std::int64_t theta1 = 0;  // > 0
  std::int64_t theta2 = 0;  // < 0
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  bool switchable = false;  // v = 2(k - theta1)
  std::optional<std::int64_t> rho;  // 1 + 2 theta1, set when switchable

  friend bool operator==(const SrgSpectrum&, const SrgSpectrum&) = default;
};

namespace detail {
inline std::optional<std::int64_t> exact_sqrt(std::int64_t d) {
  if (d < 0) return std::nullopt;
  std::int64_t lo = 0, hi = 3037000499;  // floor(sqrt(INT64_MAX))
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= d) lo = mid;
    else hi = mid - 1;
  }
  if (lo * lo != d) return std::nullopt;
  return lo;
}
}  // namespace detail

inline SrgSpectrum derive_spectrum(const SrgParams& p) {
  if (!p.nontrivial()) throw ParameterError("parameters " + p.str() + " need 0 < k < v-1");
  if (p.lambda < 0 || p.mu < 0) throw ParameterError("parameters " + p.str() + " must be non-negative");
  if (!p.feasible()) throw ParameterError("parameters " + p.str() + " violate k(k-lambda-1) = (v-k-1)mu");
  if (p.mu == 0 || p.mu == p.k) throw ParameterError("parameters " + p.str() + " are imprimitive (mu = 0 or mu = k)");

  const std::int64_t b = p.lambda - p.mu;
  const std::int64_t disc = b * b + 4 * (p.k - p.mu);
  const auto s = detail::exact_sqrt(disc);
  if (!s || (b + *s) % 2 != 0)
    throw UnsupportedSpectrum("parameters " + p.str() + " have irrational eigenvalues (conference type)");

  SrgSpectrum out;
  out.params = p;
  out.theta1 = (b + *s) / 2;
  out.theta2 = (b - *s) / 2;
  const std::int64_t gap = out.theta1 - out.theta2;
  const std::int64_t num1 = -(p.v - 1) * out.theta2 - p.k;
  const std::int64_t num2 = (p.v - 1) * out.theta1 + p.k;
  if (num1 % gap != 0 || num2 % gap != 0)
    throw ParameterError("parameters " + p.str() + " give non-integral multiplicities");
  out.m1 = num1 / gap;
  out.m2 = num2 / gap;
  if (out.m1 <= 0 || out.m2 <= 0)
    throw ParameterError("parameters " + p.str() + " give non-positive multiplicities");
  out.switchable = p.v == 2 * (p.k - out.theta1);
  if (out.switchable) out.rho = 1 + 2 * out.theta1;
  return out;
}

inline SrgSpectrum require_switchable(const SrgSpectrum& s) {
  if (!s.switchable)
    throw PreconditionError("parameters " + s.params.str() + " do not satisfy v = 2(k - theta1)");
  return s;
}

/// Spectrum of a graph that must be a primitive SRG.
inline SrgSpectrum spectrum_of(const Graph& g) {
  const auto cls = verify_srg(g);
  if (!cls.primitive()) throw PreconditionError(std::string("graph is not a primitive SRG (") + to_string(cls.kind) + ")");
  return derive_spectrum(*cls.params);
}

/// First (P) and second (Q) eigenmatrices of the 2-class association scheme.
/// P[j][i] = p_i(j), Q[j][i] = q_i(j).
struct Eigenmatrices {
  std::array<std::array<std::int64_t, 3>, 3> P{};
  std::array<std::array<Rational, 3>, 3> Q{};
};

inline Eigenmatrices eigenmatrices(const SrgSpectrum& s) {
  const auto& p = s.params;
  Eigenmatrices e;
  e.P = {{{1, p.k, p.v - 1 - p.k}, {1, s.theta1, -1 - s.theta1}, {1, s.theta2, -1 - s.theta2}}};
  const std::array<std::int64_t, 3> valency{1, p.k, p.v - 1 - p.k};
  const std::array<std::int64_t, 3> mult{1, s.m1, s.m2};
  // q_i(j) / m_i = p_j(i) / k_j
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) e.Q[j][i] = Rational(mult[i] * e.P[i][j], valency[j]);
  return e;
}

}  // namespace srgsw
