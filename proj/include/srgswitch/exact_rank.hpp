#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srgswitch/error.hpp"
#include "srgswitch/rational.hpp"

namespace srgsw {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = BasicRational<BigInt>;

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
};

/// Inertia of a symmetric rational matrix (row-major, n x n) by exact
/// symmetric elimination with diagonal pivoting. When a remaining block has a
/// zero diagonal but a nonzero off-diagonal entry it is indefinite; the pair
/// (e_i + e_j) or (e_i - e_j) supplies a nonzero pivot.
template <class Entry>
Inertia symmetric_inertia(std::size_t n, const std::vector<Entry>& m) {
  if (m.size() != n * n) throw ParameterError("matrix size does not match order");
  std::vector<BigRational> a;
  a.reserve(m.size());
  for (const auto& e : m) a.emplace_back(BigInt(e.num()), BigInt(e.den()));
  auto at = [&](std::size_t i, std::size_t j) -> BigRational& { return a[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(at(i, j) == at(j, i))) throw ParameterError("matrix is not symmetric");

  Inertia out;
  std::vector<char> done(n, 0);
  const BigRational zero(0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && !(at(i, i) == zero)) piv = i;
    if (piv == n) {
      // Zero diagonal on the rest: combine a pair with a nonzero coupling.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && !(at(i, j) == zero)) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      // Row/column operation r_i += r_j keeps congruence; new diagonal = 2 a_ij.
      for (std::size_t c = 0; c < n; ++c) at(pi, c) += at(pj, c);
      for (std::size_t r = 0; r < n; ++r) at(r, pi) += at(r, pj);
      piv = pi;
    }
    const BigRational d = at(piv, piv);
    (d > zero ? out.positive : out.negative) += 1;
    done[piv] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || at(i, piv) == zero) continue;
      const BigRational f = at(i, piv) / d;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) at(i, j) -= f * at(piv, j);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i]) at(piv, i) = zero, at(i, piv) = zero;
  }
  out.zero = n - out.positive - out.negative;
  return out;
}

}  // namespace srgsw
