#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "srgswitch/bits.hpp"
#include "srgswitch/error.hpp"
#include "srgswitch/exact_rank.hpp"
#include "srgswitch/graph.hpp"
#include "srgswitch/switching.hpp"

namespace srgsw {

using Permutation = std::vector<Vertex>;

/// Upper triangle of the canonically relabelled adjacency matrix, row by row.
struct CanonicalKey {
  std::size_t n = 0;
  std::vector<bits::Word> words;

  std::size_t bit_length() const { return n * (n - 1) / 2; }
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct Digest {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  std::string hex() const {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string s(32, '0');
    for (int i = 0; i < 16; ++i) {
      s[15 - i] = kHex[(hi >> (4 * i)) & 15];
      s[31 - i] = kHex[(lo >> (4 * i)) & 15];
    }
    return s;
  }
  friend auto operator<=>(const Digest&, const Digest&) = default;
};

struct DigestHash {
  std::size_t operator()(const Digest& d) const { return static_cast<std::size_t>(d.lo ^ (d.hi * 0x9e3779b97f4a7c15ULL)); }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

inline Digest digest_of(const CanonicalKey& key) {
  std::uint64_t a = detail::mix64(key.n ^ 0x6a09e667f3bcc908ULL);
  std::uint64_t b = detail::mix64(key.n ^ 0xbb67ae8584caa73bULL);
  for (bits::Word w : key.words) {
    a = detail::mix64(a ^ w);
    b = detail::mix64(b + (w * 0x9e3779b97f4a7c15ULL) + 0x3c6ef372fe94f82bULL);
  }
  return {a, b};
}

struct CanonicalForm {
  Permutation ordering;  // ordering[i] = input vertex placed at canonical position i
  CanonicalKey key;
  Digest digest;
};

struct AutGroup {
  std::vector<Permutation> generators;
  BigInt order = 1;
};

namespace detail {

// Ordered partition: lab lists vertices cell by cell; cell_start[p] is the
// start position of the cell holding position p, cell_end[s] the end of the
// cell starting at s.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<std::uint32_t> cell_start;
  std::vector<std::uint32_t> cell_end;
  std::size_t cells = 0;

  explicit Partition(std::size_t n) : lab(n), cell_start(n, 0), cell_end(n, 0), cells(1) {
    std::iota(lab.begin(), lab.end(), Vertex{0});
    cell_end[0] = static_cast<std::uint32_t>(n);
  }
  bool discrete() const { return cells == lab.size(); }
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()), wpr_(g.words_per_row()) {}

  void run() {
    Partition root(n_);
    cur_.traces.clear();
    cur_.chosen.clear();
    cur_.traces.push_back(refine(root, {0}));
    dfs(root, 0, true);
  }

  CanonicalForm form() const {
    CanonicalForm f;
    f.ordering = best_.lab;
    f.key.n = n_;
    f.key.words.assign(bits::words_for(n_ * (n_ - 1) / 2), 0);
    std::size_t b = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j, ++b)
        if (bits::test(std::span<const bits::Word>(best_.cert.data() + i * wpr_, wpr_), j))
          bits::set(f.key.words, b);
    f.digest = digest_of(f.key);
    return f;
  }

  AutGroup group() const { return {generators_, order_}; }

 private:
  using Trace = std::vector<std::int64_t>;

  struct Path {
    std::vector<Trace> traces;  // traces[l] = refinement trace of the node at level l
    std::vector<Vertex> chosen;  // vertex individualized at each level
    std::vector<Vertex> lab;
    std::vector<bits::Word> cert;
  };

  // Refines p to the coarsest equitable refinement, starting from the given splitter cells.
  Trace refine(Partition& p, std::initializer_list<std::uint32_t> initial) {
    Trace trace;
    std::vector<char> queued(n_, 0);
    std::deque<std::uint32_t> queue;
    for (auto s : initial) {
      queue.push_back(s);
      queued[s] = 1;
    }
    std::vector<bits::Word> splitter(wpr_);
    std::vector<std::uint32_t> counts(n_);
    std::vector<std::uint32_t> order;
    while (!queue.empty() && !p.discrete()) {
      const std::uint32_t s = queue.front();
      queue.pop_front();
      queued[s] = 0;
      std::fill(splitter.begin(), splitter.end(), 0);
      for (std::uint32_t q = s; q < p.cell_end[s]; ++q) bits::set(splitter, p.lab[q]);
      trace.push_back(-static_cast<std::int64_t>(s) - 1);

      for (std::uint32_t c = 0; c < n_;) {
        const std::uint32_t ce = p.cell_end[c];
        if (ce - c > 1) {
          bool split = false;
          for (std::uint32_t q = c; q < ce; ++q) {
            counts[q] = static_cast<std::uint32_t>(bits::count_and(g_.row(p.lab[q]), splitter));
            if (counts[q] != counts[c]) split = true;
          }
          if (split) split_cell(p, c, ce, counts, order, queue, queued, trace);
        }
        c = ce;
      }
    }
    trace.push_back(static_cast<std::int64_t>(p.cells));
    return trace;
  }

  void split_cell(Partition& p, std::uint32_t c, std::uint32_t ce, const std::vector<std::uint32_t>& counts,
                  std::vector<std::uint32_t>& order, std::deque<std::uint32_t>& queue, std::vector<char>& queued,
                  Trace& trace) {
    order.resize(ce - c);
    std::iota(order.begin(), order.end(), c);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return counts[a] < counts[b]; });
    std::vector<Vertex> vs(order.size());
    std::vector<std::uint32_t> cs(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      vs[i] = p.lab[order[i]];
      cs[i] = counts[order[i]];
    }
    std::vector<std::uint32_t> starts;
    trace.push_back(c);
    for (std::uint32_t i = 0; i < vs.size(); ++i) {
      p.lab[c + i] = vs[i];
      if (i == 0 || cs[i] != cs[i - 1]) {
        starts.push_back(c + i);
        trace.push_back(cs[i]);
      }
    }
    for (std::size_t k = 0; k < starts.size(); ++k) {
      const std::uint32_t st = starts[k];
      const std::uint32_t en = k + 1 < starts.size() ? starts[k + 1] : ce;
      p.cell_end[st] = en;
      for (std::uint32_t q = st; q < en; ++q) p.cell_start[q] = st;
      trace.push_back(en - st);
    }
    p.cells += starts.size() - 1;

    if (queued[c]) {
      for (std::size_t k = 1; k < starts.size(); ++k) {
        queue.push_back(starts[k]);
        queued[starts[k]] = 1;
      }
    } else {
      std::size_t largest = 0;
      for (std::size_t k = 1; k < starts.size(); ++k)
        if (p.cell_end[starts[k]] - starts[k] > p.cell_end[starts[largest]] - starts[largest]) largest = k;
      for (std::size_t k = 0; k < starts.size(); ++k)
        if (k != largest) {
          queue.push_back(starts[k]);
          queued[starts[k]] = 1;
        }
    }
  }

  std::uint32_t target_cell(const Partition& p) const {
    std::uint32_t best = static_cast<std::uint32_t>(n_);
    std::uint32_t best_size = static_cast<std::uint32_t>(n_) + 1;
    for (std::uint32_t c = 0; c < n_; c = p.cell_end[c]) {
      const std::uint32_t sz = p.cell_end[c] - c;
      if (sz > 1 && sz < best_size) {
        best = c;
        best_size = sz;
      }
    }
    return best;
  }

  static void individualize(Partition& p, std::uint32_t c, Vertex w) {
    const std::uint32_t ce = p.cell_end[c];
    auto it = std::find(p.lab.begin() + c, p.lab.begin() + ce, w);
    std::iter_swap(p.lab.begin() + c, it);
    p.cell_end[c] = c + 1;
    p.cell_end[c + 1] = ce;
    for (std::uint32_t q = c + 1; q < ce; ++q) p.cell_start[q] = c + 1;
    ++p.cells;
  }

  // Lexicographic comparison of the current path's traces up to `level` with another path.
  int compare_traces(const Path& other, std::size_t level) const {
    for (std::size_t l = 0; l <= level; ++l) {
      if (l >= other.traces.size()) return -1;
      if (cur_.traces[l] < other.traces[l]) return -1;
      if (other.traces[l] < cur_.traces[l]) return 1;
    }
    return 0;
  }

  std::vector<bits::Word> certificate(const Partition& p) const {
    std::vector<bits::Word> cert(n_ * wpr_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::span<bits::Word> r(cert.data() + i * wpr_, wpr_);
      for (std::size_t j = 0; j < n_; ++j)
        if (g_.adjacent(p.lab[i], p.lab[j])) bits::set(r, j);
    }
    return cert;
  }

  static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t l = 0;
    while (l < a.size() && l < b.size() && a[l] == b[l]) ++l;
    return l;
  }

  void add_generator(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    Permutation gamma(n_);
    for (std::size_t i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    bool identity = true;
    for (std::size_t i = 0; i < n_ && identity; ++i) identity = gamma[i] == i;
    if (!identity) generators_.push_back(std::move(gamma));
  }

  // Returns the level of the node that should continue its child loop.
  std::ptrdiff_t leaf(const Partition& p, std::size_t level, bool eq_first) {
    cur_.lab = p.lab;
    auto cert = certificate(p);
    if (!have_first_) {
      have_first_ = true;
      cur_.cert = cert;
      first_ = cur_;
      best_ = cur_;
      return static_cast<std::ptrdiff_t>(level) - 1;
    }
    if (eq_first && cert == first_.cert) {
      add_generator(first_.lab, cur_.lab);
      return static_cast<std::ptrdiff_t>(common_prefix(cur_.chosen, first_.chosen));
    }
    const int cmp = compare_traces(best_, level);
    if (cmp == 0 && cert == best_.cert) {
      add_generator(best_.lab, cur_.lab);
      return static_cast<std::ptrdiff_t>(common_prefix(cur_.chosen, best_.chosen));
    }
    if (cmp < 0 || (cmp == 0 && cert < best_.cert)) {
      cur_.cert = std::move(cert);
      best_ = cur_;
    }
    return static_cast<std::ptrdiff_t>(level) - 1;
  }

  // Union-find orbits of the subgroup generated by generators fixing `prefix` pointwise.
  std::vector<Vertex> orbits_fixing(std::span<const Vertex> prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (Vertex v : prefix) fixes = fixes && gamma[v] == v;
      if (!fixes) continue;
      for (std::size_t x = 0; x < n_; ++x) {
        const Vertex a = find(static_cast<Vertex>(x));
        const Vertex b = find(gamma[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t x = 0; x < n_; ++x) parent[x] = find(static_cast<Vertex>(x));
    return parent;
  }

  std::ptrdiff_t dfs(const Partition& p, std::size_t level, bool on_first) {
    if (p.discrete()) return leaf(p, level, on_first || eq_first_at(level));
    const std::uint32_t c = target_cell(p);
    std::vector<Vertex> members(p.lab.begin() + c, p.lab.begin() + p.cell_end[c]);
    std::sort(members.begin(), members.end());

    std::vector<Vertex> explored;
    std::vector<Vertex> orbit;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    const bool first_path_node = on_first;

    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      const Vertex w = members[idx];
      if (first_path_node && idx > 0) {
        if (gens_seen != generators_.size()) {
          orbit = orbits_fixing(std::span<const Vertex>(first_.chosen.data(), level));
          gens_seen = generators_.size();
        }
        if (std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return orbit[u] == orbit[w]; })) continue;
      }
      explored.push_back(w);

      Partition child = p;
      individualize(child, c, w);
      cur_.chosen.resize(level);
      cur_.chosen.push_back(w);
      cur_.traces.resize(level + 1);
      cur_.traces.push_back(refine(child, {c}));

      const bool child_on_first = first_path_node && idx == 0 && !have_first_;
      const bool eq_first = child_on_first || eq_first_at(level + 1);
      if (!eq_first && have_first_ && compare_traces(best_, level + 1) > 0) continue;

      const std::ptrdiff_t r = dfs(child, level + 1, child_on_first);
      if (r < static_cast<std::ptrdiff_t>(level)) return r;
    }

    if (first_path_node) {
      const auto orb = orbits_fixing(std::span<const Vertex>(first_.chosen.data(), level));
      const Vertex v = first_.chosen[level];
      std::size_t size = 0;
      for (std::size_t x = 0; x < n_; ++x) size += orb[x] == orb[v];
      order_ *= size;
    }
    return static_cast<std::ptrdiff_t>(level) - 1;
  }

  bool eq_first_at(std::size_t level) const {
    if (!have_first_) return false;
    if (first_.traces.size() < level + 1) return false;
    for (std::size_t l = 0; l <= level; ++l)
      if (cur_.traces[l] != first_.traces[l]) return false;
    return true;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t wpr_;
  Path cur_, first_, best_;
  bool have_first_ = false;
  std::vector<Permutation> generators_;
  BigInt order_ = 1;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  require_within_cap(g.order());
  detail::CanonSearch s(g);
  s.run();
  return s.form();
}

/// Canonical form together with automorphism generators and the exact group order.
inline std::pair<CanonicalForm, AutGroup> canonical_form_with_group(const Graph& g) {
  require_within_cap(g.order());
  detail::CanonSearch s(g);
  s.run();
  return {s.form(), s.group()};
}

inline AutGroup automorphisms(const Graph& g) { return canonical_form_with_group(g).second; }

/// The graph relabelled so that vertex ordering[i] becomes i.
inline Graph canonical_graph(const Graph& g, const CanonicalForm& f) {
  Permutation perm(g.order());
  for (std::size_t i = 0; i < f.ordering.size(); ++i) perm[f.ordering[i]] = static_cast<Vertex>(i);
  return relabel(g, perm);
}

inline bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map) {
  if (a.order() != b.order() || map.size() != a.order()) return false;
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = x + 1; y < a.order(); ++y)
      if (a.adjacent(x, y) != b.adjacent(map[x], map[y])) return false;
  return true;
}

/// Vertex map a -> b when the graphs are isomorphic.
inline std::optional<Permutation> are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return std::nullopt;
  const auto fa = canonical_form(a);
  const auto fb = canonical_form(b);
  if (fa.key != fb.key) return std::nullopt;
  Permutation map(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) map[fa.ordering[i]] = fb.ordering[i];
  if (!is_isomorphism(a, b, map)) throw Error("internal error: canonical keys agree but mapping is not an isomorphism");
  return map;
}

struct OrbitPartition {
  std::vector<std::size_t> representatives;  // indices into the input, first of each orbit
  std::vector<std::size_t> orbit_of;         // orbit number of each input set
};

/// Partitions `sets` into orbits under the group generated by `gens`.
/// Orbits are explored in full, so sets linked only through images outside
/// the input are still merged.
inline OrbitPartition orbit_reps(const std::vector<Permutation>& gens, const std::vector<SwitchingSet>& sets) {
  struct VecHash {
    std::size_t operator()(const std::vector<Vertex>& v) const {
      std::uint64_t h = 0x84222325cbf29ce4ULL;
      for (Vertex x : v) h = detail::mix64(h ^ x);
      return static_cast<std::size_t>(h);
    }
  };
  std::unordered_map<std::vector<Vertex>, std::size_t, VecHash> index;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<Vertex> key(sets[i].vertices().begin(), sets[i].vertices().end());
    index.emplace(std::move(key), i);
  }
  OrbitPartition out;
  out.orbit_of.assign(sets.size(), static_cast<std::size_t>(-1));
  std::unordered_set<std::vector<Vertex>, VecHash> seen;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (out.orbit_of[i] != static_cast<std::size_t>(-1)) continue;
    const std::size_t orbit = out.representatives.size();
    out.representatives.push_back(i);
    std::vector<Vertex> start(sets[i].vertices().begin(), sets[i].vertices().end());
    std::deque<std::vector<Vertex>> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      auto s = std::move(queue.front());
      queue.pop_front();
      if (auto it = index.find(s); it != index.end()) out.orbit_of[it->second] = orbit;
      for (const auto& gamma : gens) {
        std::vector<Vertex> img(s.size());
        for (std::size_t k = 0; k < s.size(); ++k) img[k] = gamma[s[k]];
        std::sort(img.begin(), img.end());
        if (seen.insert(img).second) queue.push_back(std::move(img));
      }
    }
  }
  return out;
}

inline OrbitPartition orbit_reps(const Graph& g, const std::vector<SwitchingSet>& sets) {
  return orbit_reps(automorphisms(g).generators, sets);
}

}  // namespace srgsw
