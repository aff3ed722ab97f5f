#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srgswitch/bits.hpp"
#include "srgswitch/error.hpp"
#include "srgswitch/graph.hpp"
#include "srgswitch/srg.hpp"
#include "srgswitch/switching.hpp"

namespace srgsw {

inline constexpr std::uint64_t kDefaultSubsetBudget = 100'000'000;

enum class SetMode { Brute, Cliques, CliqueUnions, Explicit };

inline const char* to_string(SetMode m) {
  switch (m) {
    case SetMode::Brute: return "brute";
    case SetMode::Cliques: return "cliques";
    case SetMode::CliqueUnions: return "clique-unions";
    case SetMode::Explicit: return "explicit";
  }
  return "?";
}

inline SetMode parse_set_mode(const std::string& s) {
  if (s == "brute") return SetMode::Brute;
  if (s == "cliques") return SetMode::Cliques;
  if (s == "clique-unions") return SetMode::CliqueUnions;
  if (s == "explicit") return SetMode::Explicit;
  throw ParameterError("unknown strategy '" + s + "' (brute, cliques, clique-unions, explicit)");
}

struct SetStrategy {
  SetMode mode = SetMode::Cliques;
  std::size_t max_h = 0;      // brute: largest subset size
  std::size_t max_parts = 2;  // clique-unions: most cliques per union
  std::vector<SwitchingSet> sets;  // explicit
  std::uint64_t budget = kDefaultSubsetBudget;

  static SetStrategy brute(std::size_t max_h, std::uint64_t budget = kDefaultSubsetBudget) {
    return {SetMode::Brute, max_h, 0, {}, budget};
  }
  static SetStrategy cliques(std::uint64_t budget = kDefaultSubsetBudget) { return {SetMode::Cliques, 0, 0, {}, budget}; }
  static SetStrategy clique_unions(std::size_t parts, std::uint64_t budget = kDefaultSubsetBudget) {
    return {SetMode::CliqueUnions, 0, parts, {}, budget};
  }
  static SetStrategy explicit_sets(std::vector<SwitchingSet> s) { return {SetMode::Explicit, 0, 0, std::move(s), 0}; }
};

/// Size of a clique that satisfies the same-parameter criterion: h - 1 = k - (v-h)/2.
inline std::int64_t clique_switch_size(const SrgSpectrum& s) {
  require_switchable(s);
  return 2 * s.theta1 + 2;
}

/// Receives each qualifying set; return false to stop the enumeration.
using SetSink = std::function<bool(const bits::Set&)>;

namespace detail {

inline std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

/// Enumerates all h-subsets (ascending vertex order) whose induced subgraph is
/// `target`-regular, pruning as soon as a chosen vertex can no longer reach
/// `target` or already exceeds it.
class RegularSubsetEnumerator {
 public:
  RegularSubsetEnumerator(const Graph& g, std::size_t h, std::size_t target, SetSink sink)
      : g_(g), n_(g.order()), h_(h), target_(target), sink_(std::move(sink)), chosen_(g.order()), deg_(g.order(), 0) {}

  // Returns false when the sink asked to stop.
  bool run() {
    if (h_ == 0 || h_ > n_ || target_ >= h_) return true;
    return extend(0);
  }

 private:
  bool extend(std::size_t next) {
    const std::size_t size = stack_.size();
    if (size == h_) return sink_(chosen_);
    const std::size_t remaining = h_ - size;
    for (std::size_t y = next; y + remaining <= n_; ++y) {
      const std::size_t dy = bits::count_and(g_.row(y), chosen_.words());
      if (dy > target_) continue;
      bool ok = true;
      for (Vertex x : stack_)
        if (g_.adjacent(x, y) && deg_[x] + 1 > target_) {
          ok = false;
          break;
        }
      if (!ok) continue;
      // y and every chosen vertex must still be able to reach the target using later vertices.
      const std::size_t after = remaining - 1;
      if (dy + std::min(after, later_neighbours(y, y + 1)) < target_) continue;
      push(y);
      bool feasible = true;
      for (Vertex x : stack_)
        if (deg_[x] + std::min(after, later_neighbours(x, y + 1)) < target_) {
          feasible = false;
          break;
        }
      const bool keep_going = !feasible || extend(y + 1);
      pop(y);
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t later_neighbours(std::size_t x, std::size_t from) const {
    std::size_t c = 0;
    const auto r = g_.row(x);
    for (std::size_t w = from / bits::kWordBits; w < r.size(); ++w) {
      bits::Word m = r[w];
      if (w == from / bits::kWordBits) m &= ~bits::Word{0} << (from % bits::kWordBits);
      c += static_cast<std::size_t>(std::popcount(m));
    }
    return c;
  }

  void push(std::size_t y) {
    for (Vertex x : stack_)
      if (g_.adjacent(x, y)) ++deg_[x], ++deg_[y];
    stack_.push_back(static_cast<Vertex>(y));
    chosen_.insert(y);
  }
  void pop(std::size_t y) {
    stack_.pop_back();
    chosen_.erase(y);
    for (Vertex x : stack_)
      if (g_.adjacent(x, y)) --deg_[x];
    deg_[y] = 0;
  }

  const Graph& g_;
  std::size_t n_, h_, target_;
  SetSink sink_;
  bits::Set chosen_;
  std::vector<Vertex> stack_;
  std::vector<std::size_t> deg_;
};

/// All cliques of size h, ascending vertex order.
inline bool enumerate_cliques(const Graph& g, std::size_t h, const std::function<bool(const std::vector<Vertex>&)>& f) {
  const std::size_t n = g.order();
  std::vector<Vertex> stack;
  std::function<bool(std::vector<bits::Word>&)> rec = [&](std::vector<bits::Word>& cand) -> bool {
    if (stack.size() == h) return f(stack);
    if (bits::count(cand) + stack.size() < h) return true;
    bool go = true;
    bits::for_each(std::span<const bits::Word>(cand), [&](std::size_t y) {
      if (!go) return;
      std::vector<bits::Word> next(cand.size());
      const auto r = g.row(y);
      for (std::size_t w = 0; w < next.size(); ++w) {
        next[w] = cand[w] & r[w];
        if (w < y / bits::kWordBits) next[w] = 0;
        else if (w == y / bits::kWordBits) next[w] &= ~bits::Word{0} << (y % bits::kWordBits);
      }
      stack.push_back(static_cast<Vertex>(y));
      go = rec(next);
      stack.pop_back();
    });
    return go;
  };
  std::vector<bits::Word> all(bits::words_for(n), 0);
  for (std::size_t i = 0; i < n; ++i) bits::set(all, i);
  return rec(all);
}

}  // namespace detail

/// Σ C(v,h) over the sizes brute mode would scan.
inline std::uint64_t brute_candidate_count(std::size_t v, std::size_t max_h) {
  std::uint64_t total = 0;
  for (std::size_t h = 1; h <= std::min(max_h, v); ++h) {
    if ((v - h) % 2 != 0) continue;
    const auto c = detail::saturating_binomial(v, h);
    total = total > std::numeric_limits<std::uint64_t>::max() - c ? std::numeric_limits<std::uint64_t>::max() : total + c;
  }
  return total;
}

/// Streams every switching set the strategy yields that passes check_thm1.
/// The empty set is never produced by the generating modes.
inline std::uint64_t find_sets(const Graph& g, const SrgSpectrum& s, const SetStrategy& strategy, const SetSink& sink) {
  require_switchable(s);
  detail::require_order(g, s);
  const auto& p = s.params;
  const auto v = static_cast<std::size_t>(p.v);
  std::uint64_t emitted = 0;
  auto emit = [&](const bits::Set& h) {
    ++emitted;
    return sink(h);
  };

  switch (strategy.mode) {
    case SetMode::Brute: {
      const auto count = brute_candidate_count(v, strategy.max_h);
      if (count > strategy.budget)
        throw ResourceError("brute strategy would scan " + std::to_string(count) + " subsets, budget is " +
                            std::to_string(strategy.budget));
      for (std::size_t h = 1; h <= std::min(strategy.max_h, v); ++h) {
        if ((v - h) % 2 != 0) continue;
        const std::int64_t target = p.k - static_cast<std::int64_t>(v - h) / 2;
        if (target < 0) continue;
        if (h == v) {
          bits::Set all(v);
          for (std::size_t i = 0; i < v; ++i) all.insert(i);
          if (!emit(all)) return emitted;
          continue;
        }
        detail::RegularSubsetEnumerator en(g, h, static_cast<std::size_t>(target), emit);
        if (!en.run()) return emitted;
      }
      return emitted;
    }
    case SetMode::Cliques:
    case SetMode::CliqueUnions: {
      const auto h = static_cast<std::size_t>(clique_switch_size(s));
      std::vector<std::vector<Vertex>> cliques;
      detail::enumerate_cliques(g, h, [&](const std::vector<Vertex>& c) {
        if (cliques.size() >= strategy.budget)
          throw ResourceError("clique enumeration exceeded budget " + std::to_string(strategy.budget));
        cliques.push_back(c);
        return true;
      });
      std::uint64_t examined = 0;
      const std::size_t parts = strategy.mode == SetMode::Cliques ? 1 : std::max<std::size_t>(1, strategy.max_parts);
      // Unions of pairwise disjoint cliques, chosen in increasing index order.
      std::vector<std::size_t> pick;
      bits::Set used(v);
      std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
        if (!pick.empty()) {
          if (++examined > strategy.budget)
            throw ResourceError("clique-union enumeration exceeded budget " + std::to_string(strategy.budget));
          if ((pick.size() == 1 || check_thm1(g, s, used)) && !emit(used)) return false;
        }
        if (pick.size() == parts) return true;
        for (std::size_t i = from; i < cliques.size(); ++i) {
          const auto& c = cliques[i];
          if (std::any_of(c.begin(), c.end(), [&](Vertex x) { return used.contains(x); })) continue;
          pick.push_back(i);
          for (Vertex x : c) used.insert(x);
          const bool go = rec(i + 1);
          for (Vertex x : c) used.erase(x);
          pick.pop_back();
          if (!go) return false;
        }
        return true;
      };
      rec(0);
      return emitted;
    }
    case SetMode::Explicit: {
      for (const auto& h : strategy.sets) {
        const auto m = h.mask(v);
        if (check_thm1(g, s, m) && !emit(m)) return emitted;
      }
      return emitted;
    }
  }
  return emitted;
}

inline std::vector<SwitchingSet> collect_sets(const Graph& g, const SrgSpectrum& s, const SetStrategy& strategy) {
  std::vector<SwitchingSet> out;
  find_sets(g, s, strategy, [&](const bits::Set& h) {
    out.push_back(SwitchingSet::from_bits(h));
    return true;
  });
  return out;
}

/// All v/2-subsets inducing a (k - mu)-regular subgraph (other-parameter switching).
inline std::uint64_t find_thm2_sets(const Graph& g, const SrgSpectrum& s, std::uint64_t budget, const SetSink& sink) {
  require_switchable(s);
  detail::require_order(g, s);
  const auto& p = s.params;
  const auto v = static_cast<std::size_t>(p.v);
  const auto count = detail::saturating_binomial(v, v / 2);
  if (count > budget)
    throw ResourceError("other-parameter scan would examine " + std::to_string(count) + " subsets, budget is " +
                        std::to_string(budget));
  std::uint64_t emitted = 0;
  SetSink counting = [&](const bits::Set& h) {
    ++emitted;
    return sink(h);
  };
  if (p.k - p.mu < 0) return 0;
  detail::RegularSubsetEnumerator en(g, v / 2, static_cast<std::size_t>(p.k - p.mu), counting);
  en.run();
  return emitted;
}

}  // namespace srgsw
