#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "srgswitch/canon.hpp"
#include "srgswitch/error.hpp"
#include "srgswitch/graph.hpp"
#include "srgswitch/graph6.hpp"
#include "srgswitch/search.hpp"
#include "srgswitch/srg.hpp"
#include "srgswitch/switching.hpp"

namespace srgsw {

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

struct ClosureLimits {
  std::size_t max_graphs = 0;  // frontier graphs expanded; 0 = unlimited
  double max_seconds = 0;      // wall clock; 0 = unlimited
};

struct ClosureOptions {
  SetStrategy strategy = SetStrategy::cliques();
  ClosureLimits limits;
  unsigned threads = 1;
  bool orbit_reduction = false;
  std::string seed_id = "seed";
};

struct ClassRecord {
  CanonicalKey key;
  Digest digest;
  std::string graph6;  // canonically relabelled graph
  std::size_t parent = kNoParent;  // class index the switch was applied to
  SwitchingSet via;                // set, in the parent's canonical labelling
  std::size_t depth = 0;
};

struct ClosureStats {
  std::uint64_t graphs_visited = 0;
  std::uint64_t sets_tried = 0;
  std::uint64_t classes_found = 0;
  std::uint64_t rejected = 0;  // switched graphs failing the parameter check
};

/// Breadth-first state of an isomorph-free switching closure.
struct ClosureState {
  SrgParams params;
  std::string seed_id;
  std::vector<ClassRecord> classes;
  std::deque<std::size_t> frontier;
  ClosureStats stats;
  bool truncated = false;

  std::optional<std::size_t> find(const CanonicalKey& key, const Digest& d) const {
    auto it = index_.find(d);
    if (it == index_.end()) return std::nullopt;
    for (std::size_t i : it->second)
      if (classes[i].key == key) return i;
    return std::nullopt;
  }

  // Returns the class index and whether it is new.
  std::pair<std::size_t, bool> insert(ClassRecord rec) {
    if (auto i = find(rec.key, rec.digest)) return {*i, false};
    const std::size_t id = classes.size();
    index_[rec.digest].push_back(id);
    classes.push_back(std::move(rec));
    stats.classes_found = classes.size();
    return {id, true};
  }

  /// Class indices ordered by canonical key.
  std::vector<std::size_t> sorted_by_key() const {
    std::vector<std::size_t> ids(classes.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](auto a, auto b) { return classes[a].key < classes[b].key; });
    return ids;
  }

 private:
  std::unordered_map<Digest, std::vector<std::size_t>, DigestHash> index_;
};

namespace detail {

struct Candidate {
  CanonicalKey key;
  Digest digest;
  std::string graph6;
  SwitchingSet via;
};

class Deadline {
 public:
  explicit Deadline(double seconds)
      : active_(seconds > 0),
        end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                    std::chrono::duration<double>(seconds))) {}
  bool passed() const { return active_ && std::chrono::steady_clock::now() >= end_; }

 private:
  bool active_;
  std::chrono::steady_clock::time_point end_;
};

inline ClassRecord make_record(const Graph& g, std::size_t parent, SwitchingSet via, std::size_t depth) {
  const auto f = canonical_form(g);
  return {f.key, f.digest, graph6::encode(canonical_graph(g, f)), parent, std::move(via), depth};
}

// Expands one graph: every set from `produce` is switched, checked against
// `expect`, canonicalized, and kept when absent from `known` and from earlier
// candidates of this graph.
template <class Produce>
std::vector<Candidate> expand(const Graph& g, const SrgParams& expect, Produce&& produce, const ClosureState& known,
                              const Deadline& deadline, std::atomic<bool>& out_of_time,
                              std::atomic<std::uint64_t>& sets_tried, std::atomic<std::uint64_t>& rejected) {
  std::vector<Candidate> out;
  std::unordered_map<Digest, std::vector<std::size_t>, DigestHash> local;
  produce([&](const bits::Set& h) {
    if (deadline.passed()) {
      out_of_time = true;
      return false;
    }
    ++sets_tried;
    const Graph sw = g.switched(h);
    if (!verify_srg(sw).is_primitive_with(expect)) {
      ++rejected;
      return true;
    }
    const auto f = canonical_form(sw);
    if (known.find(f.key, f.digest)) return true;
    auto& bucket = local[f.digest];
    for (std::size_t i : bucket)
      if (out[i].key == f.key) return true;
    bucket.push_back(out.size());
    out.push_back({f.key, f.digest, graph6::encode(canonical_graph(sw, f)), SwitchingSet::from_bits(h)});
    return true;
  });
  return out;
}

// Runs `work(i)` for i in [0, count) on up to `threads` workers.
template <class Work>
void parallel_for(std::size_t count, unsigned threads, Work&& work) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) work(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// Iterated same-parameter switching from `seed` until no new isomorphism
/// class appears or a limit is hit.
///
/// Each BFS level is expanded in parallel against a read-only class index;
/// new classes are committed afterwards in frontier order, so the class set
/// does not depend on scheduling.
inline ClosureState closure(const Graph& seed, const ClosureOptions& opt) {
  const auto spec = require_switchable(spectrum_of(seed));
  ClosureState state;
  state.params = spec.params;
  state.seed_id = opt.seed_id;
  state.insert(detail::make_record(seed, kNoParent, {}, 0));
  state.frontier.push_back(0);

  const detail::Deadline deadline(opt.limits.max_seconds);
  std::atomic<bool> out_of_time{false};
  std::atomic<std::uint64_t> sets_tried{0}, rejected{0};

  while (!state.frontier.empty()) {
    std::vector<std::size_t> batch(state.frontier.begin(), state.frontier.end());
    if (opt.limits.max_graphs > 0) {
      const std::size_t room = opt.limits.max_graphs - std::min<std::size_t>(opt.limits.max_graphs, state.stats.graphs_visited);
      if (room == 0) {
        state.truncated = true;
        break;
      }
      if (batch.size() > room) batch.resize(room);
    }
    if (deadline.passed()) {
      state.truncated = true;
      break;
    }
    state.frontier.erase(state.frontier.begin(), state.frontier.begin() + static_cast<std::ptrdiff_t>(batch.size()));

    std::vector<std::vector<detail::Candidate>> results(batch.size());
    detail::parallel_for(batch.size(), opt.threads, [&](std::size_t i) {
      const Graph g = graph6::decode(state.classes[batch[i]].graph6);
      auto produce = [&](const SetSink& sink) {
        if (!opt.orbit_reduction) {
          find_sets(g, spec, opt.strategy, sink);
          return;
        }
        auto sets = collect_sets(g, spec, opt.strategy);
        const auto orbits = orbit_reps(automorphisms(g).generators, sets);
        for (std::size_t r : orbits.representatives)
          if (!sink(sets[r].mask(g.order()))) return;
      };
      results[i] = detail::expand(g, spec.params, produce, state, deadline, out_of_time, sets_tried, rejected);
    });

    state.stats.graphs_visited += batch.size();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const std::size_t parent = batch[i];
      const std::size_t depth = state.classes[parent].depth + 1;
      for (auto& c : results[i]) {
        auto [id, fresh] = state.insert({std::move(c.key), c.digest, std::move(c.graph6), parent, std::move(c.via), depth});
        if (fresh) state.frontier.push_back(id);
      }
    }
    if (out_of_time) {
      state.truncated = true;
      break;
    }
  }
  state.stats.sets_tried = sets_tried;
  state.stats.rejected = rejected;
  state.stats.classes_found = state.classes.size();
  return state;
}

/// One round of other-parameter switching: all v/2-subsets inducing a
/// (k - mu)-regular subgraph, collected up to isomorphism. The state holds
/// graphs with parameters (v, k+c, lambda+c, mu+c), c = v/2 - 2mu.
inline ClosureState closure_thm2(const Graph& seed, const ClosureOptions& opt) {
  const auto spec = require_switchable(spectrum_of(seed));
  const auto& p = spec.params;
  if (p.v / 2 - 2 * p.mu == 0)
    throw PreconditionError("other-parameter switching degenerates: c = v/2 - 2mu = 0 for " + p.str());
  ClosureState state;
  state.params = thm2_target(p);
  state.seed_id = opt.seed_id;
  const detail::Deadline deadline(opt.limits.max_seconds);
  std::atomic<bool> out_of_time{false};
  std::atomic<std::uint64_t> sets_tried{0}, rejected{0};
  const Graph g = canonical_graph(seed, canonical_form(seed));
  auto produce = [&](const SetSink& sink) { find_thm2_sets(g, spec, opt.strategy.budget, sink); };
  auto found = detail::expand(g, state.params, produce, state, deadline, out_of_time, sets_tried, rejected);
  state.stats.graphs_visited = 1;
  for (auto& c : found) state.insert({std::move(c.key), c.digest, std::move(c.graph6), kNoParent, std::move(c.via), 1});
  state.truncated = out_of_time;
  state.stats.sets_tried = sets_tried;
  state.stats.rejected = rejected;
  state.stats.classes_found = state.classes.size();
  return state;
}

// ---------------------------------------------------------------------------
// Persistence: classes go to an append-only graph6 file, one line per class;
// a sidecar index carries one tab-separated line per class:
//   class  digest  key_bits  seed_id  parent  depth  via
// parent is "-" for the seed, via is a comma list ("" for the empty set).

inline constexpr const char* kIndexHeader = "# srgswitch-index v1\tclass\tdigest\tkey_bits\tseed_id\tparent\tdepth\tvia";

struct IndexRecord {
  std::size_t cls = 0;
  std::string digest;
  std::size_t key_bits = 0;
  std::string seed_id;
  std::size_t parent = kNoParent;
  std::size_t depth = 0;
  SwitchingSet via;
  friend bool operator==(const IndexRecord&, const IndexRecord&) = default;
};

inline IndexRecord index_record(const ClosureState& s, std::size_t i) {
  const auto& c = s.classes[i];
  return {i, c.digest.hex(), c.key.bit_length(), s.seed_id, c.parent, c.depth, c.via};
}

inline std::string format_index_line(const IndexRecord& r) {
  std::ostringstream os;
  os << r.cls << '\t' << r.digest << '\t' << r.key_bits << '\t' << r.seed_id << '\t';
  if (r.parent == kNoParent) os << '-';
  else os << r.parent;
  os << '\t' << r.depth << '\t' << r.via.str();
  return os.str();
}

inline IndexRecord parse_index_line(const std::string& line) {
  std::vector<std::string> f;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    f.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  if (f.size() != 7) throw ParseError("index line needs 7 tab-separated fields");
  try {
    IndexRecord r;
    r.cls = std::stoull(f[0]);
    r.digest = f[1];
    r.key_bits = std::stoull(f[2]);
    r.seed_id = f[3];
    r.parent = f[4] == "-" ? kNoParent : std::stoull(f[4]);
    r.depth = std::stoull(f[5]);
    r.via = SwitchingSet::parse(f[6]);
    return r;
  } catch (const std::logic_error&) {
    throw ParseError("index line has a malformed numeric field");
  }
}

/// Appends classes [from, classes.size()) to the graph6 and index streams.
/// Writes the index header when `from` is 0.
inline void append_classes(const ClosureState& s, std::size_t from, std::ostream& g6, std::ostream& index) {
  if (from == 0) index << kIndexHeader << '\n';
  for (std::size_t i = from; i < s.classes.size(); ++i) {
    g6 << s.classes[i].graph6 << '\n';
    index << format_index_line(index_record(s, i)) << '\n';
  }
}

inline std::vector<IndexRecord> read_index(std::istream& in) {
  std::vector<IndexRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_index_line(line));
  }
  return out;
}

}  // namespace srgsw
