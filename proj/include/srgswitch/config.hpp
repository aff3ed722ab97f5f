#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "srgswitch/error.hpp"
#include "srgswitch/graph.hpp"
#include "srgswitch/search.hpp"

namespace srgsw {

inline constexpr const char* kVertexCapEnv = "SRGSWITCH_VERTEX_CAP";

/// Settings shared by CLI runs. Stored as "key = value" lines; '#' starts a comment;
/// `seed` and `output` may repeat.
struct RunConfig {
  unsigned threads = 1;
  std::size_t max_h = 0;  // 0: brute default 2*theta1 + 6
  std::uint64_t subset_budget = kDefaultSubsetBudget;
  std::size_t vertex_cap = kDefaultVertexCap;
  std::string strategy = "brute";
  std::size_t max_parts = 2;
  std::size_t max_graphs = 0;
  double max_seconds = 0;
  bool orbit_reduction = false;
  std::string format = "table";
  std::vector<std::string> seeds;
  std::vector<std::string> outputs;

  void validate() const {
    if (threads == 0) throw ParameterError("threads must be positive");
    if (subset_budget == 0) throw ParameterError("budget must be positive");
    if (vertex_cap == 0) throw ParameterError("vertex cap must be positive");
    if (max_parts == 0) throw ParameterError("max-parts must be positive");
    if (max_seconds < 0) throw ParameterError("max-seconds must be non-negative");
    if (format != "table" && format != "records") throw ParameterError("format must be table or records");
    parse_set_mode(strategy);
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "threads = " << threads << '\n'
       << "max_h = " << max_h << '\n'
       << "budget = " << subset_budget << '\n'
       << "vertex_cap = " << vertex_cap << '\n'
       << "strategy = " << strategy << '\n'
       << "max_parts = " << max_parts << '\n'
       << "max_graphs = " << max_graphs << '\n'
       << "max_seconds = " << shortest(max_seconds) << '\n'
       << "orbits = " << (orbit_reduction ? "true" : "false") << '\n'
       << "format = " << format << '\n';
    for (const auto& s : seeds) os << "seed = " << s << '\n';
    for (const auto& o : outputs) os << "output = " << o << '\n';
    return os.str();
  }

  static RunConfig parse(std::istream& in) {
    RunConfig c;
    std::string line;
    std::size_t lineno = 0;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string{};
      return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
      const std::string key = trim(line.substr(0, eq));
      const std::string val = trim(line.substr(eq + 1));
      try {
        if (key == "threads") c.threads = static_cast<unsigned>(std::stoul(val));
        else if (key == "max_h") c.max_h = std::stoull(val);
        else if (key == "budget") c.subset_budget = std::stoull(val);
        else if (key == "vertex_cap") c.vertex_cap = std::stoull(val);
        else if (key == "strategy") c.strategy = val;
        else if (key == "max_parts") c.max_parts = std::stoull(val);
        else if (key == "max_graphs") c.max_graphs = std::stoull(val);
        else if (key == "max_seconds") c.max_seconds = std::stod(val);
        else if (key == "orbits") {
          if (val != "true" && val != "false") throw ParseError("orbits must be true or false");
          c.orbit_reduction = val == "true";
        } else if (key == "format") c.format = val;
        else if (key == "seed") c.seeds.push_back(val);
        else if (key == "output") c.outputs.push_back(val);
        else throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      } catch (const std::logic_error&) {
        throw ParseError("config line " + std::to_string(lineno) + ": bad value for '" + key + "'");
      }
    }
    c.validate();
    return c;
  }

  /// Vertex cap from the environment, when set.
  static std::optional<std::size_t> env_vertex_cap() {
    const char* v = std::getenv(kVertexCapEnv);
    if (!v || !*v) return std::nullopt;
    try {
      const auto cap = std::stoull(v);
      if (cap == 0) throw ParameterError(std::string(kVertexCapEnv) + " must be positive");
      return cap;
    } catch (const std::logic_error&) {
      throw ParameterError(std::string(kVertexCapEnv) + " is not a number");
    }
  }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;

 private:
  static std::string shortest(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
  }
};

}  // namespace srgsw
