#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "srgswitch/srgswitch.hpp"

namespace srgsw::cli {

inline constexpr const char* kRecordSchema = "srgswitch.record/1";

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kResourceError = 3 };

namespace detail {

using nlohmann::json;

struct Context {
  RunConfig config;
  std::istream& in;
  std::ostream& out;
  bool records() const { return config.format == "records"; }
};

inline json params_json(const SrgParams& p) { return json::array({p.v, p.k, p.lambda, p.mu}); }

inline json record(const std::string& kind) { return json{{"schema", kRecordSchema}, {"kind", kind}}; }

// "named:FAMILY:ORDER" builds a graph; "-" is standard input; anything else is a graph6 file.
inline std::vector<Graph> load(const std::string& source, std::istream& in) {
  if (source == "-") return graph6::read_all(in);
  if (source.starts_with("named:")) {
    const auto rest = source.substr(6);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw ParseError("named seed must look like named:FAMILY:ORDER");
    std::size_t order = 0;
    try {
      order = std::stoull(rest.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw ParseError("named seed order is not a number: " + source);
    }
    return {construct_named(rest.substr(0, colon), order)};
  }
  std::ifstream f(source);
  if (!f) throw ParseError("cannot open input file '" + source + "'");
  return graph6::read_all(f);
}

inline std::vector<Graph> load_all(const std::vector<std::string>& sources, const Context& ctx) {
  std::vector<std::string> from = sources;
  if (from.empty()) from = ctx.config.seeds;
  if (from.empty()) from = {"-"};
  std::vector<Graph> out;
  for (const auto& s : from) {
    auto gs = load(s, ctx.in);
    out.insert(out.end(), std::make_move_iterator(gs.begin()), std::make_move_iterator(gs.end()));
  }
  if (out.empty()) throw ParseError("no input graphs");
  return out;
}

inline std::string seed_name(const std::vector<std::string>& sources, std::size_t i) {
  const std::string base = sources.empty() ? std::string("stdin") : sources.front();
  return base + "#" + std::to_string(i);
}

// Writes graph6 lines to --out when given, else to stdout.
inline void emit_graphs(const Context& ctx, const std::vector<Graph>& gs) {
  std::ofstream file;
  std::ostream* os = &ctx.out;
  if (!ctx.config.outputs.empty()) {
    file.open(ctx.config.outputs.front());
    if (!file) throw ParseError("cannot open output file '" + ctx.config.outputs.front() + "'");
    os = &file;
  }
  for (const auto& g : gs) *os << graph6::encode(g) << '\n';
}

inline SetStrategy strategy_for(const RunConfig& c, const SrgSpectrum& s) {
  SetStrategy st;
  st.mode = parse_set_mode(c.strategy);
  st.budget = c.subset_budget;
  st.max_parts = c.max_parts;
  st.max_h = c.max_h != 0 ? c.max_h : static_cast<std::size_t>(2 * s.theta1 + 6);
  return st;
}

inline std::string classification_text(const SrgClassification& c) {
  std::string s = to_string(c.kind);
  if (c.params) s += " " + c.params->str();
  return s;
}

inline json class_json(const ClosureState& st, std::size_t i) {
  const auto& c = st.classes[i];
  json j = record("class");
  j["index"] = i;
  j["params"] = params_json(st.params);
  j["digest"] = c.digest.hex();
  j["graph6"] = c.graph6;
  j["source"] = {{"seed", st.seed_id},
                 {"parent", c.parent == kNoParent ? json(nullptr) : json(c.parent)},
                 {"depth", c.depth},
                 {"via", std::vector<Vertex>(c.via.vertices().begin(), c.via.vertices().end())}};
  return j;
}

inline void report_closure(const Context& ctx, const ClosureState& st) {
  const auto order = st.sorted_by_key();
  if (ctx.records()) {
    for (auto i : order) ctx.out << class_json(st, i).dump() << '\n';
    json s = record("closure-summary");
    s["seed"] = st.seed_id;
    s["params"] = params_json(st.params);
    s["classes"] = st.classes.size();
    s["graphs_visited"] = st.stats.graphs_visited;
    s["sets_tried"] = st.stats.sets_tried;
    s["rejected"] = st.stats.rejected;
    s["truncated"] = st.truncated;
    ctx.out << s.dump() << '\n';
  } else {
    ctx.out << "seed " << st.seed_id << "  class params " << st.params << '\n';
    ctx.out << "class  digest                            depth  parent  via\n";
    for (auto i : order) {
      const auto& c = st.classes[i];
      ctx.out << i << "  " << c.digest.hex() << "  " << c.depth << "  "
              << (c.parent == kNoParent ? std::string("-") : std::to_string(c.parent)) << "  {" << c.via.str() << "}\n";
    }
    ctx.out << "classes " << st.classes.size() << "  graphs visited " << st.stats.graphs_visited << "  sets tried "
            << st.stats.sets_tried << "  rejected " << st.stats.rejected << (st.truncated ? "  TRUNCATED" : "  complete")
            << '\n';
  }
  if (!ctx.config.outputs.empty()) {
    const std::string path = ctx.config.outputs.front();
    const bool fresh = !std::filesystem::exists(path + ".idx") || std::filesystem::file_size(path + ".idx") == 0;
    std::ofstream g6(path, std::ios::app), idx(path + ".idx", std::ios::app);
    if (!g6 || !idx) throw ParseError("cannot open output file '" + path + "'");
    if (fresh) {
      append_classes(st, 0, g6, idx);
    } else {
      for (std::size_t i = 0; i < st.classes.size(); ++i) {
        g6 << st.classes[i].graph6 << '\n';
        idx << format_index_line(index_record(st, i)) << '\n';
      }
    }
  }
}

// ---- subcommands ----------------------------------------------------------

inline int cmd_construct(const Context& ctx, const std::string& family, std::size_t order) {
  emit_graphs(ctx, {construct_named(family, order)});
  return kOk;
}

inline int cmd_verify(const Context& ctx, const std::vector<std::string>& inputs) {
  int code = kOk;
  for (const auto& g : load_all(inputs, ctx)) {
    const auto c = verify_srg(g);
    if (ctx.records()) {
      json j = record("verify");
      j["graph6"] = graph6::encode(g);
      j["order"] = g.order();
      j["classification"] = to_string(c.kind);
      j["params"] = c.params ? params_json(*c.params) : json(nullptr);
      ctx.out << j.dump() << '\n';
    } else {
      ctx.out << "n=" << g.order() << "  " << classification_text(c) << '\n';
    }
  }
  return code;
}

inline void print_spectrum(const Context& ctx, const SrgSpectrum& s) {
  if (ctx.records()) {
    json j = record("spectrum");
    j["params"] = params_json(s.params);
    j["theta1"] = s.theta1;
    j["theta2"] = s.theta2;
    j["m1"] = s.m1;
    j["m2"] = s.m2;
    j["switchable"] = s.switchable;
    j["rho"] = s.rho ? json(*s.rho) : json(nullptr);
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << s.params << "  theta1=" << s.theta1 << " theta2=" << s.theta2 << " m1=" << s.m1 << " m2=" << s.m2
            << "  switchable=" << (s.switchable ? "yes" : "no");
    if (s.rho) ctx.out << " rho=" << *s.rho;
    ctx.out << '\n';
  }
}

inline int cmd_spectrum(const Context& ctx, const std::vector<std::int64_t>& params, const std::vector<std::string>& inputs) {
  if (!params.empty()) {
    if (params.size() != 4) throw CLI::ValidationError("--params", "needs exactly v,k,lambda,mu");
    print_spectrum(ctx, derive_spectrum({params[0], params[1], params[2], params[3]}));
    return kOk;
  }
  for (const auto& g : load_all(inputs, ctx)) print_spectrum(ctx, spectrum_of(g));
  return kOk;
}

inline int cmd_switch(const Context& ctx, const std::string& set, const std::vector<std::string>& inputs) {
  const auto h = SwitchingSet::parse(set);
  std::vector<Graph> out;
  for (const auto& g : load_all(inputs, ctx)) out.push_back(switch_graph(g, h));
  emit_graphs(ctx, out);
  return kOk;
}

inline int cmd_find_sets(const Context& ctx, const std::vector<std::string>& inputs) {
  for (const auto& g : load_all(inputs, ctx)) {
    const auto s = require_switchable(spectrum_of(g));
    const auto sets = collect_sets(g, s, strategy_for(ctx.config, s));
    for (const auto& h : sets) {
      if (ctx.records()) {
        json j = record("switching-set");
        j["graph6"] = graph6::encode(g);
        j["size"] = h.size();
        j["set"] = std::vector<Vertex>(h.vertices().begin(), h.vertices().end());
        ctx.out << j.dump() << '\n';
      } else {
        ctx.out << h.size() << "  {" << h.str() << "}\n";
      }
    }
    if (!ctx.records()) ctx.out << "sets " << sets.size() << '\n';
  }
  return kOk;
}

inline ClosureOptions closure_options(const RunConfig& c, const SrgSpectrum& s, std::string seed_id) {
  ClosureOptions o;
  o.strategy = strategy_for(c, s);
  o.limits = {c.max_graphs, c.max_seconds};
  o.threads = c.threads;
  o.orbit_reduction = c.orbit_reduction;
  o.seed_id = std::move(seed_id);
  return o;
}

inline int cmd_closure(const Context& ctx, const std::vector<std::string>& inputs, bool other_params,
                       const std::vector<std::string>& explicit_sets) {
  const auto graphs = load_all(inputs, ctx);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto s = require_switchable(spectrum_of(graphs[i]));
    auto opt = closure_options(ctx.config, s, seed_name(inputs.empty() ? ctx.config.seeds : inputs, i));
    for (const auto& e : explicit_sets) opt.strategy.sets.push_back(SwitchingSet::parse(e));
    const auto st = other_params ? closure_thm2(graphs[i], opt) : closure(graphs[i], opt);
    report_closure(ctx, st);
  }
  return kOk;
}

inline int cmd_canon(const Context& ctx, const std::vector<std::string>& inputs) {
  for (const auto& g : load_all(inputs, ctx)) {
    const auto [f, grp] = canonical_form_with_group(g);
    const auto cg = graph6::encode(canonical_graph(g, f));
    if (ctx.records()) {
      json j = record("canon");
      j["graph6"] = graph6::encode(g);
      j["canonical"] = cg;
      j["digest"] = f.digest.hex();
      j["aut_order"] = grp.order.str();
      j["ordering"] = f.ordering;
      ctx.out << j.dump() << '\n';
    } else {
      ctx.out << cg << "  " << f.digest.hex() << "  |Aut|=" << grp.order << '\n';
    }
  }
  return kOk;
}

inline int cmd_iso(const Context& ctx, const std::vector<std::string>& inputs) {
  const auto gs = load_all(inputs, ctx);
  if (gs.size() != 2) throw CLI::ValidationError("iso", "needs exactly two graphs");
  const auto m = are_isomorphic(gs[0], gs[1]);
  if (ctx.records()) {
    json j = record("iso");
    j["isomorphic"] = m.has_value();
    j["mapping"] = m ? json(*m) : json(nullptr);
    ctx.out << j.dump() << '\n';
  } else if (m) {
    ctx.out << "isomorphic:";
    for (std::size_t x = 0; x < m->size(); ++x) ctx.out << ' ' << x << "->" << (*m)[x];
    ctx.out << '\n';
  } else {
    ctx.out << "not isomorphic\n";
  }
  return kOk;
}

inline int cmd_embed_check(const Context& ctx, const std::vector<std::string>& inputs) {
  int code = kOk;
  for (const auto& g : load_all(inputs, ctx)) {
    const auto s = require_switchable(spectrum_of(g));
    const auto G = gram_from_graph(g, s);
    const auto values = G.inner_values();
    const bool design2 = check_design_moments(G, 2);
    const bool invariant = is_distance_invariant(G);
    const auto bound = relative_bound(static_cast<std::int64_t>(G.rank()), *s.rho);
    const bool tight = bound == Rational(s.params.v);
    if (!(design2 && invariant && tight && values.size() == 2)) code = kDomainError;
    if (ctx.records()) {
      json j = record("embedding");
      j["params"] = params_json(s.params);
      j["rank"] = G.rank();
      std::vector<std::string> vs;
      for (const auto& v : values) vs.push_back(v.str());
      j["inner_values"] = vs;
      j["design2"] = design2;
      j["distance_invariant"] = invariant;
      j["relative_bound"] = bound.str();
      ctx.out << j.dump() << '\n';
    } else {
      ctx.out << s.params << "  rank=" << G.rank() << "  A(X)={";
      for (std::size_t i = 0; i < values.size(); ++i) ctx.out << (i ? "," : "") << values[i];
      ctx.out << "}  2-design=" << (design2 ? "yes" : "no") << "  distance-invariant=" << (invariant ? "yes" : "no")
              << "  relative-bound=" << bound << (tight ? " (tight)" : "") << '\n';
    }
  }
  return code;
}

inline int cmd_two_graph(const Context& ctx, const std::vector<std::string>& inputs) {
  for (const auto& g : load_all(inputs, ctx)) {
    const auto regular = two_graph_regularity(g);
    const auto eig = seidel_spectrum_check(g);
    std::optional<std::size_t> triples;
    if (g.order() <= kTwoGraphTripleCap) triples = two_graph(g).triples.size();
    if (ctx.records()) {
      json j = record("two-graph");
      j["order"] = g.order();
      j["triples"] = triples ? json(*triples) : json(nullptr);
      j["regular"] = regular ? json(*regular) : json(nullptr);
      j["seidel_eigenvalues"] = eig ? json::array({eig->first, eig->second}) : json(nullptr);
      ctx.out << j.dump() << '\n';
    } else {
      ctx.out << "n=" << g.order() << "  triples=" << (triples ? std::to_string(*triples) : std::string("n/a"))
              << "  regular=" << (regular ? "a=" + std::to_string(*regular) : std::string("no"));
      if (eig) ctx.out << "  rho=(" << eig->first << "," << eig->second << ")";
      ctx.out << '\n';
    }
  }
  return kOk;
}

inline int cmd_catalog_check(const Context& ctx) {
  int code = kOk;
  if (!ctx.records()) ctx.out << "params             theta1  theta2  k-v/2  k-2mu  v=2(k-theta1)  clique\n";
  for (const auto& p : kSwitchableCatalog) {
    const auto s = derive_spectrum(p);
    const bool ok = s.switchable && s.theta1 == p.k - p.v / 2 && s.theta2 == p.k - 2 * p.mu && p.v % 2 == 0;
    if (!ok) code = kDomainError;
    if (ctx.records()) {
      json j = record("catalog");
      j["params"] = params_json(p);
      j["theta1"] = s.theta1;
      j["theta2"] = s.theta2;
      j["switchable"] = s.switchable;
      j["ok"] = ok;
      j["clique_size"] = s.switchable ? json(clique_switch_size(s)) : json(nullptr);
      ctx.out << j.dump() << '\n';
    } else {
      std::ostringstream row;
      row << p;
      std::string cell = row.str();
      cell.resize(std::max<std::size_t>(cell.size(), 19), ' ');
      ctx.out << cell << s.theta1 << "       " << s.theta2 << "      " << p.k - p.v / 2 << "      " << p.k - 2 * p.mu
              << "     " << (ok ? "yes" : "NO") << "            " << (s.switchable ? clique_switch_size(s) : 0) << '\n';
    }
  }
  if (!ctx.records()) ctx.out << kSwitchableCatalog.size() << " parameter sets, " << (code == kOk ? "all" : "NOT all") << " switchable\n";
  return code;
}

}  // namespace detail

/// Runs the command line `args` (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seidel switching of strongly regular graphs", "srgswitch"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  std::optional<std::size_t> cap_flag;
  std::vector<std::string> out_paths;
  app.add_option("--config", config_path, "RunConfig file (key = value lines)");
  auto* threads = app.add_option("--threads", cfg.threads, "worker threads for closures");
  auto* max_h = app.add_option("--max-h", cfg.max_h, "largest subset size for brute strategy");
  auto* budget = app.add_option("--budget", cfg.subset_budget, "maximum candidate subsets");
  auto* format = app.add_option("--format", cfg.format, "table or records")->check(CLI::IsMember({"table", "records"}));
  app.add_option("--out", out_paths, "output path");
  auto* strategy = app.add_option("--strategy", cfg.strategy, "brute, cliques, clique-unions or explicit")
                       ->check(CLI::IsMember({"brute", "cliques", "clique-unions", "explicit"}));
  auto* parts = app.add_option("--max-parts", cfg.max_parts, "cliques per union for clique-unions");
  auto* max_graphs = app.add_option("--max-graphs", cfg.max_graphs, "closure: graphs to expand (0 = unlimited)");
  auto* max_seconds = app.add_option("--max-seconds", cfg.max_seconds, "closure: wall-clock limit (0 = unlimited)");
  auto* orbits = app.add_flag("--orbits", cfg.orbit_reduction, "reduce switching sets by automorphism orbits");
  app.add_option("--vertex-cap", cap_flag, "largest accepted graph order");

  std::vector<std::string> inputs;
  std::string family, set_text;
  std::size_t order = 0;
  std::vector<std::int64_t> params;
  std::vector<std::string> explicit_sets;

  auto* construct = app.add_subcommand("construct", "build a named graph and print graph6");
  construct->add_option("family", family, "triangular, lattice, paley, clebsch, shrikhande, petersen, chang, cycle, complete, complement-<family>")->required();
  construct->add_option("order", order, "family order")->required();
  auto* verify = app.add_subcommand("verify", "classify graphs by common-neighbour counting");
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and multiplicities from parameters or graphs");
  spectrum->add_option("--params", params, "v,k,lambda,mu")->delimiter(',');
  auto* sw = app.add_subcommand("switch", "Seidel switching with respect to a vertex set");
  sw->add_option("--set", set_text, "comma separated vertices")->required();
  auto* find = app.add_subcommand("find-sets", "switching sets preserving the parameters");
  auto* clos = app.add_subcommand("closure", "iterated switching closure up to isomorphism");
  clos->add_option("--explicit-set", explicit_sets, "switching set for the explicit strategy (repeatable)");
  auto* clos2 = app.add_subcommand("closure-thm2", "switch to the second parameter set of the switching class");
  auto* canon = app.add_subcommand("canon", "canonical form, digest and automorphism group order");
  auto* iso = app.add_subcommand("iso", "isomorphism test between two graphs");
  auto* embed = app.add_subcommand("embed-check", "certify the spherical embedding (2-design, 2-distance, bound)");
  auto* two = app.add_subcommand("two-graph", "two-graph regularity and Seidel eigenvalues");
  auto* catalog = app.add_subcommand("catalog-check", "check the known switchable parameter list");
  for (auto* sub : {verify, spectrum, sw, find, clos, clos2, canon, iso, embed, two})
    sub->add_option("input", inputs, "graph6 files, named:FAMILY:ORDER, or - for stdin");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw ParseError("cannot open config file '" + config_path + "'");
      RunConfig file = RunConfig::parse(f);
      // command-line flags win over the file
      if (!threads->count()) cfg.threads = file.threads;
      if (!max_h->count()) cfg.max_h = file.max_h;
      if (!budget->count()) cfg.subset_budget = file.subset_budget;
      if (!format->count()) cfg.format = file.format;
      if (!strategy->count()) cfg.strategy = file.strategy;
      if (!parts->count()) cfg.max_parts = file.max_parts;
      if (!max_graphs->count()) cfg.max_graphs = file.max_graphs;
      if (!max_seconds->count()) cfg.max_seconds = file.max_seconds;
      if (!orbits->count()) cfg.orbit_reduction = file.orbit_reduction;
      cfg.vertex_cap = file.vertex_cap;
      cfg.seeds = file.seeds;
      cfg.outputs = file.outputs;
    }
    if (auto env = RunConfig::env_vertex_cap()) cfg.vertex_cap = *env;
    if (cap_flag) cfg.vertex_cap = *cap_flag;
    if (!out_paths.empty()) cfg.outputs = out_paths;
    cfg.validate();
    set_vertex_cap(cfg.vertex_cap);

    detail::Context ctx{cfg, in, out};
    if (*construct) return detail::cmd_construct(ctx, family, order);
    if (*verify) return detail::cmd_verify(ctx, inputs);
    if (*spectrum) return detail::cmd_spectrum(ctx, params, inputs);
    if (*sw) return detail::cmd_switch(ctx, set_text, inputs);
    if (*find) return detail::cmd_find_sets(ctx, inputs);
    if (*clos) return detail::cmd_closure(ctx, inputs, false, explicit_sets);
    if (*clos2) return detail::cmd_closure(ctx, inputs, true, {});
    if (*canon) return detail::cmd_canon(ctx, inputs);
    if (*iso) return detail::cmd_iso(ctx, inputs);
    if (*embed) return detail::cmd_embed_check(ctx, inputs);
    if (*two) return detail::cmd_two_graph(ctx, inputs);
    if (*catalog) return detail::cmd_catalog_check(ctx);
    return kUsageError;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResourceError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace srgsw::cli
