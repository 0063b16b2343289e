#include "apg/cli.hpp"

#include "apg/io.hpp"
#include "apg/lattice.hpp"
#include "apg/multiplicities.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace apg::cli {

namespace {

struct Options {
  std::string file;
  bool json = false;
  bool paper_ceil = false;
  std::uint64_t max_w = 5'000'000;
  std::size_t max_fibers = 12;
  std::optional<long long> delta;
  bool p2 = false;
  bool exhaustive = false;
  std::uint64_t max_placements = 100'000;
  std::size_t max_origins = 10;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string term(const Integer& coef, const std::string& symbol, bool first) {
  std::string s;
  Integer mag = abs(coef);
  if (coef < 0) {
    s = first ? "-" : " - ";
  } else if (!first) {
    s = " + ";
  }
  if (mag != 1) s += to_string(mag);
  return s + symbol;
}

std::string class_string(const Configuration& config, const PicardClass& d) {
  std::string s;
  if (d.a != 0) s += term(d.a, "F*", s.empty());
  if (d.b != 0) s += term(d.b, "M*", s.empty());
  for (std::size_t p = 0; p < config.size(); ++p) {
    if (d.c[p] != 0) s += term(-d.c[p], "E*[" + config.id(p) + "]", s.empty());
  }
  return s.empty() ? "0" : s;
}

EnumerationLimits limits_of(const Options& o) {
  return {o.max_fibers, o.max_w, true};
}

Json header(const std::string& command, const Configuration& config) {
  Json j;
  j["command"] = command;
  j["name"] = config.graph().name;
  j["points"] = config.size();
  j["constellations"] = config.constellation_count();
  j["fibers"] = config.fiber_count();
  j["chains"] = Json::array();
  for (std::size_t c = 0; c < config.chains().size(); ++c) {
    Json item;
    item["index"] = c + 1;
    item["fiber"] = config.fibers()[config.chain(c).fiber];
    item["points"] = Json::array();
    for (auto p : config.chain(c).points) item["points"].push_back(config.id(p));
    j["chains"].push_back(std::move(item));
  }
  return j;
}

int cmd_validate(const Options& o, std::ostream& out) {
  auto graph = parse_apg_document(read_file(o.file));
  auto report = validate(graph);
  if (o.json) {
    Json j;
    j["command"] = "validate";
    j["name"] = graph.name;
    j.update(validation_json(report));
    out << j.dump(2) << "\n";
  } else if (report.ok()) {
    Configuration config(graph);
    out << "ok: " << graph.name << " (" << config.size() << " points, " << config.constellation_count()
        << " constellations, " << config.chains().size() << " chains)\n";
  } else {
    for (const auto& v : report.violations) {
      out << "violation " << v.code << " [";
      for (std::size_t i = 0; i < v.points.size(); ++i) out << (i ? " " : "") << v.points[i];
      out << "]: " << v.message << "\n";
    }
  }
  return report.ok() ? kOk : kFailure;
}

int cmd_generators(const Options& o, const Configuration& config, std::ostream& out) {
  auto set = generator_set(config, limits_of(o));
  if (o.json) {
    auto j = header("generators", config);
    j.update(generators_json(config, set));
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << set.count() << " generators (" << set.w_candidates << " W candidates)\n";
  for (const auto& g : set.entries) {
    out << "  " << g.name() << ": " << class_string(config, g.divisor) << "; D^2 = "
        << self_intersection(g.divisor).to_string() << ", D.(-K) = " << anticanonical_product(g.divisor).to_string()
        << "\n";
  }
  return kOk;
}

int cmd_thresholds(const Options& o, const Configuration& config, std::ostream& out) {
  auto t = compute_thresholds(config, limits_of(o));
  if (o.json) {
    auto j = header("thresholds", config);
    j.update(thresholds_json(t, o.paper_ceil));
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "a=" << t.a << " b'=" << (o.paper_ceil ? t.b_prime_paper : t.b_prime)
      << " b=" << (o.paper_ceil ? t.b_paper : t.b) << "\n";
  return kOk;
}

int cmd_report(const Options& o, const Configuration& config, std::ostream& out) {
  if (!o.delta && !o.p2) throw UsageError("report needs --delta");
  Integer delta = o.delta ? Integer(static_cast<long>(*o.delta)) : Integer(1);
  Verdict v;
  try {
    v = report(config, delta, o.p2, limits_of(o));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.json) {
    auto j = header("report", config);
    j["verdict"] = verdict_json(v, o.paper_ceil);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << describe(v, o.paper_ceil);
  return kOk;
}

int cmd_verify(const Options& o, const Configuration& config, std::ostream& out) {
  auto check = verify_dual_cone(config, limits_of(o));
  std::optional<std::vector<bool>> flags;
  std::vector<SymbolicClass> transforms;
  if (o.delta) {
    try {
      flags = strict_transform_extremality(config, Integer(static_cast<long>(*o.delta)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  bool extremal = !flags || std::all_of(flags->begin(), flags->end(), [](bool b) { return b; });
  if (o.json) {
    auto j = header("verify", config);
    j["dual_cone"] = dual_cone_json(check);
    if (flags) {
      j["extremality"] = {{"delta", *o.delta}, {"flags", *flags}, {"all_extremal", extremal}};
    }
    out << j.dump(2) << "\n";
  } else {
    if (check.ok) {
      out << "dual cone certified (" << check.generators << " generators, all extreme rays matched)\n";
    } else {
      out << "dual cone check FAILED: " << check.witness << "\n";
    }
    if (flags) {
      out << "strict transforms at delta=" << *o.delta << ": ";
      if (extremal) {
        out << "all " << flags->size() << " extremal\n";
      } else {
        out << std::count(flags->begin(), flags->end(), false) << " of " << flags->size() << " not extremal\n";
      }
    }
  }
  return check.ok && extremal ? kOk : kFailure;
}

int cmd_invariants(const Options& o, const Configuration& config, std::ostream& out) {
  bool ok = true;
  Json chains = Json::array();
  std::ostringstream text;
  for (std::size_t j = 0; j < config.chains().size(); ++j) {
    try {
      auto v = maximal_contact_values(config, j);
      auto s = verify_sum_identity(config, j);
      ok = ok && s.holds();
      chains.push_back(invariants_json(config, j, v, s));
      auto list = [&](const std::vector<Integer>& xs) {
        std::string r = "(";
        for (std::size_t i = 0; i < xs.size(); ++i) r += (i ? "," : "") + to_string(xs[i]);
        return r + ")";
      };
      auto m = germ_multiplicities(config, j, config.chain(j).length());
      text << "chain " << j + 1 << ": mult=" << list(m.values) << " beta_bar=" << list(v.beta_bar)
           << " e=" << list(v.e) << " N=" << list(v.N) << " g=" << v.g << " free_tail=" << v.free_tail
           << " sum " << s.lhs << (s.holds() ? " = " : " != ") << s.rhs << "\n";
    } catch (const NonCharacteristicBlocks& e) {
      ok = false;
      chains.push_back({{"chain", j + 1}, {"error", e.what()}});
      text << "chain " << j + 1 << ": " << e.what() << "\n";
    }
  }
  Json mono = Json::array();
  for (long d = 0; d <= 10; ++d) {
    bool holds = anticanonical_monotonicity_check(config, d);
    ok = ok && holds;
    mono.push_back(holds);
    if (!holds) text << "anticanonical monotonicity fails at delta=" << d << "\n";
  }
  if (o.json) {
    auto j = header("invariants", config);
    j["invariants"] = std::move(chains);
    j["monotonicity_delta_0_to_10"] = std::move(mono);
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
    if (ok) out << "anticanonical monotonicity holds for delta=0..10\n";
  }
  return ok ? kOk : kFailure;
}

int cmd_pg_bound(const Options& o, std::ostream& out) {
  auto graph = parse_apg_document(read_file(o.file));
  PgLimits limits;
  limits.exhaustive = o.exhaustive;
  limits.max_placements = o.max_placements;
  limits.max_origins = o.max_origins;
  limits.generators.max_fibers = o.max_fibers;
  limits.generators.max_w = o.max_w;
  auto bound = a_of_pg(graph, limits);
  if (o.json) {
    Json j;
    j["command"] = "pg-bound";
    j["name"] = graph.name;
    j["a_pg"] = exact(bound.a);
    j["placements"] = bound.placements;
    j["exhaustive"] = o.exhaustive;
    j["best"] = apg_to_json(bound.best);
    out << j.dump(2) << "\n";
  } else {
    out << "a(PG)=" << bound.a << " over " << bound.placements << " placements"
        << (o.exhaustive ? " (all fiber partitions)" : " (distinct fibers)") << "\n";
    out << "attained by:\n" << serialize_apg(bound.best);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cone of curves and Mori dream space thresholds for arrowed proximity graphs", "apg"};
  Options o;
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--paper-ceil", o.paper_ceil, "Use ceil(x) instead of strict positivity for b'");
  app.add_option("--max-w", o.max_w, "Cap on W candidates")->check(CLI::PositiveNumber);
  app.add_option("--max-fibers", o.max_fibers, "Cap on fibers for W enumeration")->check(CLI::PositiveNumber);

  auto file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Graph document (JSON)")->required();
    return sub;
  };
  auto* validate_cmd = file_command("validate", "Check the graph axioms");
  auto* generators_cmd = file_command("generators", "List the dual cone generators");
  auto* thresholds_cmd = file_command("thresholds", "Compute a, b' and b");
  auto* report_cmd = file_command("report", "Verdicts at a given delta");
  report_cmd->add_option("--delta", o.delta, "Degree of the Hirzebruch surface");
  report_cmd->add_flag("--p2", o.p2, "Read the graph as a blowup of the projective plane (delta = 1)");
  auto* verify_cmd = file_command("verify", "Check the generators against a double description oracle");
  verify_cmd->add_option("--delta", o.delta, "Also check extremality of the strict transforms");
  auto* invariants_cmd = file_command("invariants", "Maximal contact values and identities per chain");
  auto* pg_cmd = file_command("pg-bound", "Maximum of a over all arrow placements on the forest");
  pg_cmd->add_flag("--exhaustive", o.exhaustive, "Also try coarser fiber partitions");
  pg_cmd->add_option("--max-placements", o.max_placements, "Cap on placements");
  pg_cmd->add_option("--max-origins", o.max_origins, "Cap on constellations");
  auto* dot_cmd = file_command("dot", "Render the graph in DOT");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'apg --help' for usage\n";
    return kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (pg_cmd->parsed()) return cmd_pg_bound(o, out);
    Configuration config(parse_apg_document(read_file(o.file)));
    if (generators_cmd->parsed()) return cmd_generators(o, config, out);
    if (thresholds_cmd->parsed()) return cmd_thresholds(o, config, out);
    if (report_cmd->parsed()) return cmd_report(o, config, out);
    if (verify_cmd->parsed()) return cmd_verify(o, config, out);
    if (invariants_cmd->parsed()) return cmd_invariants(o, config, out);
    if (dot_cmd->parsed()) {
      out << emit_dot(config);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidGraph& e) {
    err << "error: invalid graph\n";
    for (const auto& v : e.report().violations) err << "  " << v.code << ": " << v.message << "\n";
    return kFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace apg::cli
