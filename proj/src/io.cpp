#include "apg/io.hpp"

#include "apg/lattice.hpp"
#include "apg/multiplicities.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace apg {

namespace {

std::string where(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void reject_unknown(const Json& obj, const std::set<std::string>& known, const std::string& context) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.contains(key)) throw ParseError("unknown field '" + key + "' in " + context);
  }
}

const Json& require(const Json& obj, const char* key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field '" + std::string(key) + "' in " + context);
  return *it;
}

std::string as_string(const Json& v, const std::string& what) {
  if (!v.is_string()) throw ParseError(what + " must be a string");
  return v.get<std::string>();
}

bool as_bool(const Json& obj, const char* key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) return false;
  if (!it->is_boolean()) throw ParseError("'" + std::string(key) + "' in " + context + " must be a boolean");
  return it->get<bool>();
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

Json delta_linear_json(const DeltaLinear& d) {
  Json j;
  j["constant"] = exact(d.constant);
  j["slope"] = exact(d.slope);
  j["text"] = d.to_string();
  return j;
}

}  // namespace

ArrowedProximityGraph parse_apg_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("syntax error at " + where(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be an object");
  reject_unknown(doc, {"name", "points", "fibers"}, "document");

  ArrowedProximityGraph g;
  if (auto it = doc.find("name"); it != doc.end()) g.name = as_string(*it, "'name'");
  const auto& points = require(doc, "points", "document");
  if (!points.is_array()) throw ParseError("'points' must be an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const std::string ctx = "points[" + std::to_string(i) + "]";
    if (!p.is_object()) throw ParseError(ctx + " must be an object");
    reject_unknown(p, {"id", "parent", "proximate_to", "on_fiber", "on_special_section"}, ctx);
    PointNode node;
    node.id = as_string(require(p, "id", ctx), ctx + ".id");
    if (auto it = p.find("parent"); it != p.end() && !it->is_null()) {
      node.parent = as_string(*it, ctx + ".parent");
    }
    if (auto it = p.find("proximate_to"); it != p.end()) {
      if (!it->is_array()) throw ParseError(ctx + ".proximate_to must be an array");
      for (const auto& q : *it) node.proximate_to.push_back(as_string(q, ctx + ".proximate_to entry"));
    }
    node.on_fiber = as_bool(p, "on_fiber", ctx);
    node.on_special_section = as_bool(p, "on_special_section", ctx);
    g.points.push_back(std::move(node));
  }
  const auto& fibers = require(doc, "fibers", "document");
  if (!fibers.is_object()) throw ParseError("'fibers' must be an object");
  for (const auto& [origin, fiber] : fibers.items()) {
    g.fiber_of_origin[origin] = as_string(fiber, "fiber of '" + origin + "'");
  }
  normalize_origin_flags(g);
  return g;
}

ArrowedProximityGraph parse_apg(const std::string& text) {
  auto g = parse_apg_document(text);
  auto report = validate(g);
  if (!report.ok()) throw InvalidGraph(std::move(report));
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json apg_to_json(const ArrowedProximityGraph& graph) {
  Json doc;
  doc["name"] = graph.name;
  doc["points"] = Json::array();
  for (const auto& p : graph.points) {
    Json node;
    node["id"] = p.id;
    node["parent"] = p.parent ? Json(*p.parent) : Json(nullptr);
    node["proximate_to"] = p.proximate_to;
    node["on_fiber"] = p.on_fiber;
    node["on_special_section"] = p.on_special_section;
    doc["points"].push_back(std::move(node));
  }
  // Origins in point order, then any stray keys.
  Json fibers = Json::object();
  for (const auto& p : graph.points) {
    if (auto it = graph.fiber_of_origin.find(p.id); it != graph.fiber_of_origin.end()) fibers[p.id] = it->second;
  }
  for (const auto& [origin, fiber] : graph.fiber_of_origin) {
    if (!fibers.contains(origin)) fibers[origin] = fiber;
  }
  doc["fibers"] = std::move(fibers);
  return doc;
}

std::string serialize_apg(const ArrowedProximityGraph& graph) {
  return apg_to_json(graph).dump(2) + "\n";
}

std::string emit_dot(const Configuration& config) {
  std::ostringstream out;
  out << "digraph " << dot_quote(config.graph().name.empty() ? "apg" : config.graph().name) << " {\n";
  out << "  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t p = 0; p < config.size(); ++p) {
    out << "  " << dot_quote(config.id(p));
    if (config.kind(p) == PointKind::Origin) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (std::size_t q = 0; q < config.size(); ++q) {
    for (auto p : config.proximate_to(q)) {
      if (config.parent(q) == p) {
        out << "  " << dot_quote(config.id(q)) << " -> " << dot_quote(config.id(p)) << ";\n";
        continue;
      }
      // Implied when some point further up the branch of q is proximate to p.
      bool implied = false;
      std::vector<std::size_t> stack(config.children(q).begin(), config.children(q).end());
      while (!stack.empty() && !implied) {
        auto r = stack.back();
        stack.pop_back();
        if (config.is_proximate(r, p)) implied = true;
        for (auto c : config.children(r)) stack.push_back(c);
      }
      if (!implied) {
        out << "  " << dot_quote(config.id(q)) << " -> " << dot_quote(config.id(p)) << " [style=dashed];\n";
      }
    }
  }
  // One terminal arrow per constellation and smooth curve, at its last point.
  std::size_t arrow = 0;
  for (std::size_t c = 0; c < config.constellation_count(); ++c) {
    for (auto curve : {SmoothCurve::Fiber, SmoothCurve::SpecialSection}) {
      std::optional<std::size_t> last;
      for (std::size_t p = 0; p < config.size(); ++p) {
        if (config.constellation_of(p) != c || !config.flagged(p, curve)) continue;
        if (!last || config.level(p) > config.level(*last)) last = p;
      }
      if (!last) continue;
      std::string label = curve == SmoothCurve::Fiber
                              ? "F~" + std::to_string(config.fiber_of_constellation(c) + 1)
                              : std::string("M~0");
      std::string node = "arrow" + std::to_string(++arrow);
      out << "  " << node << " [shape=plaintext, label=" << dot_quote(label) << "];\n";
      out << "  " << dot_quote(config.id(*last)) << " -> " << node << " [arrowhead=vee, color=gray40];\n";
    }
  }
  out << "}\n";
  return out.str();
}

Json exact(const Integer& x) {
  if (fits_int64(x)) return Json(x.get_si());
  return Json(to_string(x));
}

Json exact(const Rational& x) {
  if (x.get_den() == 1) return exact(Integer(x.get_num()));
  return Json(to_string(x));
}

Json validation_json(const ValidationReport& report) {
  Json j;
  j["ok"] = report.ok();
  j["violations"] = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["code"] = v.code;
    item["points"] = v.points;
    item["message"] = v.message;
    j["violations"].push_back(std::move(item));
  }
  return j;
}

Json generators_json(const Configuration& config, const GeneratorSet& set) {
  Json j;
  j["count"] = set.count();
  j["w_candidates"] = set.w_candidates;
  j["generators"] = Json::array();
  for (const auto& g : set.entries) {
    Json item;
    item["labels"] = Json::array();
    for (const auto& l : g.labels) item["labels"].push_back(l.to_string());
    item["a"] = exact(g.divisor.a);
    item["b"] = exact(g.divisor.b);
    Json c = Json::object();
    for (std::size_t p = 0; p < config.size(); ++p) {
      if (g.divisor.c[p] != 0) c[config.id(p)] = exact(g.divisor.c[p]);
    }
    item["c"] = std::move(c);
    item["self_intersection"] = delta_linear_json(self_intersection(g.divisor));
    item["anticanonical_product"] = delta_linear_json(anticanonical_product(g.divisor));
    j["generators"].push_back(std::move(item));
  }
  return j;
}

Json thresholds_json(const Thresholds& t, bool paper_ceil) {
  Json j;
  j["ceil"] = paper_ceil ? "paper" : "strict";
  j["a"] = exact(t.a);
  j["b_prime"] = exact(paper_ceil ? t.b_prime_paper : t.b_prime);
  j["b"] = exact(paper_ceil ? t.b_paper : t.b);
  j["witnesses"] = Json::array();
  for (const auto& w : t.witnesses) {
    Json item;
    item["generator"] = w.generator;
    item["self_ratio"] = exact(w.self_ratio);
    item["a"] = exact(w.a_value);
    item["anti_ratio"] = exact(w.anti_ratio);
    item["b_prime"] = exact(paper_ceil ? w.b_prime_paper : w.b_prime_value);
    j["witnesses"].push_back(std::move(item));
  }
  return j;
}

Json verdict_json(const Verdict& v, bool paper_ceil) {
  Json j;
  j["delta"] = exact(v.delta);
  j["p2"] = v.p2_mode;
  j["ne_minimal"] = v.ne_minimal == Tristate::Yes ? "yes" : "silent";
  j["mori_dream"] = v.mori_dream == Tristate::Yes ? "yes" : "silent";
  j["anticanonical_big"] = v.anticanonical_big;
  j["thresholds"] = thresholds_json(v.thresholds, paper_ceil);
  j["extremal_rays"] = v.extremal_rays;
  j["nef_generators"] = v.nef_generators;
  return j;
}

Json dual_cone_json(const DualConeCheck& check) {
  Json j;
  j["ok"] = check.ok;
  j["generators"] = check.generators;
  j["rays"] = check.rays;
  j["extreme_generators"] = check.extreme_generators;
  j["witness"] = check.witness;
  return j;
}

Json invariants_json(const Configuration& config, std::size_t chain, const ValuationInvariants& v,
                     const SumIdentity& s) {
  auto list = [](const std::vector<Integer>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(exact(x));
    return a;
  };
  const auto& ch = config.chain(chain);
  auto m = germ_multiplicities(config, chain, ch.length());
  Json j;
  j["chain"] = chain + 1;
  j["points"] = Json::array();
  for (auto p : ch.points) j["points"].push_back(config.id(p));
  j["multiplicities"] = list(m.values);
  j["g"] = v.g;
  j["beta_bar"] = list(v.beta_bar);
  j["e"] = list(v.e);
  j["N"] = list(v.N);
  j["beta"] = list(v.beta);
  j["free_tail"] = v.free_tail;
  j["sum_identity"] = {{"lhs", exact(s.lhs)}, {"rhs", exact(s.rhs)}, {"holds", s.holds()}};
  return j;
}

}  // namespace apg
