#include "apg/proximity_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace apg {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

const char* curve_name(SmoothCurve curve) {
  return curve == SmoothCurve::Fiber ? "fiber" : "special section";
}

bool node_flag(const PointNode& node, SmoothCurve curve) {
  return curve == SmoothCurve::Fiber ? node.on_fiber : node.on_special_section;
}

class Validator {
 public:
  explicit Validator(const ArrowedProximityGraph& graph) : g_(graph), n_(graph.points.size()) {}

  ValidationReport run() {
    if (n_ == 0) {
      add(rule::kEmptyGraph, {}, "graph has no points");
      return std::move(report_);
    }
    index_ids();
    resolve_references();
    compute_ancestry();
    check_proximities();
    check_fibers();
    check_flags(SmoothCurve::Fiber);
    check_flags(SmoothCurve::SpecialSection);
    check_overlap_and_sections();
    return std::move(report_);
  }

 private:
  void add(const char* code, std::vector<PointId> points, std::string message) {
    report_.violations.push_back({code, std::move(points), std::move(message)});
  }

  const PointId& id(std::size_t p) const { return g_.points[p].id; }

  void index_ids() {
    for (std::size_t p = 0; p < n_; ++p) {
      auto [it, inserted] = index_.emplace(id(p), p);
      if (!inserted) add(rule::kDuplicateId, {id(p)}, "point id '" + id(p) + "' is used twice");
    }
  }

  std::size_t lookup(const PointId& ref, std::size_t from, const char* what) {
    auto it = index_.find(ref);
    if (it == index_.end()) {
      add(rule::kDanglingReference, {id(from), ref},
          std::string(what) + " '" + ref + "' of point '" + id(from) + "' does not exist");
      return kNone;
    }
    return it->second;
  }

  void resolve_references() {
    parent_.assign(n_, kNone);
    proximate_.assign(n_, {});
    resolved_.assign(n_, true);
    for (std::size_t p = 0; p < n_; ++p) {
      const auto& node = g_.points[p];
      if (node.parent) {
        parent_[p] = lookup(*node.parent, p, "parent");
        if (parent_[p] == kNone) resolved_[p] = false;
      }
      for (const auto& q : node.proximate_to) {
        auto qi = lookup(q, p, "proximate point");
        if (qi == kNone) {
          resolved_[p] = false;
        } else {
          proximate_[p].push_back(qi);
        }
      }
    }
  }

  // Marks points whose parent walk reaches an origin; reports cycles.
  void compute_ancestry() {
    sound_.assign(n_, false);
    std::vector<int> state(n_, 0);  // 0 unvisited, 1 on stack, 2 done
    std::set<std::size_t> in_cycle;
    for (std::size_t start = 0; start < n_; ++start) {
      std::vector<std::size_t> path;
      std::size_t p = start;
      while (p != kNone && state[p] == 0) {
        state[p] = 1;
        path.push_back(p);
        p = parent_[p];
      }
      bool ok_base = false;
      if (p == kNone) {
        ok_base = true;  // reached past an origin or a dangling parent
      } else if (state[p] == 1) {
        auto it = std::find(path.begin(), path.end(), p);
        for (; it != path.end(); ++it) in_cycle.insert(*it);
      } else {
        ok_base = sound_[p];
      }
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        std::size_t q = *it;
        state[q] = 2;
        std::size_t par = parent_[q];
        bool dangling_parent = g_.points[q].parent.has_value() && par == kNone;
        if (in_cycle.count(q) || dangling_parent) {
          sound_[q] = false;
        } else if (par == kNone) {
          sound_[q] = true;
        } else {
          sound_[q] = ok_base && sound_[par];
        }
        ok_base = sound_[q];
      }
    }
    for (auto p : in_cycle) {
      add(rule::kParentCycle, {id(p)}, "parent links through '" + id(p) + "' form a cycle");
    }
  }

  bool is_strict_ancestor(std::size_t q, std::size_t p) const {
    for (std::size_t a = parent_[p]; a != kNone; a = parent_[a]) {
      if (a == q) return true;
    }
    return false;
  }

  bool proximate(std::size_t r, std::size_t p) const {
    return std::find(proximate_[r].begin(), proximate_[r].end(), p) != proximate_[r].end();
  }

  void check_proximities() {
    for (std::size_t r = 0; r < n_; ++r) {
      const auto& node = g_.points[r];
      if (!node.parent) {
        if (!node.proximate_to.empty()) {
          add(rule::kOriginProximity, {id(r)}, "origin '" + id(r) + "' cannot be proximate to any point");
        }
        continue;
      }
      std::set<PointId> distinct(node.proximate_to.begin(), node.proximate_to.end());
      if (distinct.size() != node.proximate_to.size() || distinct.empty() || distinct.size() > 2) {
        std::ostringstream msg;
        msg << "point '" << id(r) << "' is proximate to " << node.proximate_to.size()
            << " points; a non-origin point is proximate to one (free) or two (satellite) distinct points";
        add(rule::kProximityArity, {id(r)}, msg.str());
      }
      if (!distinct.count(*node.parent)) {
        add(rule::kParentNotProximate, {id(r), *node.parent},
            "point '" + id(r) + "' must be proximate to its parent '" + *node.parent + "'");
      }
      if (!resolved_[r] || !sound_[r]) continue;
      for (auto p : proximate_[r]) {
        if (!is_strict_ancestor(p, r)) {
          add(rule::kProximityNotAncestor, {id(r), id(p)},
              "point '" + id(r) + "' is proximate to '" + id(p) + "', which is not one of its predecessors");
          continue;
        }
        for (std::size_t q = parent_[r]; q != p; q = parent_[q]) {
          if (!proximate(q, p)) {
            add(rule::kProximitySegment, {id(r), id(q), id(p)},
                "'" + id(r) + "' is proximate to '" + id(p) + "' but the intermediate point '" + id(q) +
                    "' is not");
          }
        }
      }
    }
    // Two satellite children of one point proximate to the same earlier point
    // would both be the intersection of the same two exceptional curves.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t r = 0; r < n_; ++r) {
      if (parent_[r] == kNone || !sound_[r]) continue;
      for (auto q : proximate_[r]) {
        if (q == parent_[r]) continue;
        auto [it, inserted] = seen.emplace(std::make_pair(parent_[r], q), r);
        if (!inserted) {
          add(rule::kSatelliteDuplicate, {id(it->second), id(r)},
              "points '" + id(it->second) + "' and '" + id(r) + "' would both be the satellite point of '" +
                  id(parent_[r]) + "' on the exceptional curve of '" + id(q) + "'");
        }
      }
    }
  }

  PointKind kind(std::size_t p) const {
    if (!g_.points[p].parent) return PointKind::Origin;
    return proximate_[p].size() >= 2 ? PointKind::Satellite : PointKind::Free;
  }

  void check_fibers() {
    for (const auto& [origin, fiber] : g_.fiber_of_origin) {
      auto it = index_.find(origin);
      if (it == index_.end()) {
        add(rule::kDanglingReference, {origin}, "fiber entry refers to unknown point '" + origin + "'");
      } else if (g_.points[it->second].parent) {
        add(rule::kFiberOnNonOrigin, {origin}, "fiber entry given for '" + origin + "', which is not an origin");
      }
    }
    for (std::size_t p = 0; p < n_; ++p) {
      if (g_.points[p].parent) continue;
      if (!g_.fiber_of_origin.count(id(p))) {
        add(rule::kMissingFiber, {id(p)}, "origin '" + id(p) + "' has no fiber assigned");
      }
      if (!g_.points[p].on_fiber) {
        add(rule::kOriginFiberFlag, {id(p)}, "origin '" + id(p) + "' must be marked on_fiber");
      }
    }
  }

  void check_flags(SmoothCurve curve) {
    std::map<std::size_t, std::size_t> flagged_child;
    for (std::size_t p = 0; p < n_; ++p) {
      if (!node_flag(g_.points[p], curve)) continue;
      if (kind(p) == PointKind::Satellite) {
        add(rule::kFlagOnSatellite, {id(p)},
            std::string("satellite point '") + id(p) + "' cannot lie on the " + curve_name(curve));
      }
      std::size_t par = parent_[p];
      if (par == kNone) continue;
      if (!node_flag(g_.points[par], curve)) {
        add(rule::kFlagChain, {id(p), id(par)},
            std::string("point '") + id(p) + "' lies on the " + curve_name(curve) + " but its parent '" +
                id(par) + "' does not");
      }
      auto [it, inserted] = flagged_child.emplace(par, p);
      if (!inserted) {
        add(rule::kFlagChain, {id(it->second), id(p)},
            std::string("the ") + curve_name(curve) + " cannot pass through both '" + id(it->second) +
                "' and '" + id(p) + "'");
      }
    }
  }

  void check_overlap_and_sections() {
    std::map<FiberId, std::vector<PointId>> section_origins;
    for (std::size_t p = 0; p < n_; ++p) {
      const auto& node = g_.points[p];
      if (node.parent && node.on_fiber && node.on_special_section) {
        add(rule::kFiberSectionOverlap, {id(p)},
            "fiber and special section meet only at the origin, but both pass through '" + id(p) + "'");
      }
      if (!node.parent && node.on_special_section) {
        auto it = g_.fiber_of_origin.find(id(p));
        if (it != g_.fiber_of_origin.end()) section_origins[it->second].push_back(id(p));
      }
    }
    for (auto& [fiber, origins] : section_origins) {
      if (origins.size() > 1) {
        add(rule::kSectionPerFiber, origins,
            "the special section meets fiber '" + fiber + "' once but is marked at " +
                std::to_string(origins.size()) + " origins on it");
      }
    }
  }

  const ArrowedProximityGraph& g_;
  std::size_t n_;
  ValidationReport report_;
  std::map<PointId, std::size_t> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> proximate_;
  std::vector<bool> resolved_;
  std::vector<bool> sound_;
};

}  // namespace

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
}

ValidationReport validate(const ArrowedProximityGraph& graph) { return Validator(graph).run(); }

void normalize_origin_flags(ArrowedProximityGraph& graph) {
  for (auto& node : graph.points) {
    if (!node.parent) node.on_fiber = true;
  }
}

namespace {
std::string summarize(const ValidationReport& report) {
  std::string msg = "invalid arrowed proximity graph";
  for (const auto& v : report.violations) msg += "\n  [" + v.code + "] " + v.message;
  return msg;
}
}  // namespace

InvalidGraph::InvalidGraph(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

Configuration::Configuration(ArrowedProximityGraph graph) : graph_(std::move(graph)) {
  normalize_origin_flags(graph_);
  if (auto report = validate(graph_); !report.ok()) throw InvalidGraph(std::move(report));

  const std::size_t n = graph_.points.size();
  for (std::size_t p = 0; p < n; ++p) index_.emplace(graph_.points[p].id, p);

  parent_.assign(n, std::nullopt);
  proximate_.assign(n, {});
  children_.assign(n, {});
  for (std::size_t p = 0; p < n; ++p) {
    const auto& node = graph_.points[p];
    if (node.parent) {
      parent_[p] = index_.at(*node.parent);
      children_[*parent_[p]].push_back(p);
    }
    for (const auto& q : node.proximate_to) proximate_[p].push_back(index_.at(q));
    std::sort(proximate_[p].begin(), proximate_[p].end());
  }

  level_.assign(n, 0);
  constellation_of_.assign(n, 0);
  kind_.assign(n, PointKind::Origin);
  std::map<FiberId, std::size_t> fiber_index;
  for (std::size_t p = 0; p < n; ++p) {
    if (parent_[p]) continue;
    constellation_of_[p] = origins_.size();
    origins_.push_back(p);
    const auto& fid = graph_.fiber_of_origin.at(graph_.points[p].id);
    auto [it, inserted] = fiber_index.emplace(fid, fiber_ids_.size());
    if (inserted) fiber_ids_.push_back(fid);
    fiber_of_constellation_.push_back(it->second);
  }
  // Depth-first from each origin so levels and constellations are set top-down.
  for (std::size_t c = 0; c < origins_.size(); ++c) {
    std::vector<std::size_t> stack{origins_[c]};
    while (!stack.empty()) {
      std::size_t p = stack.back();
      stack.pop_back();
      for (auto ch : children_[p]) {
        level_[ch] = level_[p] + 1;
        constellation_of_[ch] = c;
        kind_[ch] = proximate_[ch].size() == 2 ? PointKind::Satellite : PointKind::Free;
        stack.push_back(ch);
      }
    }
  }

  positions_.assign(n, {});
  for (std::size_t p = 0; p < n; ++p) {
    if (!children_[p].empty()) continue;
    Chain chain;
    for (std::optional<std::size_t> q = p; q; q = parent_[*q]) chain.points.push_back(*q);
    std::reverse(chain.points.begin(), chain.points.end());
    chain.constellation = constellation_of_[p];
    chain.fiber = fiber_of_constellation_[chain.constellation];
    for (std::size_t k = 1; k <= chain.points.size(); ++k) {
      positions_[chain.points[k - 1]].push_back({chains_.size(), k});
    }
    chains_.push_back(std::move(chain));
  }
}

std::size_t Configuration::index_of(const PointId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown point '" + id + "'");
  return it->second;
}

bool Configuration::is_proximate(std::size_t q, std::size_t p) const {
  return std::binary_search(proximate_[q].begin(), proximate_[q].end(), p);
}

bool Configuration::flagged(std::size_t p, SmoothCurve curve) const {
  return node_flag(graph_.points[p], curve);
}

std::size_t Configuration::fiber_of_point(std::size_t p) const {
  return fiber_of_constellation_[constellation_of_[p]];
}

std::vector<std::size_t> Configuration::maximal_points() const {
  std::vector<std::size_t> out;
  for (const auto& c : chains_) out.push_back(c.points.back());
  return out;
}

std::size_t Configuration::shared_prefix(std::size_t j1, std::size_t j2) const {
  const auto& a = chains_.at(j1).points;
  const auto& b = chains_.at(j2).points;
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return k;
}

std::vector<std::size_t> Configuration::points_on_fiber(std::size_t f) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < size(); ++p) {
    if (fiber_of_point(p) == f) out.push_back(p);
  }
  return out;
}

std::vector<Chain> derive_chains(const ArrowedProximityGraph& graph) { return Configuration(graph).chains(); }

}  // namespace apg
