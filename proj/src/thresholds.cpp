#include "apg/thresholds.hpp"

#include "apg/multiplicities.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace apg {

Integer ceil_star(const Rational& x) {
  Integer c = ceil(x);
  return c < 1 ? Integer(1) : c;
}

Integer strict_pos_threshold(const Rational& x) {
  if (x < 0) return 0;
  return floor(x) + 1;
}

Integer ceil_plus(const Rational& x) {
  if (x < 0) return 0;
  return ceil(x);
}

Thresholds thresholds_of(const GeneratorSet& generators) {
  Thresholds t;
  for (const auto& g : generators.entries) {
    if (g.is_f_star()) continue;
    const auto& d = g.divisor;
    ThresholdWitness w;
    w.generator = g.name();
    w.self_ratio = Rational(d.sum_c_squared() - 2 * d.a * d.b, d.b * d.b);
    w.self_ratio.canonicalize();
    w.a_value = ceil_star(w.self_ratio);
    w.anti_ratio = Rational(d.sum_c() - 2 * d.a, d.b) - 2;
    w.anti_ratio.canonicalize();
    w.b_prime_value = strict_pos_threshold(w.anti_ratio);
    w.b_prime_paper = ceil_plus(w.anti_ratio);
    t.a = std::max(t.a, w.a_value);
    t.b_prime = std::max(t.b_prime, w.b_prime_value);
    t.b_prime_paper = std::max(t.b_prime_paper, w.b_prime_paper);
    t.witnesses.push_back(std::move(w));
  }
  t.b = std::max(t.a, t.b_prime);
  t.b_paper = std::max(t.a, t.b_prime_paper);
  return t;
}

Thresholds compute_thresholds(const Configuration& config, const EnumerationLimits& limits) {
  return thresholds_of(generator_set(config, limits));
}

Integer a_of_apg(const Configuration& config, const EnumerationLimits& limits) {
  return compute_thresholds(config, limits).a;
}

Integer b_prime_of_apg(const Configuration& config, bool paper_ceil, const EnumerationLimits& limits) {
  auto t = compute_thresholds(config, limits);
  return paper_ceil ? t.b_prime_paper : t.b_prime;
}

Integer b_of_apg(const Configuration& config, const EnumerationLimits& limits) {
  return compute_thresholds(config, limits).b;
}

ClosedForm closed_form_free_points(const Configuration& config) {
  for (std::size_t p = 0; p < config.size(); ++p) {
    if (config.kind(p) == PointKind::Satellite) {
      throw HypothesesNotMet("closed form needs free points only; '" + config.id(p) + "' is satellite");
    }
    if (config.flagged(p, SmoothCurve::SpecialSection)) {
      throw HypothesesNotMet("closed form needs M0 away from the configuration; it passes through '" +
                             config.id(p) + "'");
    }
    if (config.kind(p) != PointKind::Origin && config.flagged(p, SmoothCurve::Fiber)) {
      throw HypothesesNotMet("closed form needs fibers through origins only; one passes through '" +
                             config.id(p) + "'");
    }
  }
  // Longest chain per constellation, then the best constellation per fiber.
  std::vector<std::size_t> longest(config.constellation_count(), 0);
  for (const auto& chain : config.chains()) {
    longest[chain.constellation] = std::max(longest[chain.constellation], chain.length());
  }
  std::vector<std::size_t> best(config.fiber_count(), 0);
  for (std::size_t c = 0; c < config.constellation_count(); ++c) {
    auto f = config.fiber_of_constellation(c);
    best[f] = std::max(best[f], longest[c]);
  }
  Integer total = 0;
  for (auto n : best) total += static_cast<unsigned long>(n);
  return {ceil_star(total), strict_pos_threshold(total - 2), ceil_plus(total - 2)};
}

ClosedForm closed_form_constellation(const Configuration& config) {
  if (config.constellation_count() != 1) {
    throw HypothesesNotMet("closed form needs a single constellation, got " +
                           std::to_string(config.constellation_count()));
  }
  ClosedForm out{1, 0, 0};
  for (std::size_t j = 0; j < config.chains().size(); ++j) {
    const auto n = config.chain(j).length();
    auto m = germ_multiplicities(config, j, n);
    auto ab = intersection_numbers(config, j, n);
    Rational self(m.sum_of_squares() - 2 * ab.a * ab.b, ab.b * ab.b);
    self.canonicalize();
    Rational anti(m.sum() - 2 * (ab.a + ab.b), ab.b);
    anti.canonicalize();
    out.a = std::max(out.a, ceil_star(self));
    out.b_prime = std::max(out.b_prime, strict_pos_threshold(anti));
    out.b_prime_paper = std::max(out.b_prime_paper, ceil_plus(anti));
  }
  return out;
}

namespace {

// Ends of smooth branches from the origin: points reachable through free
// points only, origin included, in depth-first order.
std::vector<std::size_t> smooth_ends(const Configuration& forest, std::size_t origin) {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{origin};
  while (!stack.empty()) {
    auto p = stack.back();
    stack.pop_back();
    out.push_back(p);
    const auto& ch = forest.children(p);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
      if (forest.kind(*it) == PointKind::Free) stack.push_back(*it);
    }
  }
  return out;
}

std::vector<std::size_t> path_from_origin(const Configuration& forest, std::size_t end) {
  std::vector<std::size_t> path;
  for (std::optional<std::size_t> q = end; q; q = forest.parent(*q)) path.push_back(*q);
  std::reverse(path.begin(), path.end());
  return path;
}

struct LocalPlacement {
  std::size_t fiber_end;
  std::optional<std::size_t> section_end;
};

// Fiber chain and M0 chain of one constellation, meeting only at the origin.
std::vector<LocalPlacement> local_placements(const Configuration& forest, std::size_t origin) {
  auto ends = smooth_ends(forest, origin);
  std::vector<LocalPlacement> out;
  for (auto f : ends) {
    auto fpath = path_from_origin(forest, f);
    out.push_back({f, std::nullopt});
    for (auto s : ends) {
      auto spath = path_from_origin(forest, s);
      bool disjoint = fpath.size() < 2 || spath.size() < 2 || fpath[1] != spath[1];
      if (disjoint) out.push_back({f, s});
    }
  }
  return out;
}

// All set partitions of {0..n-1} as block labels (restricted growth strings).
void set_partitions(std::size_t n, std::vector<std::size_t>& current, std::size_t blocks,
                    const std::function<void(const std::vector<std::size_t>&, std::size_t)>& visit) {
  if (current.size() == n) {
    visit(current, blocks);
    return;
  }
  for (std::size_t b = 0; b <= blocks; ++b) {
    current.push_back(b);
    set_partitions(n, current, std::max(blocks, b + 1), visit);
    current.pop_back();
  }
}

}  // namespace

PgBound a_of_pg(const ArrowedProximityGraph& forest_graph, const PgLimits& limits) {
  // Structure only: drop arrows, put every origin on its own fiber.
  ArrowedProximityGraph bare = forest_graph;
  bare.fiber_of_origin.clear();
  for (auto& node : bare.points) {
    node.on_fiber = false;
    node.on_special_section = false;
    if (!node.parent) bare.fiber_of_origin[node.id] = node.id;
  }
  const Configuration forest(bare);
  const auto& origins = forest.origins();
  if (origins.size() > limits.max_origins) {
    throw CapExceeded(std::to_string(origins.size()) + " origins exceed the cap of " +
                      std::to_string(limits.max_origins));
  }
  std::vector<std::vector<LocalPlacement>> local;
  for (auto o : origins) local.push_back(local_placements(forest, o));

  PgBound result;
  result.a = 0;
  auto evaluate = [&](const std::vector<std::size_t>& fiber_block, const std::vector<std::size_t>& choice) {
    if (++result.placements > limits.max_placements) {
      throw CapExceeded("more than " + std::to_string(limits.max_placements) + " arrow placements");
    }
    ArrowedProximityGraph g = bare;
    g.fiber_of_origin.clear();
    for (std::size_t c = 0; c < origins.size(); ++c) {
      g.fiber_of_origin[forest.id(origins[c])] = "f" + std::to_string(fiber_block[c] + 1);
      const auto& lp = local[c][choice[c]];
      for (auto p : path_from_origin(forest, lp.fiber_end)) g.points[p].on_fiber = true;
      if (lp.section_end) {
        for (auto p : path_from_origin(forest, *lp.section_end)) g.points[p].on_special_section = true;
      }
    }
    Integer a = a_of_apg(Configuration(g), limits.generators);
    if (a > result.a) {
      result.a = a;
      result.best = std::move(g);
    }
  };

  auto visit_partition = [&](const std::vector<std::size_t>& block, std::size_t) {
    // Odometer over local placements; M0 meets each fiber at most once.
    std::vector<std::size_t> choice(origins.size(), 0);
    while (true) {
      std::map<std::size_t, int> sections;
      bool ok = true;
      for (std::size_t c = 0; c < origins.size() && ok; ++c) {
        if (local[c][choice[c]].section_end && ++sections[block[c]] > 1) ok = false;
      }
      if (ok) evaluate(block, choice);
      std::size_t c = 0;
      while (c < origins.size() && ++choice[c] == local[c].size()) choice[c++] = 0;
      if (c == origins.size()) break;
    }
  };

  if (limits.exhaustive) {
    std::vector<std::size_t> current;
    set_partitions(origins.size(), current, 0, visit_partition);
  } else {
    std::vector<std::size_t> distinct(origins.size());
    for (std::size_t c = 0; c < distinct.size(); ++c) distinct[c] = c;
    visit_partition(distinct, distinct.size());
  }
  return result;
}

Verdict report(const Configuration& config, const Integer& delta, bool p2_mode, const EnumerationLimits& limits) {
  if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
  if (p2_mode && delta != 1) throw std::invalid_argument("projective plane mode works over F_1 (delta = 1)");
  auto generators = generator_set(config, limits);
  Verdict v;
  v.delta = delta;
  v.p2_mode = p2_mode;
  v.thresholds = thresholds_of(generators);
  v.ne_minimal = delta >= v.thresholds.a ? Tristate::Yes : Tristate::Silent;
  v.mori_dream = delta >= v.thresholds.b ? Tristate::Yes : Tristate::Silent;
  v.anticanonical_big = delta >= v.thresholds.b_prime;
  if (v.ne_minimal == Tristate::Yes) {
    for (std::size_t f = 0; f < config.fiber_count(); ++f) {
      v.extremal_rays.push_back((p2_mode ? "L~[" : "F~[") + config.fibers()[f] + "]");
    }
    v.extremal_rays.push_back(p2_mode ? "E[q] (M~0)" : "M~0");
    for (std::size_t p = 0; p < config.size(); ++p) v.extremal_rays.push_back("E[" + config.id(p) + "]");
    for (const auto& g : generators.entries) v.nef_generators.push_back(g.name());
  }
  return v;
}

std::string describe(const Verdict& v, bool paper_ceil) {
  const auto& t = v.thresholds;
  std::ostringstream out;
  out << "a=" << t.a << " b'=" << (paper_ceil ? t.b_prime_paper : t.b_prime) << " b=" << (paper_ceil ? t.b_paper : t.b)
      << "\n";
  out << "delta=" << v.delta << (v.p2_mode ? " (blowup of the projective plane, over F_1)" : "") << "\n";
  if (v.ne_minimal == Tristate::Yes) {
    out << "NE: minimally generated (finite polyhedral)\n  extremal rays:";
    for (const auto& r : v.extremal_rays) out << " " << r;
    out << "\nNef: generated by " << v.nef_generators.size() << " classes\n";
    for (const auto& g : v.nef_generators) out << "  " << g << "\n";
  } else {
    out << "NE: criterion silent (delta < a)\n";
  }
  if (v.mori_dream == Tristate::Yes) {
    out << "MDS: yes, Mori dream space\n";
  } else {
    out << "MDS: criterion silent (delta < b)\n";
  }
  if (v.anticanonical_big && v.ne_minimal == Tristate::Yes) {
    out << "note: -K_X is big (positive on every nef generator)\n";
  }
  return out.str();
}

}  // namespace apg
