#include "apg/lattice.hpp"
#include "apg/thresholds.hpp"
#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

#include <doctest.h>

using namespace apg;
using namespace apg::test;

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Smallest delta >= 1 making every generator nonnegative on itself, by scanning.
Integer scan_a(const GeneratorSet& set) {
  for (Integer d = 1;; ++d) {
    bool ok = true;
    for (const auto& g : set.entries) ok = ok && self_intersection(g.divisor).at(d) >= 0;
    if (ok) return d;
  }
}

// Smallest delta >= 0 with every D != F* strictly positive against -K.
Integer scan_b_prime(const GeneratorSet& set) {
  for (Integer d = 0;; ++d) {
    bool ok = true;
    for (const auto& g : set.entries) {
      if (!g.is_f_star()) ok = ok && anticanonical_product(g.divisor).at(d) >= 1;
    }
    if (ok) return d;
  }
}

ArrowedProximityGraph free_chains(std::vector<std::size_t> lengths, std::vector<std::string> fibers) {
  ArrowedProximityGraph g;
  for (std::size_t c = 0; c < lengths.size(); ++c) {
    for (std::size_t i = 0; i < lengths[c]; ++i) {
      std::string id = "c" + std::to_string(c) + "_" + std::to_string(i);
      PointNode node{id, std::nullopt, {}, i == 0, false};
      if (i) {
        node.parent = "c" + std::to_string(c) + "_" + std::to_string(i - 1);
        node.proximate_to = {*node.parent};
      }
      g.points.push_back(node);
    }
    g.fiber_of_origin["c" + std::to_string(c) + "_0"] = fibers[c];
  }
  return g;
}

}  // namespace

TEST_SUITE("thresholds") {

TEST_CASE("rounding") {
  CHECK(ceil_star(q(9, 10)) == 1);
  CHECK(ceil_star(q(2)) == 2);
  CHECK(ceil_star(q(-5)) == 1);
  CHECK(ceil_star(q(0)) == 1);
  CHECK(ceil_star(q(7, 3)) == 3);

  CHECK(strict_pos_threshold(q(0)) == 1);
  CHECK(strict_pos_threshold(q(11, 5)) == 3);
  CHECK(strict_pos_threshold(q(-1, 2)) == 0);
  CHECK(strict_pos_threshold(q(6)) == 7);

  CHECK(ceil_plus(q(0)) == 0);
  CHECK(ceil_plus(q(11, 5)) == 3);
  CHECK(ceil_plus(q(6)) == 6);
  CHECK(ceil_plus(q(-1, 2)) == 0);
}

TEST_CASE("the two b' roundings differ exactly at nonnegative integers") {
  for (long num = -40; num <= 40; ++num) {
    for (long den : {1, 2, 3, 5, 7}) {
      auto x = q(num, den);
      Integer diff = strict_pos_threshold(x) - ceil_plus(x);
      bool integral_nonneg = x >= 0 && x.get_den() == 1;
      CHECK(diff == (integral_nonneg ? 1 : 0));
    }
  }
}

TEST_CASE("fixture thresholds") {
  struct Row {
    const char* file;
    long a, bp, bp_paper, b;
  };
  for (auto r : {Row{"fix_a.json", 2, 1, 0, 2}, Row{"fix_b.json", 1, 3, 3, 3}, Row{"fix_d.json", 1, 0, 0, 1},
                 Row{"fix_e.json", 8, 7, 6, 8}, Row{"single_point.json", 1, 0, 0, 1}}) {
    CAPTURE(r.file);
    auto c = load(r.file);
    auto t = compute_thresholds(c);
    CHECK(t.a == r.a);
    CHECK(t.b_prime == r.bp);
    CHECK(t.b_prime_paper == r.bp_paper);
    CHECK(t.b == r.b);
    CHECK(a_of_apg(c) == r.a);
    CHECK(b_prime_of_apg(c) == r.bp);
    CHECK(b_prime_of_apg(c, true) == r.bp_paper);
    CHECK(b_of_apg(c) == r.b);
    auto set = generator_set(c);
    CHECK(t.witnesses.size() == set.count() - 1);
    CHECK(scan_a(set) == t.a);
    CHECK(scan_b_prime(set) == t.b_prime);
  }
}

TEST_CASE("witness values of the sixteen-point chain") {
  auto t = compute_thresholds(load("fix_b.json"));
  const ThresholdWitness* w = nullptr;
  for (const auto& x : t.witnesses) {
    if (x.generator == "Λ(1,16)") w = &x;
  }
  REQUIRE(w);
  CHECK(w->self_ratio == q(90, 100));
  CHECK(w->a_value == 1);
  CHECK(w->anti_ratio == q(11, 5));
  CHECK(w->b_prime_value == 3);
}

TEST_CASE("random graphs: thresholds match a direct scan over delta") {
  GraphGen gen(3);
  GraphShape shape;
  shape.max_points = 9;
  for (int trial = 0; trial < 150; ++trial) {
    Configuration c(gen.graph(shape));
    auto set = generator_set(c);
    auto t = thresholds_of(set);
    CHECK(t.a >= 1);
    CHECK(t.b >= t.a);
    CHECK(scan_a(set) == t.a);
    CHECK(scan_b_prime(set) == t.b_prime);
    for (Integer d = t.a; d <= t.a + 3; ++d) {
      for (const auto& g : set.entries) CHECK(self_intersection(g.divisor).at(d) >= 0);
    }
    if (t.b_prime >= 1) {
      bool witness = false;
      for (const auto& g : set.entries) {
        if (!g.is_f_star() && anticanonical_product(g.divisor).at(t.b_prime - 1) <= 0) witness = true;
      }
      CHECK(witness);
    }
  }
}

TEST_CASE("closed form for free points") {
  auto e = closed_form_free_points(load("fix_e.json"));
  CHECK(e.a == 8);
  CHECK(e.b_prime == 7);
  CHECK(e.b_prime_paper == 6);

  for (std::size_t n = 1; n <= 6; ++n) {
    Configuration c(free_chains({n}, {"f"}));
    CHECK(closed_form_free_points(c).a == static_cast<long>(n));
    CHECK(a_of_apg(c) == static_cast<long>(n));
  }
  Configuration two(free_chains({2, 3}, {"f", "g"}));
  CHECK(closed_form_free_points(two).a == 5);
  CHECK(a_of_apg(two) == 5);
  Configuration shared(free_chains({2, 3}, {"f", "f"}));
  CHECK(closed_form_free_points(shared).a == 3);
  CHECK(a_of_apg(shared) == 3);

  CHECK_THROWS_AS(closed_form_free_points(load("fix_a.json")), HypothesesNotMet);
  CHECK_THROWS_AS(closed_form_free_points(load("fix_b.json")), HypothesesNotMet);
}

TEST_CASE("closed form for one constellation") {
  auto b = closed_form_constellation(load("fix_b.json"));
  CHECK(b.a == 1);
  CHECK(b.b_prime == 3);
  auto t = compute_thresholds(load("fix_b.json"));
  CHECK(b.a == t.a);
  CHECK(b.b_prime == t.b_prime);

  auto s = closed_form_constellation(load("single_point.json"));
  CHECK(s.a == 1);
  CHECK(s.b_prime == 0);
  CHECK_THROWS_AS(closed_form_constellation(load("fix_a.json")), HypothesesNotMet);
}

TEST_CASE("bound over arrow placements") {
  auto single = a_of_pg(load_graph("single_point.json"), {10, 100'000, true, {}});
  CHECK(single.a == 1);
  CHECK(single.placements == 2);

  auto two = free_chains({2}, {"f"});
  auto r = a_of_pg(two, {10, 100'000, true, {}});
  CHECK(r.a == 2);
  CHECK(r.placements == 5);
  CHECK(Configuration(r.best).graph().points[1].on_fiber == false);

  auto eight = a_of_pg(load_graph("fix_e.json"));
  CHECK(eight.a == 8);
  CHECK(eight.placements == 256);
  for (const auto& p : eight.best.points) CHECK_FALSE(p.on_special_section);

  CHECK_THROWS_AS(a_of_pg(load_graph("fix_e.json"), {7, 100'000, false, {}}), CapExceeded);
  CHECK_THROWS_AS(a_of_pg(load_graph("fix_e.json"), {10, 100, false, {}}), CapExceeded);
}

TEST_CASE("random forests: distinct fibers dominate coarser partitions") {
  GraphGen gen(71);
  GraphShape shape;
  shape.max_points = 5;
  shape.max_constellations = 3;
  for (int trial = 0; trial < 40; ++trial) {
    auto g = gen.graph(shape);
    auto fast = a_of_pg(g);
    auto full = a_of_pg(g, {10, 1'000'000, true, {}});
    CHECK(fast.a == full.a);
    CHECK(fast.placements <= full.placements);
    CHECK(a_of_apg(Configuration(fast.best)) == fast.a);
  }
}

TEST_CASE("report") {
  auto b = load("fix_b.json");
  auto v = report(b, 2);
  CHECK(v.ne_minimal == Tristate::Yes);
  CHECK(v.mori_dream == Tristate::Silent);
  CHECK(v.extremal_rays.size() == 18);
  v = report(b, 3);
  CHECK(v.mori_dream == Tristate::Yes);

  auto a = load("fix_a.json");
  v = report(a, 2);
  CHECK(v.ne_minimal == Tristate::Yes);
  CHECK(v.mori_dream == Tristate::Yes);
  CHECK(v.nef_generators.size() == 16);
  v = report(a, 1);
  CHECK(v.ne_minimal == Tristate::Silent);
  CHECK(v.mori_dream == Tristate::Silent);
  CHECK(v.extremal_rays.empty());

  auto d = load("fix_d.json");
  v = report(d, 1, true);
  CHECK(v.p2_mode);
  CHECK(v.ne_minimal == Tristate::Yes);
  CHECK(v.mori_dream == Tristate::Yes);
  CHECK_THROWS_AS(report(d, 2, true), std::invalid_argument);
  CHECK_THROWS_AS(report(d, -1), std::invalid_argument);

  auto e = load("fix_e.json");
  CHECK(report(e, 8).mori_dream == Tristate::Yes);
  CHECK(report(e, 7).mori_dream == Tristate::Silent);

  auto text = describe(report(b, 2));
  CHECK(text.find("NE: minimally generated") != std::string::npos);
  CHECK(text.find("MDS: criterion silent") != std::string::npos);
}

}  // TEST_SUITE
