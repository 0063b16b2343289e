#include "apg/dual_cone.hpp"
#include "apg/lattice.hpp"
#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

#include <doctest.h>

using namespace apg;
using namespace apg::test;

namespace {

PicardClass random_class(GraphGen& gen, std::size_t n) {
  auto r = [&] { return Integer(static_cast<long>(gen.pick(0, 14)) - 7); };
  PicardClass d = PicardClass::zero(n);
  d.a = r();
  d.b = r();
  for (auto& c : d.c) c = r();
  return d;
}

// Sum of E*_id over ids.
PicardClass e_sum(const Configuration& c, std::initializer_list<const char*> ids) {
  auto d = PicardClass::zero(c.size());
  for (auto id : ids) d = d + PicardClass::e_star(c.size(), c.index_of(id));
  return d;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("basis pairings") {
  const std::size_t n = 3;
  auto F = PicardClass::f_star(n), M = PicardClass::m_star(n), E = PicardClass::e_star(n, 1);
  CHECK(pairing(F, M) == DeltaLinear{1, 0});
  CHECK(pairing(M, M) == DeltaLinear{0, 1});
  CHECK(pairing(F, F) == DeltaLinear{0, 0});
  CHECK(pairing(E, E) == DeltaLinear{-1, 0});
  CHECK(pairing(E, PicardClass::e_star(n, 2)) == DeltaLinear{0, 0});
  CHECK(pairing(E, M) == DeltaLinear{0, 0});
  CHECK_THROWS_AS(pairing(F, PicardClass::f_star(4)), std::invalid_argument);
}

TEST_CASE("delta linear text") {
  CHECK(DeltaLinear{-12, 9}.to_string() == "9δ - 12");
  CHECK(DeltaLinear{2, 1}.to_string() == "δ + 2");
  CHECK(DeltaLinear{-1, 0}.to_string() == "-1");
  CHECK(DeltaLinear{0, 2}.to_string() == "2δ");
  CHECK(DeltaLinear{0, 0}.to_string() == "0");
  CHECK(DeltaLinear{3, -1}.to_string() == "-δ + 3");
  CHECK(DeltaLinear{-22, 10}.at(3) == 8);
}

TEST_CASE("fixture self-intersections and anticanonical products") {
  auto a = load("fix_a.json");
  auto gens = generator_set(a);
  CHECK(self_intersection(gens.find("Λ(1,2)")->divisor) == DeltaLinear{-2, 1});
  CHECK(self_intersection(gens.find("Λ(1,1)")->divisor) == DeltaLinear{-1, 1});
  CHECK(self_intersection(gens.find("F*")->divisor) == DeltaLinear{0, 0});
  CHECK(self_intersection(gens.find("W((1,2),(2,3))")->divisor) == DeltaLinear{-12, 9});
  CHECK(self_intersection(gens.find("W((1,2),(2,2))")->divisor) == DeltaLinear{-6, 4});
  CHECK(anticanonical_product(gens.find("W((1,2),(2,2))")->divisor) == DeltaLinear{0, 2});
  CHECK(anticanonical_product(gens.find("W((1,2),(2,3))")->divisor) == DeltaLinear{0, 3});
  CHECK(anticanonical_product(PicardClass::m_star(a.size())) == DeltaLinear{2, 1});

  auto b = load("fix_b.json");
  CHECK(anticanonical_product(lambda_divisor(b, 0, 16)) == DeltaLinear{-22, 10});
  CHECK(self_intersection(lambda_divisor(b, 0, 16)) == DeltaLinear{300 - 390, 100});
}

TEST_CASE("strict transforms") {
  auto a = load("fix_a.json");
  auto st = strict_transform_classes(a);
  REQUIRE(st.fibers.size() == 2);
  CHECK(st.fibers[1].at(0) == PicardClass::f_star(6) - e_sum(a, {"q3", "q4"}));
  CHECK(st.fibers[0].at(0) == PicardClass::f_star(6) - e_sum(a, {"q1"}));
  CHECK(st.special_section.at(2) ==
        PicardClass::m_star(6) - PicardClass::f_star(6) * 2 - e_sum(a, {"q3", "q6"}));
  CHECK(st.special_section.a == DeltaLinear{0, -1});
  // E_{q4} = E*_{q4} - E*_{q5}; unflagged maximal point E_{q2} = E*_{q2}.
  auto e4 = PicardClass::zero(6);
  e4.c[a.index_of("q4")] = -1;
  e4.c[a.index_of("q5")] = 1;
  CHECK(st.exceptional[a.index_of("q4")].at(5) == e4);
  CHECK(st.exceptional[a.index_of("q2")].at(5) == PicardClass::e_star(6, a.index_of("q2")));
  auto e3 = st.exceptional[a.index_of("q3")].at(0);
  CHECK(e3.c[a.index_of("q3")] == -1);
  CHECK(e3.c[a.index_of("q4")] == 1);
  CHECK(e3.c[a.index_of("q5")] == 1);
  CHECK(e3.c[a.index_of("q6")] == 1);
  CHECK(st.all().size() == 9);
  // E_l^2 = -1 - #{points proximate to l}
  CHECK(pairing(e3, e3) == DeltaLinear{-4, 0});
}

TEST_CASE("anticanonical class") {
  auto k = anticanonical_class(4);
  CHECK(k.a == DeltaLinear{2, -1});
  CHECK(k.b == 2);
  for (const auto& c : k.c) CHECK(c == 1);
  // K^2 = 8 - N on any blowup of a Hirzebruch surface.
  for (long d = 0; d <= 5; ++d) CHECK(pairing(k.at(d), k).at(d) == 8 - 4);
}

TEST_CASE("random classes: bilinear, symmetric, code paths agree") {
  GraphGen gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = gen.pick(0, 6);
    auto x = random_class(gen, n), y = random_class(gen, n), z = random_class(gen, n);
    Integer t = static_cast<long>(gen.pick(0, 6)) - 3;
    CHECK(pairing(x, y) == pairing(y, x));
    CHECK(pairing(x + y, z) == pairing(x, z) + pairing(y, z));
    CHECK(pairing(x * t, y) == DeltaLinear{pairing(x, y).constant * t, pairing(x, y).slope * t});
    CHECK(self_intersection(x) == pairing(x, x));
    CHECK(anticanonical_product(x) == pairing(x, anticanonical_class(n)));
    CHECK(pairing(x, SymbolicClass::from(y)) == pairing(x, y));
  }
}

TEST_CASE("random graphs: generators pair delta-free and nonnegatively with strict transforms") {
  GraphGen gen(31);
  GraphShape shape;
  shape.max_points = 9;
  for (int trial = 0; trial < 100; ++trial) {
    Configuration c(gen.graph(shape));
    auto st = strict_transform_classes(c).all();
    for (const auto& g : generator_set(c).entries) {
      for (const auto& s : st) {
        auto p = pairing(g.divisor, s);
        CHECK(p.slope == 0);
        CHECK(p.constant >= 0);
      }
    }
  }
}

}  // TEST_SUITE
