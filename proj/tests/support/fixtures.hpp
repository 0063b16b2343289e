#pragma once

#include "apg/io.hpp"

#include <string>

#ifndef APG_FIXTURE_DIR
#error "APG_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace apg::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(APG_FIXTURE_DIR) + "/" + name;
}

inline ArrowedProximityGraph load_graph(const std::string& name) {
  return parse_apg(read_file(fixture_path(name)));
}

inline Configuration load(const std::string& name) {
  return Configuration(load_graph(name));
}

inline const char* kFixtures[] = {"fix_a.json", "fix_b.json", "fix_d.json", "fix_e.json", "single_point.json"};

// Resolution of y^3 = x^4: p2 -> p1, p3 -> {p2, p1}, p4 -> {p3, p1}.
inline ArrowedProximityGraph cusp_y3_x4() {
  ArrowedProximityGraph g;
  g.name = "y3=x4";
  g.points = {
      {"p1", std::nullopt, {}, true, false},
      {"p2", "p1", {"p1"}, false, false},
      {"p3", "p2", {"p2", "p1"}, false, false},
      {"p4", "p3", {"p3", "p1"}, false, false},
  };
  g.fiber_of_origin = {{"p1", "f1"}};
  return g;
}

}  // namespace apg::test
