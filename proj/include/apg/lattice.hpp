#pragma once

// Picard lattice of X in the basis F*, M*, E_1*, ..., E_N*, with
// F*^2 = 0, F*.M* = 1, M*^2 = delta, E_l*.E_m* = -[l == m] and E* orthogonal
// to F*, M*. The degree delta of the Hirzebruch surface stays symbolic.

#include "apg/arith.hpp"
#include "apg/proximity_graph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace apg {

/// constant + slope * delta
struct DeltaLinear {
  Integer constant = 0;
  Integer slope = 0;

  Integer at(const Integer& delta) const { return constant + slope * delta; }
  bool operator==(const DeltaLinear&) const = default;
  DeltaLinear operator+(const DeltaLinear& o) const { return {constant + o.constant, slope + o.slope}; }
  DeltaLinear operator-(const DeltaLinear& o) const { return {constant - o.constant, slope - o.slope}; }
  DeltaLinear operator-() const { return {-constant, -slope}; }
  /// e.g. "9δ - 12", "δ + 2", "-1"
  std::string to_string() const;
};

/// D = a F* + b M* - sum_l c_l E_l*, c indexed by configuration point.
struct PicardClass {
  Integer a = 0;
  Integer b = 0;
  std::vector<Integer> c;

  static PicardClass zero(std::size_t n) { return {0, 0, std::vector<Integer>(n, Integer(0))}; }
  static PicardClass f_star(std::size_t n);
  static PicardClass m_star(std::size_t n);
  static PicardClass e_star(std::size_t n, std::size_t l);

  std::size_t size() const { return c.size(); }
  Integer sum_c() const;
  Integer sum_c_squared() const;
  /// (a, b, c_1, ..., c_N)
  std::vector<Integer> coordinates() const;

  PicardClass operator+(const PicardClass& o) const;
  PicardClass operator-(const PicardClass& o) const;
  PicardClass operator*(const Integer& t) const;

  bool operator==(const PicardClass&) const = default;
  std::strong_ordering operator<=>(const PicardClass& o) const;
};

/// A class whose F* coefficient depends on delta (strict transform of M0,
/// anticanonical class); same sign convention as PicardClass.
struct SymbolicClass {
  DeltaLinear a;
  Integer b = 0;
  std::vector<Integer> c;

  PicardClass at(const Integer& delta) const { return {a.at(delta), b, c}; }
  static SymbolicClass from(const PicardClass& d) { return {{d.a, 0}, d.b, d.c}; }
};

/// Throws std::invalid_argument when the classes live over different graphs.
DeltaLinear pairing(const PicardClass& d1, const PicardClass& d2);
DeltaLinear pairing(const PicardClass& d, const SymbolicClass& s);

/// 2ab - sum c^2 + b^2 delta
DeltaLinear self_intersection(const PicardClass& d);

/// D . (-K_X) = 2a + 2b - sum c + b delta
DeltaLinear anticanonical_product(const PicardClass& d);

/// -K_X = (2 - delta) F* + 2 M* - sum_l E_l*
SymbolicClass anticanonical_class(std::size_t n);

struct StrictTransforms {
  std::vector<SymbolicClass> exceptional;  // E_l = E_l* - sum_{mu -> l} E_mu*, per point
  std::vector<SymbolicClass> fibers;       // F~_i per fiber id
  SymbolicClass special_section;           // M~0 = M* - delta F* - sum_{M0 points} E*

  /// Fibers, then M~0, then the exceptional curves.
  std::vector<SymbolicClass> all() const;
};

StrictTransforms strict_transform_classes(const Configuration& config);

}  // namespace apg
