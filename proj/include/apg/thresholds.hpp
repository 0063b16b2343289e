#pragma once

// Degree thresholds of the Hirzebruch surface above which the cone of curves
// is finite polyhedral and minimally generated (a), the anticanonical class
// is positive on every nef generator (b'), and X is a Mori dream space
// (b = max(a, b')).

#include "apg/arith.hpp"
#include "apg/dual_cone.hpp"
#include "apg/proximity_graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apg {

/// max(1, ceil(x)): smallest positive integer >= x.
Integer ceil_star(const Rational& x);

/// Smallest nonnegative integer strictly greater than x (0 when x < 0).
Integer strict_pos_threshold(const Rational& x);

/// ceil(x) for x >= 0, else 0. Understates strict_pos_threshold by one at
/// nonnegative integers.
Integer ceil_plus(const Rational& x);

struct ThresholdWitness {
  std::string generator;  // label string of the generator
  Rational self_ratio;    // (sum c^2 - 2ab) / b^2
  Integer a_value;        // ceil_star(self_ratio)
  Rational anti_ratio;    // (sum c - 2a) / b - 2
  Integer b_prime_value;  // strict_pos_threshold(anti_ratio)
  Integer b_prime_paper;  // ceil_plus(anti_ratio)
};

struct Thresholds {
  Integer a = 1;
  Integer b_prime = 0;        // strict positivity
  Integer b_prime_paper = 0;  // ceil_plus variant
  Integer b = 1;              // max(a, b_prime)
  Integer b_paper = 1;        // max(a, b_prime_paper)
  std::vector<ThresholdWitness> witnesses;  // every generator except F*
};

/// Folds the witness table over a generator set (F* excluded).
Thresholds thresholds_of(const GeneratorSet& generators);

Thresholds compute_thresholds(const Configuration& config, const EnumerationLimits& limits = {});
Integer a_of_apg(const Configuration& config, const EnumerationLimits& limits = {});
Integer b_prime_of_apg(const Configuration& config, bool paper_ceil = false, const EnumerationLimits& limits = {});
Integer b_of_apg(const Configuration& config, const EnumerationLimits& limits = {});

class HypothesesNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClosedForm {
  Integer a;
  Integer b_prime;
  Integer b_prime_paper;
};

/// All points free, M0 through no blown-up point, fibers only through origins.
/// The best family takes the longest chain of one constellation per fiber.
ClosedForm closed_form_free_points(const Configuration& config);

/// A single constellation: only the final Lambda of every chain matters.
ClosedForm closed_form_constellation(const Configuration& config);

struct PgLimits {
  std::size_t max_origins = 10;
  std::uint64_t max_placements = 100'000;
  /// Also enumerate coarser fiber partitions of the origins. Without it only
  /// the all-distinct partition is visited, which dominates the others.
  bool exhaustive = false;
  EnumerationLimits generators{12, 5'000'000, false};
};

struct PgBound {
  Integer a;
  std::uint64_t placements = 0;
  ArrowedProximityGraph best;  // a placement attaining the maximum
};

/// Maximum of a(APG) over every valid arrow placement on the bare proximity
/// forest of `forest` (its flags and fibers are ignored).
PgBound a_of_pg(const ArrowedProximityGraph& forest, const PgLimits& limits = {});

enum class Tristate { Yes, Silent };

struct Verdict {
  Integer delta;
  bool p2_mode = false;
  Tristate ne_minimal = Tristate::Silent;
  Tristate mori_dream = Tristate::Silent;
  bool anticanonical_big = false;  // -K_X positive on every nef generator
  Thresholds thresholds;
  std::vector<std::string> extremal_rays;   // of NE(X), when ne_minimal
  std::vector<std::string> nef_generators;  // when ne_minimal
};

/// Throws std::invalid_argument for delta < 0, or p2_mode with delta != 1.
Verdict report(const Configuration& config, const Integer& delta, bool p2_mode = false,
               const EnumerationLimits& limits = {});

/// Human-readable summary of a verdict.
std::string describe(const Verdict& verdict, bool paper_ceil = false);

}  // namespace apg
