#pragma once

// Generators of the dual of the cone spanned by the strict transforms of the
// fibers through blown-up points, of M0 and of the exceptional curves:
// F*, M*, one Lambda per chain prefix and one W per choice of stubs on at
// least two distinct fibers.

#include "apg/arith.hpp"
#include "apg/lattice.hpp"
#include "apg/proximity_graph.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace apg {

struct GeneratorLabel {
  enum class Kind { FStar, MStar, Lambda, W };

  Kind kind = Kind::FStar;
  std::vector<ChainPosition> terms;  // one for Lambda, one per fiber for W
  std::vector<Integer> z;            // W only, primitive

  /// "F*", "M*", "Λ(2,3)", "W((1,2),(2,3))" with 1-based chain indices.
  std::string to_string() const;
  bool operator==(const GeneratorLabel&) const = default;
};

struct Generator {
  PicardClass divisor;
  std::vector<GeneratorLabel> labels;

  bool is_f_star() const { return divisor.b == 0; }
  std::string name() const;  // labels joined with " = "
};

struct GeneratorSet {
  std::vector<Generator> entries;
  std::uint64_t w_candidates = 0;

  std::size_t count() const { return entries.size(); }
  const Generator* find(const std::string& label) const;
};

struct EnumerationLimits {
  std::size_t max_fibers = 12;
  std::uint64_t max_w = 5'000'000;
  /// Record every (chain, k) spelling of a generator, not just the first one.
  bool all_labels = true;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a_{j,k} F* + b_{j,k} M* - sum mult_{p_{j,l}}(phi_{j,k}) E_{j,l}*
PicardClass lambda_divisor(const Configuration& config, std::size_t chain, std::size_t k);

/// Smallest positive z with z_1 b_1 = ... = z_s b_s, i.e. z_h = lcm(b) / b_h.
/// Throws std::invalid_argument on empty input or non-positive entries.
std::vector<Integer> primitive_z(std::span<const Integer> b_values);

/// Number of W candidates, saturating at UINT64_MAX.
std::uint64_t w_candidate_count(const Configuration& config);

/// W divisors in canonical order (by size, then lexicographically by fiber and
/// stub). A stub is a point on the fiber, standing for every chain prefix
/// ending there. Throws CapExceeded past the limits; empty for one fiber.
std::vector<Generator> enumerate_w(const Configuration& config, const EnumerationLimits& limits = {});

/// F*, M*, all Lambda, all W, deduplicated by coefficients; each class keeps
/// every label that produced it.
GeneratorSet generator_set(const Configuration& config, const EnumerationLimits& limits = {});

}  // namespace apg
