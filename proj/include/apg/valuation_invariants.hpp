#pragma once

// Maximal contact values of the divisorial valuation of a chain, its gcd
// ladder, and two executable checks on the anticanonical products of Lambda.

#include "apg/arith.hpp"
#include "apg/proximity_graph.hpp"

#include <stdexcept>
#include <vector>

namespace apg {

struct ValuationInvariants {
  std::vector<Integer> beta_bar;  // beta_bar_0 .. beta_bar_{g+1}
  std::vector<Integer> e;         // e_0 .. e_g
  std::vector<Integer> N;         // N_0 = 1, N_1 .. N_g
  std::vector<Integer> beta;      // characteristic exponents beta_0 .. beta_g
  std::size_t g = 0;              // satellite blocks
  std::size_t free_tail = 0;      // free points after the last satellite point
};

class NonCharacteristicBlocks : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Curvettes at the free point just before each satellite block give
/// beta_bar_1..g; beta_bar_{g+1} is the sum of squared multiplicities.
/// Throws NonCharacteristicBlocks when the gcd ladder or the free tail check
/// fails.
ValuationInvariants maximal_contact_values(const Configuration& config, std::size_t chain);

struct SumIdentity {
  Integer lhs;  // sum of multiplicities
  Integer rhs;  // beta_bar_{g+1} + sum beta_bar_w (1 - N_w) + beta_bar_0 - 1
  bool holds() const { return lhs == rhs; }
};

SumIdentity verify_sum_identity(const Configuration& config, std::size_t chain);

/// If every final Lambda_{j,n_j} has positive product with -K_X at delta, so
/// does every Lambda_{j,k}. True when the premise fails.
bool anticanonical_monotonicity_check(const Configuration& config, const Integer& delta);

}  // namespace apg
