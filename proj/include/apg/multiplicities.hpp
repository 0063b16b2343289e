#pragma once

// Multiplicity vectors of curvettes along a chain (proximity equalities) and
// their local intersection numbers with the fiber and the special section
// (Noether formula).

#include "apg/arith.hpp"
#include "apg/proximity_graph.hpp"

#include <cstddef>
#include <vector>

namespace apg {

/// Multiplicities of the curvette of E_{j,k} at p_{j,1}, ..., p_{j,k}.
/// Points beyond the prefix implicitly carry multiplicity 0.
struct MultVector {
  std::size_t chain = 0;
  std::size_t k = 0;
  std::vector<std::size_t> points;  // p_{j,1..k} as configuration indices
  std::vector<Integer> values;

  const Integer& at(std::size_t lambda) const { return values.at(lambda - 1); }  // 1-based
  Integer sum() const;
  Integer sum_of_squares() const;
};

struct ChainIntersections {
  Integer a;  // with the special section M0
  Integer b;  // with the fiber through the chain origin
};

/// Backward proximity recursion: m_k = 1, m_l = sum of m_mu over mu <= k with
/// p_mu -> p_l. Throws std::out_of_range unless 1 <= k <= n_j.
MultVector germ_multiplicities(const Configuration& config, std::size_t chain, std::size_t k);

/// 0/1 multiplicities of the strict transform of the fiber (or M0) along the
/// whole chain.
std::vector<int> smooth_flag_multiplicities(const Configuration& config, std::size_t chain, SmoothCurve curve);

ChainIntersections intersection_numbers(const Configuration& config, std::size_t chain, std::size_t k);

}  // namespace apg
