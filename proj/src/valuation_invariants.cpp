#include "apg/valuation_invariants.hpp"

#include "apg/dual_cone.hpp"
#include "apg/lattice.hpp"
#include "apg/multiplicities.hpp"

namespace apg {

ValuationInvariants maximal_contact_values(const Configuration& config, std::size_t chain) {
  const auto& ch = config.chain(chain);
  const auto n = ch.length();
  auto m = germ_multiplicities(config, chain, n);

  // Index (1-based) of the point preceding each satellite block.
  std::vector<std::size_t> before;
  std::size_t last_satellite = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (config.kind(ch.points[k - 1]) != PointKind::Satellite) continue;
    if (k == 1 || config.kind(ch.points[k - 2]) != PointKind::Satellite) before.push_back(k - 1);
    last_satellite = k;
  }

  ValuationInvariants v;
  v.g = before.size();
  v.free_tail = n - last_satellite;
  if (v.g == 0) v.free_tail = n - 1;
  v.beta_bar.push_back(m.at(1));
  for (auto f : before) {
    auto curvette = germ_multiplicities(config, chain, f);
    Integer s = 0;
    for (std::size_t l = 1; l <= f; ++l) s += m.at(l) * curvette.at(l);
    v.beta_bar.push_back(s);
  }
  v.beta_bar.push_back(m.sum_of_squares());

  v.e.push_back(v.beta_bar[0]);
  v.N.push_back(1);
  for (std::size_t w = 1; w <= v.g; ++w) {
    v.e.push_back(gcd(v.e.back(), v.beta_bar[w]));
    if (v.e[w] >= v.e[w - 1]) {
      throw NonCharacteristicBlocks("chain " + std::to_string(chain + 1) + ": block " + std::to_string(w) +
                                    " does not lower the gcd");
    }
    v.N.push_back(v.e[w - 1] / v.e[w]);
  }
  if (v.e.back() != 1) {
    throw NonCharacteristicBlocks("chain " + std::to_string(chain + 1) + ": gcd ladder ends at " +
                                  to_string(v.e.back()));
  }
  if (v.g >= 1 && v.beta_bar[v.g + 1] - v.N[v.g] * v.beta_bar[v.g] != static_cast<unsigned long>(v.free_tail)) {
    throw NonCharacteristicBlocks("chain " + std::to_string(chain + 1) + ": free tail mismatch");
  }

  v.beta.push_back(v.beta_bar[0]);
  for (std::size_t w = 1; w <= v.g; ++w) {
    v.beta.push_back(v.beta[w - 1] + v.beta_bar[w] - v.N[w - 1] * v.beta_bar[w - 1]);
  }
  return v;
}

SumIdentity verify_sum_identity(const Configuration& config, std::size_t chain) {
  auto v = maximal_contact_values(config, chain);
  auto m = germ_multiplicities(config, chain, config.chain(chain).length());
  SumIdentity s;
  s.lhs = m.sum();
  s.rhs = v.beta_bar[v.g + 1] + v.beta_bar[0] - 1;
  for (std::size_t w = 0; w <= v.g; ++w) s.rhs += v.beta_bar[w] * (1 - v.N[w]);
  return s;
}

bool anticanonical_monotonicity_check(const Configuration& config, const Integer& delta) {
  for (std::size_t j = 0; j < config.chains().size(); ++j) {
    auto n = config.chain(j).length();
    if (anticanonical_product(lambda_divisor(config, j, n)).at(delta) <= 0) return true;
  }
  for (std::size_t j = 0; j < config.chains().size(); ++j) {
    for (std::size_t k = 1; k <= config.chain(j).length(); ++k) {
      if (anticanonical_product(lambda_divisor(config, j, k)).at(delta) <= 0) return false;
    }
  }
  return true;
}

}  // namespace apg
