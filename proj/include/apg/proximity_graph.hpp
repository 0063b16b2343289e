#pragma once

// Arrowed proximity graphs: a proximity forest of infinitely near points over a
// Hirzebruch surface, decorated with the points crossed by the strict
// transforms of the fibers and of the special section M0.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apg {

using PointId = std::string;
using FiberId = std::string;

struct PointNode {
  PointId id;
  std::optional<PointId> parent;  // absent exactly for constellation origins
  std::vector<PointId> proximate_to;
  bool on_fiber = false;
  bool on_special_section = false;

  bool operator==(const PointNode&) const = default;
};

struct ArrowedProximityGraph {
  std::string name;
  std::vector<PointNode> points;
  std::map<PointId, FiberId> fiber_of_origin;

  bool operator==(const ArrowedProximityGraph&) const = default;
};

namespace rule {
inline constexpr const char* kEmptyGraph = "empty-graph";
inline constexpr const char* kDuplicateId = "duplicate-id";
inline constexpr const char* kDanglingReference = "dangling-reference";
inline constexpr const char* kParentCycle = "parent-cycle";
inline constexpr const char* kOriginProximity = "origin-proximity";
inline constexpr const char* kParentNotProximate = "parent-not-proximate";
inline constexpr const char* kProximityArity = "proximity-arity";
inline constexpr const char* kProximityNotAncestor = "proximity-not-ancestor";
inline constexpr const char* kProximitySegment = "proximity-segment";
inline constexpr const char* kSatelliteDuplicate = "satellite-duplicate";
inline constexpr const char* kMissingFiber = "missing-fiber";
inline constexpr const char* kFiberOnNonOrigin = "fiber-on-non-origin";
inline constexpr const char* kOriginFiberFlag = "origin-fiber-flag";
inline constexpr const char* kFlagOnSatellite = "flag-on-satellite";
inline constexpr const char* kFlagChain = "flag-chain";
inline constexpr const char* kFiberSectionOverlap = "fiber-section-overlap";
inline constexpr const char* kSectionPerFiber = "special-section-per-fiber";
}  // namespace rule

struct Violation {
  std::string code;
  std::vector<PointId> points;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& code) const;
};

/// Checks every structural rule of the graph and reports all violations; it
/// never stops at the first problem.
ValidationReport validate(const ArrowedProximityGraph& graph);

/// Marks every origin as lying on its fiber.
void normalize_origin_flags(ArrowedProximityGraph& graph);

class InvalidGraph : public std::runtime_error {
 public:
  explicit InvalidGraph(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

enum class PointKind { Origin, Free, Satellite };

enum class SmoothCurve { Fiber, SpecialSection };

/// Chain of the divisorial valuation defined by one maximal point: the
/// root-to-maximal path of the parent forest.
struct Chain {
  std::vector<std::size_t> points;  // indices into Configuration, origin first
  std::size_t constellation = 0;
  std::size_t fiber = 0;

  std::size_t length() const { return points.size(); }
};

/// Position of a point on a chain: chain index (0-based) and prefix length k
/// (1-based, so the point is chains[chain].points[k - 1]).
struct ChainPosition {
  std::size_t chain = 0;
  std::size_t k = 0;
  auto operator<=>(const ChainPosition&) const = default;
};

/// A validated graph with its derived structure. Immutable.
///
/// Points keep the order of the input list. Constellations are ordered by the
/// position of their origin, fibers by their first origin, and chains by the
/// position of their maximal point.
class Configuration {
 public:
  /// Normalizes origin flags and validates; throws InvalidGraph.
  explicit Configuration(ArrowedProximityGraph graph);

  const ArrowedProximityGraph& graph() const { return graph_; }
  std::size_t size() const { return graph_.points.size(); }

  const PointId& id(std::size_t p) const { return graph_.points[p].id; }
  std::size_t index_of(const PointId& id) const;  // throws std::out_of_range

  std::optional<std::size_t> parent(std::size_t p) const { return parent_[p]; }
  const std::vector<std::size_t>& proximate_to(std::size_t p) const { return proximate_[p]; }
  const std::vector<std::size_t>& children(std::size_t p) const { return children_[p]; }
  bool is_proximate(std::size_t q, std::size_t p) const;  // q -> p
  std::size_t level(std::size_t p) const { return level_[p]; }
  PointKind kind(std::size_t p) const { return kind_[p]; }
  bool flagged(std::size_t p, SmoothCurve curve) const;
  bool is_maximal(std::size_t p) const { return children_[p].empty(); }

  std::size_t constellation_of(std::size_t p) const { return constellation_of_[p]; }
  const std::vector<std::size_t>& origins() const { return origins_; }
  std::size_t constellation_count() const { return origins_.size(); }
  std::size_t fiber_of_constellation(std::size_t c) const { return fiber_of_constellation_[c]; }
  std::size_t fiber_of_point(std::size_t p) const;

  const std::vector<FiberId>& fibers() const { return fiber_ids_; }
  std::size_t fiber_count() const { return fiber_ids_.size(); }

  const std::vector<Chain>& chains() const { return chains_; }
  const Chain& chain(std::size_t j) const { return chains_.at(j); }
  std::vector<std::size_t> maximal_points() const;

  /// Every (chain, k) label a point carries, in chain order.
  const std::vector<ChainPosition>& positions(std::size_t p) const { return positions_[p]; }

  /// Number of leading points two chains share.
  std::size_t shared_prefix(std::size_t j1, std::size_t j2) const;

  /// Every point of the constellations whose origin lies on fiber f (flagged
  /// or not), in point order.
  std::vector<std::size_t> points_on_fiber(std::size_t f) const;

 private:
  ArrowedProximityGraph graph_;
  std::map<PointId, std::size_t> index_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> proximate_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> level_;
  std::vector<PointKind> kind_;
  std::vector<std::size_t> constellation_of_;
  std::vector<std::size_t> origins_;
  std::vector<std::size_t> fiber_of_constellation_;
  std::vector<FiberId> fiber_ids_;
  std::vector<Chain> chains_;
  std::vector<std::vector<ChainPosition>> positions_;
};

/// One chain per maximal point; see Configuration for ordering.
std::vector<Chain> derive_chains(const ArrowedProximityGraph& graph);

}  // namespace apg
