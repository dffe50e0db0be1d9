#pragma once

// The complete ledger of free choices made by the constructions: which
// parallel class of each point-neighbourhood serves each base line, how OA
// columns are labeled by base points, and which class line carries which
// OA symbol. Every construction is replayable from this ledger.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hj/incidence.hpp"
#include "hj/seeds.hpp"

namespace hj {

struct ConstructionChoices {
  /// [base point] -> (base line id -> parallel class index of that point's
  /// neighbourhood plane). A bijection over the lines through the point.
  std::vector<std::map<LineId, std::uint32_t>> class_assignment;

  /// [base line] -> base point labeling each OA column, in column order.
  std::vector<std::vector<PointId>> column_points;

  /// [base line][column] -> (neighbourhood line id -> OA symbol), covering
  /// exactly the lines of the class assigned to that (point, base line).
  std::vector<std::vector<std::map<LineId, std::uint32_t>>> symbol_assignment;

  std::optional<std::uint64_t> seed;

  std::string digest() const;
};

/// Neighbourhood plane for base point p under the broadcast rule
/// (a single-element list applies everywhere).
const AffinePlane& neighbourhood_for(const std::vector<AffinePlane>& neighbourhoods, PointId p);
const OrthogonalArray& oa_for(const std::vector<OrthogonalArray>& oas, LineId l);

/// Deterministic ledger: lines through each base point, in ascending line
/// order, receive parallel classes in canonical class order; OA columns are
/// labeled by ascending point id; symbols follow lexicographic line order.
ConstructionChoices canonical_choices(const IncidenceStructure& base,
                                      const std::vector<AffinePlane>& neighbourhoods,
                                      const std::vector<OrthogonalArray>& oas);

/// Seeded pseudo-random bijections; identical seeds give identical ledgers
/// on every platform.
ConstructionChoices random_choices(const IncidenceStructure& base,
                                   const std::vector<AffinePlane>& neighbourhoods,
                                   const std::vector<OrthogonalArray>& oas,
                                   std::uint64_t seed);

/// Validates a ledger against its seeds. Raises SizeMismatch for shape
/// problems and InvalidChoices for broken bijections or a parallel class
/// reused across two base lines through the same point.
void validate_choices(const IncidenceStructure& base,
                      const std::vector<AffinePlane>& neighbourhoods,
                      const std::vector<OrthogonalArray>& oas,
                      const ConstructionChoices& choices);

std::string emit_choices(const ConstructionChoices& choices);
ConstructionChoices parse_choices(const std::string& text);

}  // namespace hj
