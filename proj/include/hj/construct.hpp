#pragma once

// Constructions of 2-uniform Hjelmslev planes from a base plane, one affine
// neighbourhood plane per base point and one strength-2 orthogonal array
// per base line, plus the truncation and extension transforms.

#include <cstdint>
#include <optional>
#include <vector>

#include "hj/choices.hpp"
#include "hj/incidence.hpp"
#include "hj/seeds.hpp"

namespace hj {

enum class PlaneKind { projective, affine };

/// Everything needed to replay (and extend) a construction.
struct Provenance {
  PlaneKind base_kind = PlaneKind::projective;
  std::uint32_t order = 0;
  IncidenceStructure base;
  std::vector<std::vector<LineId>> base_parallel_classes;  // affine bases only
  std::vector<AffinePlane> neighbourhoods;                 // length 1 = broadcast
  std::vector<OrthogonalArray> oas;                        // length 1 = broadcast
  ConstructionChoices choices;
};

struct HjelmslevPlane {
  IncidenceStructure structure;
  PlaneKind kind = PlaneKind::projective;
  std::uint32_t t = 0;  // neighbouring points per line
  std::uint32_t r = 0;  // quotient order
  std::vector<std::vector<PointId>> point_classes;  // by base point
  std::vector<std::vector<LineId>> line_classes;    // by base line
  std::optional<Provenance> provenance;
};

/// Composite point ids are base*t^2 + local; composite labels are
/// "(base,local)" built from the seed labels (decimal ids when unlabeled).
PointId composite_point(PointId base, std::uint32_t order, PointId local);

/// 2-uniform projective Hjelmslev plane of a projective base of order m,
/// using one OA(2,m+1,m) per base line.
HjelmslevPlane construct_ph(const ProjectivePlane& base,
                            const std::vector<AffinePlane>& neighbourhoods,
                            const std::vector<OrthogonalArray>& oas,
                            const ConstructionChoices& choices);

/// 2-uniform affine Hjelmslev plane of an affine base of order m, using one
/// OA(2,m,m) per base line.
HjelmslevPlane construct_ah(const AffinePlane& base,
                            const std::vector<AffinePlane>& neighbourhoods,
                            const std::vector<OrthogonalArray>& oas,
                            const ConstructionChoices& choices);

/// Removes one line-neighbourhood and all incident points, turning a
/// projective-kind plane into an affine-kind one.
HjelmslevPlane truncate_ph(const HjelmslevPlane& h, std::uint32_t line_class);

/// Extends a plane built by construct_ah back to a projective-kind plane:
/// the base affine plane gains its points at infinity and line at infinity,
/// every per-line OA is completed by one column, and the infinity
/// neighbourhoods are wired in canonically. Truncating the result at the
/// infinity line class returns the input plane exactly.
HjelmslevPlane extend_ah(const HjelmslevPlane& h,
                         const std::vector<AffinePlane>& infinity_neighbourhoods,
                         const OrthogonalArray& infinity_oa);

}  // namespace hj
