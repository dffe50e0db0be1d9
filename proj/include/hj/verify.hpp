#pragma once

// Decides, from incidence data alone, whether a structure is a (t,r)
// projective or affine Hjelmslev plane and whether it is 2-uniform.
// Computes neighbour partitions, quotients, point-neighbourhood
// restrictions, parameters and isomorphism-screening fingerprints.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hj/incidence.hpp"
#include "hj/report.hpp"

namespace hj {

struct Partition {
  /// Classes ordered by smallest member, members ascending.
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> class_of;
};

struct NeighbourPartition {
  Partition points;  // P ~ Q iff they share at least two lines
  Partition lines;   // g ~ h iff they share at least two points
};

/// Computes both neighbour partitions. The relations are generated by the
/// "at least two in common" pairs plus reflexivity; transitivity is checked,
/// never forced. Raises NotTransitive with a witness triple otherwise.
NeighbourPartition neighbour_partition(const IncidenceStructure& s, unsigned threads = 1);

struct Quotient {
  std::vector<std::uint32_t> point_map;  // point -> image point (its class)
  std::vector<std::uint32_t> line_map;   // line -> image line (after collapse)
  IncidenceStructure image;
};

/// Collapses neighbour classes. A class point is incident with a class line
/// iff some member lies on some member; duplicate image lines collapse.
Quotient quotient(const IncidenceStructure& s, const NeighbourPartition& n);

struct Restriction {
  PointId center = 0;
  std::vector<PointId> points;                 // the neighbour class of center
  std::vector<std::vector<PointId>> lines;     // deduplicated restrictions, >= 2 points
  std::vector<std::uint32_t> multiplicities;   // lines of the plane per restricted line

  /// The restriction as a standalone structure with dense point ids.
  /// Raises EmptyStructure when there are no multi-point restricted lines.
  IncidenceStructure as_structure() const;
};

/// Point-neighbourhood restriction at p. Empty and one-point intersections
/// are excluded from the line set and from the multiplicity counts.
Restriction restriction(const IncidenceStructure& s, PointId p, unsigned threads = 1);

/// Projective Hjelmslev plane check; on pass reports parameters (t, r).
VerificationReport verify_ph(const IncidenceStructure& s, unsigned threads = 1);

/// Affine Hjelmslev plane check; on pass reports parameters (t, r).
VerificationReport verify_ah(const IncidenceStructure& s, unsigned threads = 1);

/// 2-uniformity: every point-neighbourhood restriction is an affine plane of
/// order t with a constant line multiplicity. Ordinary planes (t = 1) pass
/// as the separately reported 1-uniform case.
VerificationReport verify_2_uniform(const IncidenceStructure& s, unsigned threads = 1);

/// (t, r) from three cross-checked derivations: class sizes, intra-class
/// line intersections and the line-size decomposition. The plane kind is
/// inferred from the existence of a disjoint line pair. Raises Inconsistent
/// when the derivations disagree.
std::pair<std::uint32_t, std::uint32_t> parameters(const IncidenceStructure& s,
                                                   const NeighbourPartition& n);

struct Fingerprint {
  std::uint32_t num_points = 0;
  std::uint32_t num_lines = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> line_sizes;      // (size, count)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> point_degrees;   // (degree, count)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> point_classes;   // (size, count)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> line_classes;    // (size, count)
  std::vector<std::pair<std::uint32_t, std::uint64_t>> intersections;   // (size, pairs)

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

/// Isomorphism-invariant summary. Equal fingerprints are necessary but not
/// sufficient for isomorphism. Neighbour "classes" here are the connected
/// components of the neighbour graphs, so the fingerprint is defined for
/// structures that are not Hjelmslev planes as well.
Fingerprint fingerprint(const IncidenceStructure& s);

}  // namespace hj
