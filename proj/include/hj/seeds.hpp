#pragma once

// Seed objects for the Hjelmslev constructions: projective planes over
// finite fields, affine planes with materialized parallel classes, and
// strength-2 orthogonal arrays, plus the derivations between them.

#include <cstdint>
#include <string>
#include <vector>

#include "hj/galois.hpp"
#include "hj/incidence.hpp"
#include "hj/report.hpp"

namespace hj {

struct ProjectivePlane {
  IncidenceStructure structure;
  std::uint32_t order;

  /// Validates an arbitrary structure as a projective plane and derives its
  /// order. Raises NotProjective on failure.
  static ProjectivePlane from_structure(IncidenceStructure s);
};

struct AffinePlane {
  IncidenceStructure structure;
  std::uint32_t order;
  /// m+1 classes of m line ids. Classes are ordered by their
  /// lexicographically smallest line, lines within a class likewise.
  std::vector<std::vector<LineId>> parallel_classes;

  /// Validates and derives order and parallel classes. Raises NotAffine.
  static AffinePlane from_structure(IncidenceStructure s);
};

class OrthogonalArray {
 public:
  /// v^2 rows of k symbols each, symbols in [0, v). Raises ShapeError on a
  /// wrong row count, empty columns or out-of-range entries.
  OrthogonalArray(std::uint32_t columns, std::uint32_t symbols,
                  std::vector<std::vector<std::uint32_t>> rows);

  std::uint32_t columns() const { return columns_; }
  std::uint32_t symbols() const { return symbols_; }
  std::uint32_t rows() const { return symbols_ * symbols_; }
  std::uint32_t at(std::uint32_t row, std::uint32_t col) const {
    return cells_[static_cast<std::size_t>(row) * columns_ + col];
  }
  std::vector<std::uint32_t> row(std::uint32_t r) const;

  OrthogonalArray without_last_column() const;
  OrthogonalArray with_column(const std::vector<std::uint32_t>& column) const;

 private:
  std::uint32_t columns_ = 0, symbols_ = 0;
  std::vector<std::uint32_t> cells_;
};

/// PG(2,m) from homogeneous coordinates over GF(m).
ProjectivePlane projective_plane(const GaloisField& field);
/// Convenience: builds the field via GaloisField::of_order(m).
ProjectivePlane projective_plane(std::uint32_t m);

/// Removes line l and all its points; parallel classes are recovered from
/// the deleted point each surviving line met l in. Lines of the result are
/// numbered in lexicographic order.
AffinePlane affine_from_projective(const ProjectivePlane& p, LineId l);

/// AG(2,m) = PG(2,m) minus line 0.
AffinePlane affine_plane(std::uint32_t m);

/// Re-adds one point per parallel class plus the line at infinity; the new
/// points are appended after the affine points in class order and the line
/// at infinity is the last line.
ProjectivePlane projectivize(const AffinePlane& a);

/// Groups the lines of a validated affine plane by disjointness. Raises
/// NotAffine when the two-lines-share-a-class-iff-disjoint relation is not
/// an equivalence or the class shape is wrong.
std::vector<std::vector<LineId>> parallel_classes(const IncidenceStructure& affine);

/// True iff every line of class s meets every line of class t in exactly
/// one point.
bool check_orthogonal_classes(const AffinePlane& a, std::uint32_t s, std::uint32_t t);

/// OA(2, m+1, m): one row per point, one column per parallel class; the
/// entry is the index within the class of the line through the point.
OrthogonalArray oa_from_affine(const AffinePlane& a);

/// Strength-2 check: every ordered pair occurs exactly once in every column
/// pair, and every symbol occurs `symbols` times per column.
VerificationReport validate_oa(const OrthogonalArray& oa);

/// Extends a valid OA(2,m,m) by one column. Rows that pairwise agree in no
/// column must form m disjoint m-cliques; the new column numbers those
/// cliques by smallest row index. Raises NotCompletable otherwise.
OrthogonalArray complete_oa(const OrthogonalArray& oa);

VerificationReport validate_projective_plane(const IncidenceStructure& s);
VerificationReport validate_affine_plane(const IncidenceStructure& s);

/// OA text format. Canonical emit sorts rows lexicographically.
std::string emit_oa(const OrthogonalArray& oa);
OrthogonalArray parse_oa(const std::string& text);

}  // namespace hj
