#pragma once

// Incidence structures: dense 0-based point ids, lines stored as point
// sets, canonical forms with stable digests, and the INC text format.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hj/errors.hpp"

namespace hj {

using PointId = std::uint32_t;
using LineId = std::uint32_t;

// Structures with at most this many points (and lines) keep packed bit
// rows for intersection queries; larger ones fall back to sorted merges.
inline constexpr std::uint32_t kBitsetThreshold = 4096;

class IncidenceStructure {
 public:
  /// Validates and stores a structure. Each line is normalized to a sorted
  /// point set. Rejects empty structures, empty lines, out-of-range ids and
  /// duplicate lines. Line order is preserved as given.
  IncidenceStructure(std::uint32_t num_points,
                     std::vector<std::vector<PointId>> lines,
                     std::map<PointId, std::string> point_labels = {},
                     std::map<LineId, std::string> line_labels = {},
                     std::uint32_t bitset_threshold = kBitsetThreshold);

  std::uint32_t num_points() const { return num_points_; }
  std::uint32_t num_lines() const { return static_cast<std::uint32_t>(lines_.size()); }

  const std::vector<PointId>& line(LineId g) const;
  const std::vector<std::vector<PointId>>& lines() const { return lines_; }
  const std::vector<LineId>& lines_of_point(PointId p) const;

  bool incident(PointId p, LineId g) const;
  std::uint32_t degree(PointId p) const;

  /// |line(g) ∩ line(h)|; bit rows when available, sorted merge otherwise.
  std::uint32_t intersection_size(LineId g, LineId h) const;
  /// Number of lines through both p and q.
  std::uint32_t common_line_count(PointId p, PointId q) const;

  const std::map<PointId, std::string>& point_labels() const { return point_labels_; }
  const std::map<LineId, std::string>& line_labels() const { return line_labels_; }
  /// Label if present, decimal id otherwise.
  std::string point_name(PointId p) const;

  void check_point(PointId p) const;
  void check_line(LineId g) const;

 private:
  std::uint32_t num_points_ = 0;
  std::vector<std::vector<PointId>> lines_;
  std::vector<std::vector<LineId>> point_lines_;
  std::map<PointId, std::string> point_labels_;
  std::map<LineId, std::string> line_labels_;

  std::size_t point_words_ = 0;  // words per line bit row; 0 = disabled
  std::size_t line_words_ = 0;   // words per point bit row; 0 = disabled
  std::vector<std::uint64_t> line_bits_;
  std::vector<std::uint64_t> point_bits_;
};

/// All line ids through p, ascending.
std::vector<LineId> lines_through(const IncidenceStructure& s, PointId p);

/// Exact intersection of two distinct lines (sorted). Rejects g == h.
std::vector<PointId> common_points(const IncidenceStructure& s, LineId g, LineId h);

/// All lines through both of two distinct points (sorted). Rejects p == q.
std::vector<LineId> common_lines(const IncidenceStructure& s, PointId p, PointId q);

struct CanonicalForm {
  IncidenceStructure structure;  // lines sorted lexicographically
  std::string digest;            // stable hash of the sorted incidence data
};

/// Deterministic sorted form. The digest covers point count and the sorted
/// line sets only, not labels, so relabeled copies of the same incidence
/// data compare equal.
CanonicalForm canonicalize(const IncidenceStructure& s);

/// Digest of the canonical form without materializing it.
std::string structure_digest(const IncidenceStructure& s);

/// True when both structures have the same point count and the same set of
/// lines, ignoring line order and labels.
bool equal_lines(const IncidenceStructure& a, const IncidenceStructure& b);

/// Canonical INC text (lines in lexicographic order, LF endings, optional
/// trailing labels block).
std::string emit_structure(const IncidenceStructure& s);

/// Parses INC text. "#" comment lines and blank lines are ignored. Raises
/// FormatError with a 1-based line number on malformed input.
IncidenceStructure parse_structure(const std::string& text);

}  // namespace hj
