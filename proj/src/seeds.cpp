#include "hj/seeds.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <string>

namespace hj {

// ---------------------------------------------------------------- OA type

OrthogonalArray::OrthogonalArray(std::uint32_t columns, std::uint32_t symbols,
                                 std::vector<std::vector<std::uint32_t>> rows)
    : columns_(columns), symbols_(symbols) {
  if (columns == 0) fail(Errc::ShapeError, "orthogonal array needs at least one column");
  if (symbols == 0) fail(Errc::ShapeError, "orthogonal array needs at least one symbol");
  std::size_t expected = static_cast<std::size_t>(symbols) * symbols;
  if (rows.size() != expected)
    fail(Errc::ShapeError, "expected " + std::to_string(expected) + " rows, got " +
                               std::to_string(rows.size()));
  cells_.reserve(expected * columns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns)
      fail(Errc::ShapeError, "row " + std::to_string(r) + " has " +
                                 std::to_string(rows[r].size()) + " entries, expected " +
                                 std::to_string(columns));
    for (std::uint32_t v : rows[r]) {
      if (v >= symbols)
        fail(Errc::ShapeError, "row " + std::to_string(r) + " contains symbol " +
                                   std::to_string(v) + " >= " + std::to_string(symbols));
      cells_.push_back(v);
    }
  }
}

std::vector<std::uint32_t> OrthogonalArray::row(std::uint32_t r) const {
  auto first = cells_.begin() + static_cast<std::ptrdiff_t>(r) * columns_;
  return std::vector<std::uint32_t>(first, first + columns_);
}

OrthogonalArray OrthogonalArray::without_last_column() const {
  if (columns_ < 2) fail(Errc::ShapeError, "cannot drop the only column");
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(this->rows());
  for (std::uint32_t r = 0; r < this->rows(); ++r) {
    auto full = row(r);
    full.pop_back();
    rows.push_back(std::move(full));
  }
  return OrthogonalArray(columns_ - 1, symbols_, std::move(rows));
}

OrthogonalArray OrthogonalArray::with_column(const std::vector<std::uint32_t>& column) const {
  if (column.size() != rows()) fail(Errc::ShapeError, "new column has wrong length");
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(rows());
  for (std::uint32_t r = 0; r < rows(); ++r) {
    auto full = row(r);
    full.push_back(column[r]);
    out.push_back(std::move(full));
  }
  return OrthogonalArray(columns_ + 1, symbols_, std::move(out));
}

// ------------------------------------------------------------- validators

VerificationReport validate_projective_plane(const IncidenceStructure& s) {
  for (PointId p = 0; p < s.num_points(); ++p)
    for (PointId q = p + 1; q < s.num_points(); ++q) {
      std::uint32_t n = s.common_line_count(p, q);
      if (n == 0) return VerificationReport::reject("point-pair-coverage", {p, q});
      if (n > 1) return VerificationReport::reject("point-pair-uniqueness", {p, q});
    }
  for (LineId g = 0; g < s.num_lines(); ++g)
    for (LineId h = g + 1; h < s.num_lines(); ++h) {
      std::uint32_t n = s.intersection_size(g, h);
      if (n == 0) return VerificationReport::reject("line-pair-intersection", {g, h});
      if (n > 1) return VerificationReport::reject("line-pair-uniqueness", {g, h});
    }
  // A quadrangle exists iff two lines each carry two points besides their
  // meet. Valid once the exactly-one axioms above hold.
  for (LineId g = 0; g < s.num_lines(); ++g)
    for (LineId h = g + 1; h < s.num_lines(); ++h) {
      auto meet = common_points(s, g, h);
      if (s.line(g).size() < meet.size() + 2) continue;
      if (s.line(h).size() < meet.size() + 2) continue;
      return VerificationReport::ok();
    }
  return VerificationReport::reject("quadrangle", {});
}

VerificationReport validate_affine_plane(const IncidenceStructure& s) {
  for (PointId p = 0; p < s.num_points(); ++p)
    for (PointId q = p + 1; q < s.num_points(); ++q) {
      std::uint32_t n = s.common_line_count(p, q);
      if (n == 0) return VerificationReport::reject("point-pair-coverage", {p, q});
      if (n > 1) return VerificationReport::reject("point-pair-uniqueness", {p, q});
    }
  for (LineId g = 0; g < s.num_lines(); ++g) {
    const auto& pts = s.line(g);
    for (PointId p = 0; p < s.num_points(); ++p) {
      if (std::binary_search(pts.begin(), pts.end(), p)) continue;
      std::uint32_t parallels = 0;
      for (LineId h : s.lines_of_point(p))
        if (s.intersection_size(g, h) == 0) ++parallels;
      if (parallels == 0) return VerificationReport::reject("parallel-axiom-existence", {p, g});
      if (parallels > 1) return VerificationReport::reject("parallel-axiom-uniqueness", {p, g});
    }
  }
  for (LineId g = 0; g < s.num_lines(); ++g) {
    if (s.line(g).size() < 2) continue;
    for (PointId p = 0; p < s.num_points(); ++p)
      if (!s.incident(p, g)) return VerificationReport::ok();
  }
  return VerificationReport::reject("triangle", {});
}

namespace {

std::string first_violation_text(const VerificationReport& rep) {
  if (rep.violations.empty()) return "unknown violation";
  std::string out = rep.violations.front().axiom;
  for (auto id : rep.violations.front().ids) out += " " + std::to_string(id);
  return out;
}

}  // namespace

ProjectivePlane ProjectivePlane::from_structure(IncidenceStructure s) {
  auto rep = validate_projective_plane(s);
  if (!rep.pass) fail(Errc::NotProjective, "not a projective plane: " + first_violation_text(rep));
  std::uint32_t order = static_cast<std::uint32_t>(s.line(0).size()) - 1;
  return ProjectivePlane{std::move(s), order};
}

AffinePlane AffinePlane::from_structure(IncidenceStructure s) {
  auto rep = validate_affine_plane(s);
  if (!rep.pass) fail(Errc::NotAffine, "not an affine plane: " + first_violation_text(rep));
  std::uint32_t order = static_cast<std::uint32_t>(s.line(0).size());
  auto classes = hj::parallel_classes(s);
  return AffinePlane{std::move(s), order, std::move(classes)};
}

// ------------------------------------------------------------- generation

ProjectivePlane projective_plane(const GaloisField& field) {
  std::uint32_t q = field.order();
  std::uint32_t n = q * q + q + 1;

  // Homogeneous triples normalized to a leading 1: (0,0,1), (0,1,z), (1,y,z).
  std::vector<std::array<std::uint32_t, 3>> triples;
  triples.reserve(n);
  triples.push_back({0, 0, 1});
  for (std::uint32_t z = 0; z < q; ++z) triples.push_back({0, 1, z});
  for (std::uint32_t y = 0; y < q; ++y)
    for (std::uint32_t z = 0; z < q; ++z) triples.push_back({1, y, z});

  auto dot = [&](const std::array<std::uint32_t, 3>& a, const std::array<std::uint32_t, 3>& b) {
    std::uint32_t s = field.mul(a[0], b[0]);
    s = field.add(s, field.mul(a[1], b[1]));
    s = field.add(s, field.mul(a[2], b[2]));
    return s;
  };

  std::vector<std::vector<PointId>> lines(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    lines[g].reserve(q + 1);
    for (std::uint32_t p = 0; p < n; ++p)
      if (dot(triples[g], triples[p]) == 0) lines[g].push_back(p);
  }
  return ProjectivePlane{IncidenceStructure(n, std::move(lines)), q};
}

ProjectivePlane projective_plane(std::uint32_t m) {
  return projective_plane(GaloisField::of_order(m));
}

AffinePlane affine_from_projective(const ProjectivePlane& p, LineId l) {
  const auto& s = p.structure;
  s.check_line(l);
  std::uint32_t m = p.order;

  const auto& removed = s.line(l);
  std::vector<std::uint32_t> remap(s.num_points(), UINT32_MAX);
  std::uint32_t next = 0;
  for (PointId q = 0; q < s.num_points(); ++q)
    if (!std::binary_search(removed.begin(), removed.end(), q)) remap[q] = next++;

  struct Pending {
    std::vector<PointId> pts;
    PointId anchor;  // deleted point of l this line passed through
  };
  std::vector<Pending> pending;
  pending.reserve(s.num_lines() - 1);
  for (LineId g = 0; g < s.num_lines(); ++g) {
    if (g == l) continue;
    Pending item;
    item.anchor = UINT32_MAX;
    for (PointId q : s.line(g)) {
      if (remap[q] == UINT32_MAX)
        item.anchor = q;
      else
        item.pts.push_back(remap[q]);
    }
    pending.push_back(std::move(item));
  }
  std::sort(pending.begin(), pending.end(),
            [](const Pending& a, const Pending& b) { return a.pts < b.pts; });

  std::map<PointId, std::vector<LineId>> by_anchor;
  std::vector<std::vector<PointId>> lines;
  lines.reserve(pending.size());
  for (LineId g = 0; g < pending.size(); ++g) {
    by_anchor[pending[g].anchor].push_back(g);
    lines.push_back(std::move(pending[g].pts));
  }

  std::map<PointId, std::string> labels;
  for (const auto& [q, label] : s.point_labels())
    if (remap[q] != UINT32_MAX) labels[remap[q]] = label;

  std::vector<std::vector<LineId>> classes;
  classes.reserve(by_anchor.size());
  for (auto& [anchor, ids] : by_anchor) classes.push_back(std::move(ids));
  // Lines are lexicographically numbered, so the smallest id in a class is
  // also its lexicographically smallest line.
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<LineId>& a, const std::vector<LineId>& b) {
              return a.front() < b.front();
            });

  IncidenceStructure structure(s.num_points() - (m + 1), std::move(lines), std::move(labels));
  return AffinePlane{std::move(structure), m, std::move(classes)};
}

AffinePlane affine_plane(std::uint32_t m) {
  return affine_from_projective(projective_plane(m), 0);
}

ProjectivePlane projectivize(const AffinePlane& a) {
  const auto& s = a.structure;
  std::uint32_t m = a.order;
  std::uint32_t n = s.num_points();

  std::vector<std::uint32_t> class_of_line(s.num_lines(), UINT32_MAX);
  for (std::uint32_t c = 0; c < a.parallel_classes.size(); ++c)
    for (LineId g : a.parallel_classes[c]) class_of_line[g] = c;

  std::vector<std::vector<PointId>> lines;
  lines.reserve(s.num_lines() + 1);
  for (LineId g = 0; g < s.num_lines(); ++g) {
    auto pts = s.line(g);
    pts.push_back(n + class_of_line[g]);
    lines.push_back(std::move(pts));
  }
  std::vector<PointId> infinity(m + 1);
  for (std::uint32_t c = 0; c <= m; ++c) infinity[c] = n + c;
  lines.push_back(std::move(infinity));

  IncidenceStructure structure(n + m + 1, std::move(lines), s.point_labels());
  return ProjectivePlane{std::move(structure), m};
}

// -------------------------------------------------------- parallel classes

std::vector<std::vector<LineId>> parallel_classes(const IncidenceStructure& s) {
  std::uint32_t n = s.num_lines();

  // R-row of g: all lines disjoint from g, plus g itself.
  std::vector<std::vector<LineId>> row(n);
  for (LineId g = 0; g < n; ++g) row[g].push_back(g);
  for (LineId g = 0; g < n; ++g)
    for (LineId h = g + 1; h < n; ++h)
      if (s.intersection_size(g, h) == 0) {
        row[g].push_back(h);
        row[h].push_back(g);
      }
  for (auto& r : row) std::sort(r.begin(), r.end());

  for (LineId g = 0; g < n; ++g)
    for (LineId h : row[g])
      if (row[h] != row[g])
        fail(Errc::NotAffine, "parallelism is not an equivalence: lines " + std::to_string(g) +
                                  " and " + std::to_string(h) + " disagree");

  std::vector<std::vector<LineId>> classes;
  std::vector<bool> seen(n, false);
  for (LineId g = 0; g < n; ++g) {
    if (seen[g]) continue;
    for (LineId h : row[g]) seen[h] = true;
    classes.push_back(row[g]);
  }

  std::uint32_t m = static_cast<std::uint32_t>(s.line(0).size());
  if (classes.size() != static_cast<std::size_t>(m) + 1)
    fail(Errc::NotAffine, "expected " + std::to_string(m + 1) + " parallel classes, found " +
                              std::to_string(classes.size()));
  for (const auto& cls : classes) {
    if (cls.size() != m)
      fail(Errc::NotAffine, "parallel class has " + std::to_string(cls.size()) +
                                " lines, expected " + std::to_string(m));
    std::size_t covered = 0;
    for (LineId g : cls) covered += s.line(g).size();
    if (covered != s.num_points())
      fail(Errc::NotAffine, "parallel class does not partition the point set");
  }

  // Canonical order: classes by lexicographically smallest line, lines
  // within a class likewise.
  auto lex_less = [&](LineId x, LineId y) { return s.line(x) < s.line(y); };
  for (auto& cls : classes) std::sort(cls.begin(), cls.end(), lex_less);
  std::sort(classes.begin(), classes.end(),
            [&](const std::vector<LineId>& x, const std::vector<LineId>& y) {
              return s.line(x.front()) < s.line(y.front());
            });
  return classes;
}

bool check_orthogonal_classes(const AffinePlane& a, std::uint32_t s, std::uint32_t t) {
  if (s >= a.parallel_classes.size() || t >= a.parallel_classes.size())
    fail(Errc::IdOutOfRange, "parallel class index out of range");
  for (LineId g : a.parallel_classes[s])
    for (LineId h : a.parallel_classes[t])
      if (g != h && a.structure.intersection_size(g, h) != 1) return false;
  if (s == t) return false;  // a class never crosses itself
  return true;
}

// ------------------------------------------------------------ OA bridges

OrthogonalArray oa_from_affine(const AffinePlane& a) {
  const auto& s = a.structure;
  std::uint32_t m = a.order;
  std::vector<std::vector<std::uint32_t>> rows(s.num_points());
  for (PointId p = 0; p < s.num_points(); ++p) {
    rows[p].reserve(a.parallel_classes.size());
    for (const auto& cls : a.parallel_classes) {
      std::uint32_t symbol = UINT32_MAX;
      for (std::uint32_t i = 0; i < cls.size(); ++i)
        if (s.incident(p, cls[i])) {
          symbol = i;
          break;
        }
      if (symbol == UINT32_MAX)
        fail(Errc::NotAffine, "parallel class misses point " + std::to_string(p));
      rows[p].push_back(symbol);
    }
  }
  return OrthogonalArray(m + 1, m, std::move(rows));
}

VerificationReport validate_oa(const OrthogonalArray& oa) {
  std::uint32_t k = oa.columns(), v = oa.symbols();
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j) {
      std::vector<std::uint32_t> count(static_cast<std::size_t>(v) * v, 0);
      for (std::uint32_t r = 0; r < oa.rows(); ++r)
        ++count[oa.at(r, i) * v + oa.at(r, j)];
      for (std::uint32_t a = 0; a < v; ++a)
        for (std::uint32_t b = 0; b < v; ++b) {
          if (count[a * v + b] == 0)
            return VerificationReport::reject("pair-missing", {i, j, a, b});
          if (count[a * v + b] > 1)
            return VerificationReport::reject("pair-duplicate", {i, j, a, b});
        }
    }
  for (std::uint32_t j = 0; j < k; ++j) {
    std::vector<std::uint32_t> count(v, 0);
    for (std::uint32_t r = 0; r < oa.rows(); ++r) ++count[oa.at(r, j)];
    for (std::uint32_t a = 0; a < v; ++a)
      if (count[a] != v) return VerificationReport::reject("column-regularity", {j, a});
  }
  return VerificationReport::ok();
}

OrthogonalArray complete_oa(const OrthogonalArray& oa) {
  std::uint32_t m = oa.symbols();
  if (oa.columns() != m)
    fail(Errc::NotCompletable, "expected a square OA(2,m,m), got " +
                                   std::to_string(oa.columns()) + " columns over " +
                                   std::to_string(m) + " symbols");
  auto rep = validate_oa(oa);
  if (!rep.pass) fail(Errc::NotCompletable, "input fails strength-2 validation");

  std::uint32_t n = oa.rows();
  auto agree_nowhere = [&](std::uint32_t r, std::uint32_t s) {
    for (std::uint32_t j = 0; j < m; ++j)
      if (oa.at(r, j) == oa.at(s, j)) return false;
    return true;
  };

  // Closed agree-nowhere neighbourhoods must coincide on exactly m groups
  // of m rows each; those groups are the symbol classes of the new column.
  std::vector<std::vector<std::uint32_t>> nbhd(n);
  for (std::uint32_t r = 0; r < n; ++r) nbhd[r].push_back(r);
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t s = r + 1; s < n; ++s)
      if (agree_nowhere(r, s)) {
        nbhd[r].push_back(s);
        nbhd[s].push_back(r);
      }
  for (auto& v : nbhd) std::sort(v.begin(), v.end());

  std::vector<std::uint32_t> column(n, UINT32_MAX);
  std::uint32_t next_symbol = 0;
  for (std::uint32_t r = 0; r < n; ++r) {
    if (column[r] != UINT32_MAX) continue;
    const auto& group = nbhd[r];
    if (group.size() != m)
      fail(Errc::NotCompletable, "row " + std::to_string(r) + " lies in an agree-nowhere group of " +
                                     std::to_string(group.size()) + " rows, expected " +
                                     std::to_string(m));
    for (std::uint32_t s : group) {
      if (nbhd[s] != group)
        fail(Errc::NotCompletable, "agree-nowhere groups of rows " + std::to_string(r) + " and " +
                                       std::to_string(s) + " differ");
      column[s] = next_symbol;
    }
    ++next_symbol;
  }
  if (next_symbol != m)
    fail(Errc::NotCompletable,
         "found " + std::to_string(next_symbol) + " groups, expected " + std::to_string(m));
  return oa.with_column(column);
}

// ------------------------------------------------------------- OA format

std::string emit_oa(const OrthogonalArray& oa) {
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(oa.rows());
  for (std::uint32_t r = 0; r < oa.rows(); ++r) rows.push_back(oa.row(r));
  std::sort(rows.begin(), rows.end());
  std::string out = "OA 1\ncolumns " + std::to_string(oa.columns()) + "\nsymbols " +
                    std::to_string(oa.symbols()) + "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_tokens(const std::string& row) {
  std::vector<std::string> out;
  std::istringstream in(row);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

OrthogonalArray parse_oa(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> rows;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++lineno;
    std::string row = text.substr(start, end - start);
    if (!row.empty() && row.back() == '\r') row.pop_back();
    std::size_t first = row.find_first_not_of(" \t");
    if (first != std::string::npos && row[first] != '#') rows.emplace_back(lineno, row);
    if (end == text.size()) break;
    start = end + 1;
  }

  auto format_fail = [](std::size_t no, const std::string& msg) -> void {
    fail(Errc::FormatError, "line " + std::to_string(no) + ": " + msg);
  };

  std::size_t pos = 0;
  auto next = [&]() -> const std::pair<std::size_t, std::string>& {
    if (pos >= rows.size()) fail(Errc::FormatError, "unexpected end of input");
    return rows[pos++];
  };

  {
    const auto& [no, row] = next();
    if (row != "OA 1") format_fail(no, "expected header 'OA 1'");
  }
  auto read_u32_field = [&](const std::string& keyword) {
    const auto& [no, row] = next();
    auto toks = split_tokens(row);
    if (toks.size() != 2 || toks[0] != keyword) format_fail(no, "expected '" + keyword + " <n>'");
    for (char c : toks[1])
      if (c < '0' || c > '9') format_fail(no, "expected an integer");
    return static_cast<std::uint32_t>(std::stoul(toks[1]));
  };
  std::uint32_t k = read_u32_field("columns");
  std::uint32_t v = read_u32_field("symbols");
  if (v == 0) fail(Errc::FormatError, "symbols must be positive");

  std::vector<std::vector<std::uint32_t>> data;
  data.reserve(static_cast<std::size_t>(v) * v);
  for (std::uint32_t r = 0; r < v * v; ++r) {
    const auto& [no, row] = next();
    auto toks = split_tokens(row);
    if (toks.size() != k) format_fail(no, "expected " + std::to_string(k) + " entries");
    std::vector<std::uint32_t> entries;
    entries.reserve(k);
    for (const auto& t : toks) {
      for (char c : t)
        if (c < '0' || c > '9') format_fail(no, "expected an integer, got '" + t + "'");
      unsigned long value = std::stoul(t);
      if (value >= v) format_fail(no, "symbol " + t + " out of range (symbols " + std::to_string(v) + ")");
      entries.push_back(static_cast<std::uint32_t>(value));
    }
    data.push_back(std::move(entries));
  }
  if (pos != rows.size()) format_fail(rows[pos].first, "trailing content after rows");
  return OrthogonalArray(k, v, std::move(data));
}

}  // namespace hj
