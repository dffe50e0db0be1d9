#include "hj/incidence.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <sstream>

#include "hj/digest.hpp"

namespace hj {

namespace {

std::size_t words_for(std::uint32_t bits) { return (static_cast<std::size_t>(bits) + 63) / 64; }

std::uint32_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint32_t n = 0;
  for (std::size_t i = 0; i < words; ++i) n += static_cast<std::uint32_t>(std::popcount(a[i] & b[i]));
  return n;
}

std::uint32_t merge_count(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::uint32_t n = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

IncidenceStructure::IncidenceStructure(std::uint32_t num_points,
                                       std::vector<std::vector<PointId>> lines,
                                       std::map<PointId, std::string> point_labels,
                                       std::map<LineId, std::string> line_labels,
                                       std::uint32_t bitset_threshold)
    : num_points_(num_points),
      lines_(std::move(lines)),
      point_labels_(std::move(point_labels)),
      line_labels_(std::move(line_labels)) {
  if (lines_.empty()) fail(Errc::EmptyStructure, "structure has no lines");

  std::map<std::vector<PointId>, LineId> seen;
  for (LineId g = 0; g < lines_.size(); ++g) {
    auto& pts = lines_[g];
    if (pts.empty()) fail(Errc::EmptyLine, "line " + std::to_string(g) + " is empty");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.back() >= num_points_)
      fail(Errc::PointOutOfRange, "line " + std::to_string(g) + " references point " +
                                      std::to_string(pts.back()) + " >= " + std::to_string(num_points_));
    auto [it, inserted] = seen.emplace(pts, g);
    if (!inserted)
      fail(Errc::DuplicateLine,
           "lines " + std::to_string(it->second) + " and " + std::to_string(g) + " are equal sets");
  }

  for (auto& [p, _] : point_labels_)
    if (p >= num_points_) fail(Errc::PointOutOfRange, "label for point " + std::to_string(p));
  for (auto& [g, _] : line_labels_)
    if (g >= lines_.size()) fail(Errc::IdOutOfRange, "label for line " + std::to_string(g));

  point_lines_.assign(num_points_, {});
  for (LineId g = 0; g < lines_.size(); ++g)
    for (PointId p : lines_[g]) point_lines_[p].push_back(g);

  if (num_points_ <= bitset_threshold) {
    point_words_ = words_for(num_points_);
    line_bits_.assign(point_words_ * lines_.size(), 0);
    for (LineId g = 0; g < lines_.size(); ++g)
      for (PointId p : lines_[g]) line_bits_[point_words_ * g + p / 64] |= 1ull << (p % 64);
  }
  if (lines_.size() <= bitset_threshold) {
    line_words_ = words_for(num_lines());
    point_bits_.assign(line_words_ * num_points_, 0);
    for (PointId p = 0; p < num_points_; ++p)
      for (LineId g : point_lines_[p]) point_bits_[line_words_ * p + g / 64] |= 1ull << (g % 64);
  }
}

void IncidenceStructure::check_point(PointId p) const {
  if (p >= num_points_) fail(Errc::PointOutOfRange, "point " + std::to_string(p));
}

void IncidenceStructure::check_line(LineId g) const {
  if (g >= lines_.size()) fail(Errc::IdOutOfRange, "line " + std::to_string(g));
}

const std::vector<PointId>& IncidenceStructure::line(LineId g) const {
  check_line(g);
  return lines_[g];
}

const std::vector<LineId>& IncidenceStructure::lines_of_point(PointId p) const {
  check_point(p);
  return point_lines_[p];
}

bool IncidenceStructure::incident(PointId p, LineId g) const {
  check_point(p);
  check_line(g);
  const auto& pts = lines_[g];
  return std::binary_search(pts.begin(), pts.end(), p);
}

std::uint32_t IncidenceStructure::degree(PointId p) const {
  check_point(p);
  return static_cast<std::uint32_t>(point_lines_[p].size());
}

std::uint32_t IncidenceStructure::intersection_size(LineId g, LineId h) const {
  check_line(g);
  check_line(h);
  if (point_words_ > 0)
    return popcount_and(&line_bits_[point_words_ * g], &line_bits_[point_words_ * h], point_words_);
  return merge_count(lines_[g], lines_[h]);
}

std::uint32_t IncidenceStructure::common_line_count(PointId p, PointId q) const {
  check_point(p);
  check_point(q);
  if (line_words_ > 0)
    return popcount_and(&point_bits_[line_words_ * p], &point_bits_[line_words_ * q], line_words_);
  return merge_count(point_lines_[p], point_lines_[q]);
}

std::string IncidenceStructure::point_name(PointId p) const {
  check_point(p);
  auto it = point_labels_.find(p);
  return it != point_labels_.end() ? it->second : std::to_string(p);
}

std::vector<LineId> lines_through(const IncidenceStructure& s, PointId p) {
  return s.lines_of_point(p);
}

std::vector<PointId> common_points(const IncidenceStructure& s, LineId g, LineId h) {
  s.check_line(g);
  s.check_line(h);
  if (g == h) fail(Errc::IdOutOfRange, "common_points requires two distinct lines");
  std::vector<PointId> out;
  std::set_intersection(s.line(g).begin(), s.line(g).end(), s.line(h).begin(), s.line(h).end(),
                        std::back_inserter(out));
  return out;
}

std::vector<LineId> common_lines(const IncidenceStructure& s, PointId p, PointId q) {
  s.check_point(p);
  s.check_point(q);
  if (p == q) fail(Errc::IdOutOfRange, "common_lines requires two distinct points");
  std::vector<LineId> out;
  const auto& a = s.lines_of_point(p);
  const auto& b = s.lines_of_point(q);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

std::vector<LineId> sorted_line_order(const IncidenceStructure& s) {
  std::vector<LineId> order(s.num_lines());
  for (LineId g = 0; g < s.num_lines(); ++g) order[g] = g;
  std::sort(order.begin(), order.end(),
            [&](LineId a, LineId b) { return s.line(a) < s.line(b); });
  return order;
}

// Digest input: the canonical emit text without the labels block.
std::string incidence_text(const IncidenceStructure& s, const std::vector<LineId>& order) {
  std::string out;
  out += "INC 1\npoints " + std::to_string(s.num_points()) + "\nlines " +
         std::to_string(s.num_lines()) + "\n";
  for (LineId g : order) {
    const auto& pts = s.line(g);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(pts[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

CanonicalForm canonicalize(const IncidenceStructure& s) {
  auto order = sorted_line_order(s);
  std::vector<std::vector<PointId>> lines;
  lines.reserve(order.size());
  std::map<LineId, std::string> line_labels;
  for (LineId pos = 0; pos < order.size(); ++pos) {
    lines.push_back(s.line(order[pos]));
    auto it = s.line_labels().find(order[pos]);
    if (it != s.line_labels().end()) line_labels[pos] = it->second;
  }
  IncidenceStructure canon(s.num_points(), std::move(lines), s.point_labels(),
                           std::move(line_labels));
  auto ord2 = sorted_line_order(canon);
  std::string digest = text_digest(incidence_text(canon, ord2));
  return CanonicalForm{std::move(canon), std::move(digest)};
}

std::string structure_digest(const IncidenceStructure& s) {
  return text_digest(incidence_text(s, sorted_line_order(s)));
}

bool equal_lines(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return false;
  auto la = a.lines();
  auto lb = b.lines();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb;
}

std::string emit_structure(const IncidenceStructure& s) {
  auto order = sorted_line_order(s);
  std::string out = incidence_text(s, order);
  if (!s.point_labels().empty()) {
    out += "labels\n";
    for (const auto& [p, label] : s.point_labels())
      out += std::to_string(p) + " " + label + "\n";
  }
  return out;
}

namespace {

struct LineReader {
  std::vector<std::string> rows;
  std::vector<std::size_t> numbers;  // 1-based physical line numbers
  std::size_t pos = 0;

  explicit LineReader(const std::string& text) {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      ++lineno;
      std::string row = text.substr(start, end - start);
      if (!row.empty() && row.back() == '\r') row.pop_back();
      bool blank = row.find_first_not_of(" \t") == std::string::npos;
      if (!blank && row[row.find_first_not_of(" \t")] != '#') {
        rows.push_back(row);
        numbers.push_back(lineno);
      }
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  bool done() const { return pos >= rows.size(); }
  const std::string& peek() const { return rows[pos]; }
  std::size_t lineno() const { return pos < numbers.size() ? numbers[pos] : numbers.back(); }
  std::string next() { return rows[pos++]; }
};

[[noreturn]] void format_fail(std::size_t lineno, const std::string& msg) {
  fail(Errc::FormatError, "line " + std::to_string(lineno) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& row) {
  std::vector<std::string> out;
  std::istringstream in(row);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::uint32_t parse_u32(const std::string& tok, std::size_t lineno) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    format_fail(lineno, "expected a non-negative integer, got '" + tok + "'");
  unsigned long long v = 0;
  for (char c : tok) {
    v = v * 10 + static_cast<unsigned long long>(c - '0');
    if (v > 0xffffffffull) format_fail(lineno, "integer out of range: '" + tok + "'");
  }
  return static_cast<std::uint32_t>(v);
}

std::uint32_t expect_keyword_u32(LineReader& in, const std::string& keyword) {
  if (in.done()) fail(Errc::FormatError, "unexpected end of input, expected '" + keyword + "'");
  std::size_t lineno = in.lineno();
  auto toks = split_ws(in.next());
  if (toks.size() != 2 || toks[0] != keyword)
    format_fail(lineno, "expected '" + keyword + " <n>'");
  return parse_u32(toks[1], lineno);
}

}  // namespace

IncidenceStructure parse_structure(const std::string& text) {
  LineReader in(text);
  if (in.done()) fail(Errc::FormatError, "empty input");
  {
    std::size_t lineno = in.lineno();
    if (in.next() != "INC 1") format_fail(lineno, "expected header 'INC 1'");
  }
  std::uint32_t num_points = expect_keyword_u32(in, "points");
  std::uint32_t num_lines = expect_keyword_u32(in, "lines");

  std::vector<std::vector<PointId>> lines;
  lines.reserve(num_lines);
  for (std::uint32_t g = 0; g < num_lines; ++g) {
    if (in.done()) fail(Errc::FormatError, "unexpected end of input inside line rows");
    std::size_t lineno = in.lineno();
    auto toks = split_ws(in.next());
    if (toks.empty()) format_fail(lineno, "empty line row");
    std::vector<PointId> pts;
    pts.reserve(toks.size());
    for (const auto& t : toks) {
      std::uint32_t p = parse_u32(t, lineno);
      if (p >= num_points)
        format_fail(lineno, "point index " + t + " out of range (points " +
                                std::to_string(num_points) + ")");
      pts.push_back(p);
    }
    lines.push_back(std::move(pts));
  }

  std::map<PointId, std::string> labels;
  if (!in.done()) {
    std::size_t lineno = in.lineno();
    if (in.next() != "labels") format_fail(lineno, "expected 'labels' or end of input");
    while (!in.done()) {
      lineno = in.lineno();
      std::string row = in.next();
      std::size_t sp = row.find(' ');
      if (sp == std::string::npos) format_fail(lineno, "expected '<point-index> <label>'");
      std::uint32_t p = parse_u32(row.substr(0, sp), lineno);
      if (p >= num_points) format_fail(lineno, "label index out of range");
      std::string label = row.substr(sp + 1);
      while (!label.empty() && (label.back() == ' ' || label.back() == '\t')) label.pop_back();
      if (label.empty()) format_fail(lineno, "empty label");
      if (!labels.emplace(p, label).second) format_fail(lineno, "duplicate label index");
    }
  }

  return IncidenceStructure(num_points, std::move(lines), std::move(labels));
}

}  // namespace hj
