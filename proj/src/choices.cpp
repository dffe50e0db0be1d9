#include "hj/choices.hpp"

#include <algorithm>
#include <sstream>

#include "hj/digest.hpp"

namespace hj {

namespace {

// splitmix64; the fixed-stream generator behind random_choices.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Lemire's unbiased bounded draw.
  std::uint32_t below(std::uint32_t n) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    std::uint64_t low = static_cast<std::uint64_t>(m);
    if (low < n) {
      std::uint64_t threshold = (0ull - n) % n;
      while (low < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 64);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(static_cast<std::uint32_t>(i))]);
  }
};

std::uint32_t shared_order(const std::vector<AffinePlane>& neighbourhoods) {
  std::uint32_t m = neighbourhoods.front().order;
  for (const auto& nb : neighbourhoods)
    if (nb.order != m)
      fail(Errc::SizeMismatch, "neighbourhood planes have mixed orders");
  return m;
}

void check_shapes(const IncidenceStructure& base, const std::vector<AffinePlane>& neighbourhoods,
                  const std::vector<OrthogonalArray>& oas) {
  if (neighbourhoods.empty()) fail(Errc::SizeMismatch, "no neighbourhood planes given");
  if (oas.empty()) fail(Errc::SizeMismatch, "no orthogonal arrays given");
  if (neighbourhoods.size() != 1 && neighbourhoods.size() != base.num_points())
    fail(Errc::SizeMismatch, "need 1 or " + std::to_string(base.num_points()) +
                                 " neighbourhood planes, got " +
                                 std::to_string(neighbourhoods.size()));
  if (oas.size() != 1 && oas.size() != base.num_lines())
    fail(Errc::SizeMismatch, "need 1 or " + std::to_string(base.num_lines()) +
                                 " orthogonal arrays, got " + std::to_string(oas.size()));
  std::uint32_t m = shared_order(neighbourhoods);
  for (PointId p = 0; p < base.num_points(); ++p)
    if (base.degree(p) != m + 1)
      fail(Errc::SizeMismatch, "base point " + std::to_string(p) + " lies on " +
                                   std::to_string(base.degree(p)) + " lines, expected " +
                                   std::to_string(m + 1));
  for (LineId l = 0; l < base.num_lines(); ++l) {
    const auto& oa = oa_for(oas, l);
    std::uint32_t k = static_cast<std::uint32_t>(base.line(l).size());
    if (oa.columns() != k)
      fail(Errc::SizeMismatch, "orthogonal array for base line " + std::to_string(l) + " has " +
                                   std::to_string(oa.columns()) + " columns, expected " +
                                   std::to_string(k));
    if (oa.symbols() != m)
      fail(Errc::SizeMismatch, "orthogonal array for base line " + std::to_string(l) + " has " +
                                   std::to_string(oa.symbols()) + " symbols, expected " +
                                   std::to_string(m));
  }
}

}  // namespace

const AffinePlane& neighbourhood_for(const std::vector<AffinePlane>& neighbourhoods, PointId p) {
  return neighbourhoods.size() == 1 ? neighbourhoods.front() : neighbourhoods[p];
}

const OrthogonalArray& oa_for(const std::vector<OrthogonalArray>& oas, LineId l) {
  return oas.size() == 1 ? oas.front() : oas[l];
}

ConstructionChoices canonical_choices(const IncidenceStructure& base,
                                      const std::vector<AffinePlane>& neighbourhoods,
                                      const std::vector<OrthogonalArray>& oas) {
  check_shapes(base, neighbourhoods, oas);

  ConstructionChoices out;
  out.class_assignment.resize(base.num_points());
  for (PointId p = 0; p < base.num_points(); ++p) {
    std::uint32_t next_class = 0;
    for (LineId l : base.lines_of_point(p)) out.class_assignment[p][l] = next_class++;
  }

  out.column_points.resize(base.num_lines());
  out.symbol_assignment.resize(base.num_lines());
  for (LineId l = 0; l < base.num_lines(); ++l) {
    out.column_points[l] = base.line(l);  // ascending point ids
    for (PointId p : out.column_points[l]) {
      const auto& nb = neighbourhood_for(neighbourhoods, p);
      const auto& cls = nb.parallel_classes[out.class_assignment[p][l]];
      std::map<LineId, std::uint32_t> symbols;
      for (std::uint32_t i = 0; i < cls.size(); ++i) symbols[cls[i]] = i;
      out.symbol_assignment[l].push_back(std::move(symbols));
    }
  }
  return out;
}

ConstructionChoices random_choices(const IncidenceStructure& base,
                                   const std::vector<AffinePlane>& neighbourhoods,
                                   const std::vector<OrthogonalArray>& oas,
                                   std::uint64_t seed) {
  check_shapes(base, neighbourhoods, oas);
  SplitMix64 rng{seed ^ 0x484a504c414e4531ull};

  ConstructionChoices out;
  out.seed = seed;
  out.class_assignment.resize(base.num_points());
  std::uint32_t m = neighbourhoods.front().order;

  for (PointId p = 0; p < base.num_points(); ++p) {
    std::vector<std::uint32_t> classes(m + 1);
    for (std::uint32_t i = 0; i <= m; ++i) classes[i] = i;
    rng.shuffle(classes);
    std::uint32_t i = 0;
    for (LineId l : base.lines_of_point(p)) out.class_assignment[p][l] = classes[i++];
  }

  out.column_points.resize(base.num_lines());
  out.symbol_assignment.resize(base.num_lines());
  for (LineId l = 0; l < base.num_lines(); ++l) {
    auto cols = base.line(l);
    rng.shuffle(cols);
    out.column_points[l] = cols;
    for (PointId p : cols) {
      const auto& nb = neighbourhood_for(neighbourhoods, p);
      const auto& cls = nb.parallel_classes[out.class_assignment[p][l]];
      std::vector<std::uint32_t> symbols(cls.size());
      for (std::uint32_t i = 0; i < cls.size(); ++i) symbols[i] = i;
      rng.shuffle(symbols);
      std::map<LineId, std::uint32_t> assignment;
      for (std::uint32_t i = 0; i < cls.size(); ++i) assignment[cls[i]] = symbols[i];
      out.symbol_assignment[l].push_back(std::move(assignment));
    }
  }
  return out;
}

void validate_choices(const IncidenceStructure& base, const std::vector<AffinePlane>& neighbourhoods,
                      const std::vector<OrthogonalArray>& oas, const ConstructionChoices& choices) {
  check_shapes(base, neighbourhoods, oas);
  std::uint32_t m = neighbourhoods.front().order;

  if (choices.class_assignment.size() != base.num_points())
    fail(Errc::SizeMismatch, "ledger covers " + std::to_string(choices.class_assignment.size()) +
                                 " base points, expected " + std::to_string(base.num_points()));
  if (choices.column_points.size() != base.num_lines() ||
      choices.symbol_assignment.size() != base.num_lines())
    fail(Errc::SizeMismatch, "ledger covers " + std::to_string(choices.column_points.size()) +
                                 " base lines, expected " + std::to_string(base.num_lines()));

  for (PointId p = 0; p < base.num_points(); ++p) {
    const auto& assignment = choices.class_assignment[p];
    const auto& through = base.lines_of_point(p);
    if (assignment.size() != through.size())
      fail(Errc::InvalidChoices, "point " + std::to_string(p) + " assigns " +
                                     std::to_string(assignment.size()) + " lines, expected " +
                                     std::to_string(through.size()));
    std::vector<bool> used(m + 1, false);
    for (const auto& [l, c] : assignment) {
      if (!std::binary_search(through.begin(), through.end(), l))
        fail(Errc::InvalidChoices, "point " + std::to_string(p) + " assigns a class to line " +
                                       std::to_string(l) + " it does not lie on");
      if (c > m)
        fail(Errc::InvalidChoices, "point " + std::to_string(p) + ": class index " +
                                       std::to_string(c) + " out of range");
      if (used[c])
        fail(Errc::InvalidChoices, "point " + std::to_string(p) + ": parallel class " +
                                       std::to_string(c) + " is used by two base lines");
      used[c] = true;
    }
  }

  for (LineId l = 0; l < base.num_lines(); ++l) {
    auto cols = choices.column_points[l];
    auto expected = base.line(l);
    std::sort(cols.begin(), cols.end());
    if (cols != expected)
      fail(Errc::InvalidChoices,
           "column labels of base line " + std::to_string(l) + " are not its points");
    if (choices.symbol_assignment[l].size() != expected.size())
      fail(Errc::InvalidChoices,
           "base line " + std::to_string(l) + " has a symbol map per-column count mismatch");
    for (std::uint32_t j = 0; j < choices.column_points[l].size(); ++j) {
      PointId p = choices.column_points[l][j];
      const auto& nb = neighbourhood_for(neighbourhoods, p);
      const auto& cls = nb.parallel_classes[choices.class_assignment[p].at(l)];
      const auto& symbols = choices.symbol_assignment[l][j];
      if (symbols.size() != cls.size())
        fail(Errc::InvalidChoices, "base line " + std::to_string(l) + ", column " +
                                       std::to_string(j) + ": symbol map size mismatch");
      std::vector<bool> used(m, false);
      for (const auto& [line_id, symbol] : symbols) {
        if (std::find(cls.begin(), cls.end(), line_id) == cls.end())
          fail(Errc::InvalidChoices, "base line " + std::to_string(l) + ", column " +
                                         std::to_string(j) + ": line " + std::to_string(line_id) +
                                         " is not in the assigned parallel class");
        if (symbol >= m || used[symbol])
          fail(Errc::InvalidChoices, "base line " + std::to_string(l) + ", column " +
                                         std::to_string(j) + ": symbols are not a bijection");
        used[symbol] = true;
      }
    }
  }
}

// ------------------------------------------------------------ text format

std::string emit_choices(const ConstructionChoices& choices) {
  std::string out = "CHOICES 1\n";
  for (PointId p = 0; p < choices.class_assignment.size(); ++p) {
    out += "point " + std::to_string(p) + ":";
    for (const auto& [l, c] : choices.class_assignment[p])
      out += " " + std::to_string(l) + "->" + std::to_string(c);
    out += "\n";
  }
  for (LineId l = 0; l < choices.column_points.size(); ++l) {
    out += "line " + std::to_string(l) + ": columns";
    for (PointId p : choices.column_points[l]) out += " " + std::to_string(p);
    out += "; symbols";
    for (const auto& symbols : choices.symbol_assignment[l])
      for (const auto& [line_id, symbol] : symbols)
        out += " " + std::to_string(line_id) + "->" + std::to_string(symbol);
    out += "\n";
  }
  if (choices.seed) out += "seed " + std::to_string(*choices.seed) + "\n";
  return out;
}

std::string ConstructionChoices::digest() const { return text_digest(emit_choices(*this)); }

namespace {

[[noreturn]] void choices_fail(std::size_t lineno, const std::string& msg) {
  fail(Errc::FormatError, "line " + std::to_string(lineno) + ": " + msg);
}

std::uint32_t to_u32(const std::string& tok, std::size_t lineno) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    choices_fail(lineno, "expected an integer, got '" + tok + "'");
  return static_cast<std::uint32_t>(std::stoul(tok));
}

std::pair<std::uint32_t, std::uint32_t> to_arrow(const std::string& tok, std::size_t lineno) {
  std::size_t arrow = tok.find("->");
  if (arrow == std::string::npos) choices_fail(lineno, "expected '<id>-><value>', got '" + tok + "'");
  return {to_u32(tok.substr(0, arrow), lineno), to_u32(tok.substr(arrow + 2), lineno)};
}

std::vector<std::string> tokens_of(const std::string& row) {
  std::vector<std::string> out;
  std::istringstream in(row);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ConstructionChoices parse_choices(const std::string& text) {
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
  if (rows.empty()) fail(Errc::FormatError, "empty input");
  if (rows.front().second != "CHOICES 1")
    choices_fail(rows.front().first, "expected header 'CHOICES 1'");

  ConstructionChoices out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto [no, row] = rows[i];
    auto toks = tokens_of(row);
    if (toks.empty()) continue;
    if (toks[0] == "point") {
      if (toks.size() < 2 || toks[1].back() != ':') choices_fail(no, "expected 'point <P>:'");
      std::uint32_t p = to_u32(toks[1].substr(0, toks[1].size() - 1), no);
      if (p != out.class_assignment.size())
        choices_fail(no, "point blocks must be contiguous from 0");
      std::map<LineId, std::uint32_t> assignment;
      for (std::size_t t = 2; t < toks.size(); ++t) {
        auto [l, c] = to_arrow(toks[t], no);
        if (!assignment.emplace(l, c).second) choices_fail(no, "duplicate line id in point block");
      }
      out.class_assignment.push_back(std::move(assignment));
    } else if (toks[0] == "line") {
      std::size_t semi = row.find(';');
      if (semi == std::string::npos) choices_fail(no, "expected '; symbols' section");
      auto head = tokens_of(row.substr(0, semi));
      auto tail = tokens_of(row.substr(semi + 1));
      if (head.size() < 3 || head[1].back() != ':' || head[2] != "columns")
        choices_fail(no, "expected 'line <l>: columns <points...>'");
      std::uint32_t l = to_u32(head[1].substr(0, head[1].size() - 1), no);
      if (l != out.column_points.size()) choices_fail(no, "line blocks must be contiguous from 0");
      std::vector<PointId> cols;
      for (std::size_t t = 3; t < head.size(); ++t) cols.push_back(to_u32(head[t], no));
      if (cols.empty()) choices_fail(no, "no column labels");
      if (tail.empty() || tail[0] != "symbols") choices_fail(no, "expected 'symbols' after ';'");
      std::size_t entries = tail.size() - 1;
      if (entries == 0 || entries % cols.size() != 0)
        choices_fail(no, "symbol entries do not divide evenly into columns");
      std::size_t per_column = entries / cols.size();
      std::vector<std::map<LineId, std::uint32_t>> symbol_maps;
      std::size_t t = 1;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        std::map<LineId, std::uint32_t> symbols;
        for (std::size_t e = 0; e < per_column; ++e, ++t) {
          auto [line_id, symbol] = to_arrow(tail[t], no);
          if (!symbols.emplace(line_id, symbol).second)
            choices_fail(no, "duplicate line id in symbol map");
        }
        symbol_maps.push_back(std::move(symbols));
      }
      out.column_points.push_back(std::move(cols));
      out.symbol_assignment.push_back(std::move(symbol_maps));
    } else if (toks[0] == "seed") {
      if (toks.size() != 2) choices_fail(no, "expected 'seed <n>'");
      if (toks[1].find_first_not_of("0123456789") != std::string::npos)
        choices_fail(no, "expected an integer seed");
      out.seed = std::stoull(toks[1]);
    } else {
      choices_fail(no, "unknown directive '" + toks[0] + "'");
    }
  }
  return out;
}

}  // namespace hj
