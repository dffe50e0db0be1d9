#pragma once

// Independent test oracles. Everything here recomputes its answer from raw
// line data with naive scans or exhaustive search, deliberately avoiding
// the query paths of the code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hj/incidence.hpp"
#include "hj/seeds.hpp"

namespace oracles {

// Deterministic generator for property tests.
struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }
};

inline std::uint32_t count_lines_through_pair(const hj::IncidenceStructure& s, hj::PointId p,
                                              hj::PointId q) {
  std::uint32_t n = 0;
  for (const auto& line : s.lines()) {
    bool has_p = false, has_q = false;
    for (hj::PointId x : line) {
      has_p |= x == p;
      has_q |= x == q;
    }
    if (has_p && has_q) ++n;
  }
  return n;
}

inline std::uint32_t count_common_points(const hj::IncidenceStructure& s, hj::LineId g,
                                         hj::LineId h) {
  std::uint32_t n = 0;
  for (hj::PointId x : s.lines()[g])
    for (hj::PointId y : s.lines()[h])
      if (x == y) ++n;
  return n;
}

// Strength-2 check by brute pair counting.
inline bool oa_is_strength2(const hj::OrthogonalArray& oa) {
  for (std::uint32_t i = 0; i < oa.columns(); ++i)
    for (std::uint32_t j = i + 1; j < oa.columns(); ++j) {
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> seen;
      for (std::uint32_t r = 0; r < oa.rows(); ++r) ++seen[{oa.at(r, i), oa.at(r, j)}];
      if (seen.size() != static_cast<std::size_t>(oa.symbols()) * oa.symbols()) return false;
      for (const auto& [_, count] : seen)
        if (count != 1) return false;
    }
  return true;
}

// Two columns are equal up to renaming iff the induced symbol map is a
// consistent bijection.
inline bool columns_match_up_to_renaming(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b,
                                         std::uint32_t symbols) {
  if (a.size() != b.size()) return false;
  std::vector<std::uint32_t> forward(symbols, UINT32_MAX), backward(symbols, UINT32_MAX);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (forward[a[i]] == UINT32_MAX && backward[b[i]] == UINT32_MAX) {
      forward[a[i]] = b[i];
      backward[b[i]] = a[i];
    } else if (forward[a[i]] != b[i] || backward[b[i]] != a[i]) {
      return false;
    }
  }
  return true;
}

// OA equivalence under row order, per-column symbol renaming and (optionally)
// column order, by exhaustive search over column permutations and renamings.
inline bool oa_equivalent(const hj::OrthogonalArray& a, const hj::OrthogonalArray& b,
                          bool allow_column_perm) {
  if (a.columns() != b.columns() || a.symbols() != b.symbols()) return false;
  std::uint32_t k = a.columns(), v = a.symbols();

  std::vector<std::vector<std::uint32_t>> rows_b;
  for (std::uint32_t r = 0; r < b.rows(); ++r) rows_b.push_back(b.row(r));
  std::sort(rows_b.begin(), rows_b.end());

  std::vector<std::uint32_t> col_perm(k);
  for (std::uint32_t i = 0; i < k; ++i) col_perm[i] = i;

  std::vector<std::vector<std::uint32_t>> renaming_pool;
  {
    std::vector<std::uint32_t> base(v);
    for (std::uint32_t i = 0; i < v; ++i) base[i] = i;
    do {
      renaming_pool.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
  }

  do {
    // choose a renaming index per column
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      std::vector<std::vector<std::uint32_t>> rows_a;
      for (std::uint32_t r = 0; r < a.rows(); ++r) {
        std::vector<std::uint32_t> row(k);
        for (std::uint32_t j = 0; j < k; ++j)
          row[j] = renaming_pool[pick[j]][a.at(r, col_perm[j])];
        rows_a.push_back(std::move(row));
      }
      std::sort(rows_a.begin(), rows_a.end());
      if (rows_a == rows_b) return true;

      std::uint32_t j = 0;
      while (j < k && ++pick[j] == renaming_pool.size()) pick[j++] = 0;
      if (j == k) break;
    }
  } while (allow_column_perm && std::next_permutation(col_perm.begin(), col_perm.end()));
  return false;
}

// Backtracking isomorphism search with a collinearity-embedding prune.
// Suited to the small rigid structures in these tests.
inline std::optional<std::vector<std::uint32_t>> find_isomorphism(const hj::IncidenceStructure& a,
                                                                  const hj::IncidenceStructure& b) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return std::nullopt;
  std::uint32_t n = a.num_points();

  std::set<std::vector<hj::PointId>> lines_b(b.lines().begin(), b.lines().end());

  std::vector<std::uint32_t> map(n, UINT32_MAX), used(n, 0);

  // partial consistency: for every line of a containing the point just
  // assigned, its mapped points must be embeddable into some line of b
  auto consistent = [&](hj::PointId p) {
    for (hj::LineId g : a.lines_of_point(p)) {
      std::vector<std::uint32_t> image;
      std::size_t assigned = 0;
      for (hj::PointId x : a.line(g))
        if (map[x] != UINT32_MAX) {
          image.push_back(map[x]);
          ++assigned;
        }
      if (assigned < 2) continue;
      std::sort(image.begin(), image.end());
      bool embeddable = false;
      for (hj::LineId h : b.lines_of_point(image.front())) {
        const auto& candidate = b.line(h);
        if (std::includes(candidate.begin(), candidate.end(), image.begin(), image.end())) {
          embeddable = true;
          break;
        }
      }
      if (!embeddable) return false;
    }
    return true;
  };

  std::vector<std::uint32_t> degree_a(n), degree_b(n);
  for (std::uint32_t p = 0; p < n; ++p) {
    degree_a[p] = a.degree(p);
    degree_b[p] = b.degree(p);
  }

  auto lines_map = [&]() {
    for (const auto& line : a.lines()) {
      std::vector<hj::PointId> image;
      for (hj::PointId x : line) image.push_back(map[x]);
      std::sort(image.begin(), image.end());
      if (!lines_b.count(image)) return false;
    }
    return true;
  };

  std::function<bool(std::uint32_t)> extend = [&](std::uint32_t p) -> bool {
    if (p == n) return lines_map();
    for (std::uint32_t q = 0; q < n; ++q) {
      if (used[q] || degree_a[p] != degree_b[q]) continue;
      map[p] = q;
      used[q] = 1;
      if (consistent(p) && extend(p + 1)) return true;
      map[p] = UINT32_MAX;
      used[q] = 0;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return map;
}

// Random relabeling of points and reshuffling of lines.
inline hj::IncidenceStructure permuted_copy(const hj::IncidenceStructure& s, Rng& rng) {
  std::uint32_t n = s.num_points();
  std::vector<std::uint32_t> perm(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  for (std::uint32_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

  std::vector<std::vector<hj::PointId>> lines;
  for (const auto& line : s.lines()) {
    std::vector<hj::PointId> mapped;
    for (hj::PointId p : line) mapped.push_back(perm[p]);
    lines.push_back(std::move(mapped));
  }
  for (std::size_t i = lines.size(); i > 1; --i) std::swap(lines[i - 1], lines[rng.below(static_cast<std::uint32_t>(i))]);
  return hj::IncidenceStructure(n, std::move(lines));
}

// Random loose structure (not a plane): distinct random lines over n points.
inline hj::IncidenceStructure random_structure(Rng& rng, std::uint32_t max_points,
                                               std::uint32_t max_lines) {
  std::uint32_t n = 2 + rng.below(max_points - 1);
  std::set<std::vector<hj::PointId>> lines;
  std::uint32_t want = 1 + rng.below(max_lines);
  for (std::uint32_t attempts = 0; attempts < want * 8 && lines.size() < want; ++attempts) {
    std::uint32_t len = 1 + rng.below(std::min(n, 6u));
    std::set<hj::PointId> pts;
    while (pts.size() < len) pts.insert(rng.below(n));
    lines.insert(std::vector<hj::PointId>(pts.begin(), pts.end()));
  }
  return hj::IncidenceStructure(n, std::vector<std::vector<hj::PointId>>(lines.begin(), lines.end()));
}

}  // namespace oracles
