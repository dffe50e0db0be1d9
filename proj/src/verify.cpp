#include "hj/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <thread>

#include "hj/seeds.hpp"

namespace hj {

namespace {

struct BitMatrix {
  std::uint32_t n = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  explicit BitMatrix(std::uint32_t size)
      : n(size), words((static_cast<std::size_t>(size) + 63) / 64), bits(words * size, 0) {}

  void set(std::uint32_t i, std::uint32_t j) { bits[words * i + j / 64] |= 1ull << (j % 64); }
  bool test(std::uint32_t i, std::uint32_t j) const {
    return (bits[words * i + j / 64] >> (j % 64)) & 1u;
  }
};

void run_rows(std::uint32_t n, unsigned threads, const std::function<void(unsigned, std::uint32_t)>& fn) {
  if (threads <= 1 || n < 64) {
    for (std::uint32_t i = 0; i < n; ++i) fn(0, i);
    return;
  }
  unsigned count = std::min<unsigned>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (unsigned tid = 0; tid < count; ++tid)
    pool.emplace_back([&, tid]() {
      std::uint32_t lo = static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) * tid / count);
      std::uint32_t hi = static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) * (tid + 1) / count);
      for (std::uint32_t i = lo; i < hi; ++i) fn(tid, i);
    });
  for (auto& th : pool) th.join();
}

struct PairScan {
  BitMatrix adj;                                        // symmetric, >= 2 in common
  std::optional<std::array<std::uint32_t, 2>> uncovered;  // smallest pair with 0 in common
};

// Shared scan for both relations: fills the upper triangle in parallel
// (thread-owned rows), mirrors sequentially, and keeps the lexicographically
// first uncovered pair so results are schedule-independent.
PairScan scan_pairs(std::uint32_t n, unsigned threads,
                    const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& count) {
  PairScan out{BitMatrix(n), std::nullopt};
  unsigned slots = std::max(1u, threads);
  std::vector<std::optional<std::array<std::uint32_t, 2>>> local(slots);
  run_rows(n, threads, [&](unsigned tid, std::uint32_t i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      std::uint32_t c = count(i, j);
      if (c >= 2) out.adj.set(i, j);
      if (c == 0 && !local[tid]) local[tid] = std::array<std::uint32_t, 2>{i, j};
    }
  });
  for (const auto& cand : local)
    if (cand && (!out.uncovered || *cand < *out.uncovered)) out.uncovered = cand;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (out.adj.test(i, j)) out.adj.set(j, i);
  return out;
}

struct RelationCheck {
  bool is_equivalence = true;
  std::array<std::uint32_t, 3> witness{};  // a ~ b ~ c, a !~ c
  Partition partition;
};

// Components of the adjacency graph; the relation is an equivalence iff
// every component is a clique. A failing pair yields a witness triple from
// the first three vertices of a shortest path.
RelationCheck analyze_relation(std::uint32_t n, const BitMatrix& adj) {
  RelationCheck out;
  out.partition.class_of.assign(n, UINT32_MAX);

  for (std::uint32_t start = 0; start < n; ++start) {
    if (out.partition.class_of[start] != UINT32_MAX) continue;
    std::uint32_t cls = static_cast<std::uint32_t>(out.partition.classes.size());
    std::vector<std::uint32_t> members;
    std::deque<std::uint32_t> queue{start};
    out.partition.class_of[start] = cls;
    while (!queue.empty()) {
      std::uint32_t v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (std::uint32_t w = 0; w < n; ++w)
        if (adj.test(v, w) && out.partition.class_of[w] == UINT32_MAX) {
          out.partition.class_of[w] = cls;
          queue.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.partition.classes.push_back(std::move(members));
  }

  for (const auto& cls : out.partition.classes) {
    for (std::uint32_t a : cls)
      for (std::uint32_t b : cls) {
        if (a >= b || adj.test(a, b)) continue;
        // BFS path a -> b inside the component; first three vertices are the
        // witness (v0 ~ v1 ~ v2 but v0 !~ v2 on a shortest path).
        std::vector<std::uint32_t> parent(cls.size(), UINT32_MAX);
        std::map<std::uint32_t, std::uint32_t> index;
        for (std::uint32_t i = 0; i < cls.size(); ++i) index[cls[i]] = i;
        std::deque<std::uint32_t> queue{a};
        parent[index[a]] = index[a];
        while (!queue.empty()) {
          std::uint32_t v = queue.front();
          queue.pop_front();
          if (v == b) break;
          for (std::uint32_t w : cls)
            if (adj.test(v, w) && parent[index[w]] == UINT32_MAX) {
              parent[index[w]] = index[v];
              queue.push_back(w);
            }
        }
        std::vector<std::uint32_t> path{b};
        while (path.back() != a) path.push_back(cls[parent[index[path.back()]]]);
        std::reverse(path.begin(), path.end());
        out.is_equivalence = false;
        out.witness = {path[0], path[1], path[2]};
        return out;
      }
  }
  return out;
}

PairScan scan_point_pairs(const IncidenceStructure& s, unsigned threads) {
  return scan_pairs(s.num_points(), threads,
                    [&](std::uint32_t p, std::uint32_t q) { return s.common_line_count(p, q); });
}

PairScan scan_line_pairs(const IncidenceStructure& s, unsigned threads) {
  return scan_pairs(s.num_lines(), threads,
                    [&](std::uint32_t g, std::uint32_t h) { return s.intersection_size(g, h); });
}

struct LineClassResult {
  bool ok = true;
  std::array<std::uint32_t, 2> witness{};  // lines sharing >= 2 points but different covers
  Partition partition;
};

// Line neighbourhoods are the fibres of the covered point-class sets: for
// any epimorphism, lines over the same image line cover exactly its point
// classes, and two distinct image lines differ as class sets. Parallel
// neighbour lines (affine kind) share no point, so the raw ">= 2 common
// points" relation is generated, not reproduced; it must be contained in
// the fibres, which this checks.
LineClassResult line_classes_by_cover(const IncidenceStructure& s, const Partition& points,
                                      const BitMatrix& line_adj) {
  LineClassResult out;
  std::uint32_t n = s.num_lines();
  std::vector<std::vector<std::uint32_t>> cover(n);
  for (LineId g = 0; g < n; ++g) {
    auto& c = cover[g];
    c.reserve(s.line(g).size());
    for (PointId p : s.line(g)) c.push_back(points.class_of[p]);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }

  out.partition.class_of.assign(n, UINT32_MAX);
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  for (LineId g = 0; g < n; ++g) {
    auto [it, inserted] =
        ids.emplace(cover[g], static_cast<std::uint32_t>(out.partition.classes.size()));
    if (inserted) out.partition.classes.emplace_back();
    out.partition.class_of[g] = it->second;
    out.partition.classes[it->second].push_back(g);
  }

  for (LineId g = 0; g < n && out.ok; ++g)
    for (LineId h = g + 1; h < n; ++h)
      if (line_adj.test(g, h) && out.partition.class_of[g] != out.partition.class_of[h]) {
        out.ok = false;
        out.witness = {g, h};
        break;
      }
  return out;
}

// Point side of the partition; the common core of both verifiers.
struct PointPartitionResult {
  bool ok = true;
  std::array<std::uint32_t, 3> witness{};
  Partition partition;
};

PointPartitionResult point_partition(const IncidenceStructure& s, unsigned threads) {
  auto scan = scan_point_pairs(s, threads);
  auto check = analyze_relation(s.num_points(), scan.adj);
  return PointPartitionResult{check.is_equivalence, check.witness, std::move(check.partition)};
}

std::uint32_t isqrt(std::uint32_t v) {
  std::uint32_t r = 0;
  while ((r + 1) * static_cast<std::uint64_t>(r + 1) <= v) ++r;
  return r;
}

struct ParamResult {
  bool ok = false;
  std::uint32_t t = 0, r = 0;
  std::string axiom;
  std::vector<std::uint32_t> ids;
};

enum class KindTag { projective, affine };

ParamResult derive_params(const IncidenceStructure& s, const NeighbourPartition& n, KindTag kind,
                          std::optional<std::uint32_t> image_order) {
  ParamResult out;
  std::uint32_t line_size = static_cast<std::uint32_t>(s.line(0).size());
  for (LineId g = 1; g < s.num_lines(); ++g)
    if (s.line(g).size() != line_size) {
      out.axiom = "line-size-uniform";
      out.ids = {0, g};
      return out;
    }

  std::size_t cp = n.points.classes.front().size();
  for (std::uint32_t c = 1; c < n.points.classes.size(); ++c)
    if (n.points.classes[c].size() != cp) {
      out.axiom = "point-class-size";
      out.ids = {n.points.classes[0][0], n.points.classes[c][0]};
      return out;
    }
  std::size_t cl = n.lines.classes.front().size();
  for (std::uint32_t c = 1; c < n.lines.classes.size(); ++c)
    if (n.lines.classes[c].size() != cl) {
      out.axiom = "line-class-size";
      out.ids = {n.lines.classes[0][0], n.lines.classes[c][0]};
      return out;
    }
  if (cp != cl) {
    out.axiom = "class-size-mismatch";
    out.ids = {};
    return out;
  }

  std::uint32_t t = isqrt(static_cast<std::uint32_t>(cp));
  if (static_cast<std::size_t>(t) * t != cp) {
    out.axiom = "class-size-not-square";
    out.ids = {static_cast<std::uint32_t>(cp)};
    return out;
  }

  // Neighbouring lines must meet in exactly t points (projective kind) or
  // in t or 0 points (affine kind allows parallel neighbours).
  for (const auto& cls : n.lines.classes)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        std::uint32_t isz = s.intersection_size(cls[i], cls[j]);
        bool ok = isz == t || (kind == KindTag::affine && isz == 0);
        if (!ok) {
          out.axiom = "neighbour-line-intersection";
          out.ids = {cls[i], cls[j], isz};
          return out;
        }
      }

  std::uint32_t r = 0;
  if (kind == KindTag::projective) {
    if (line_size <= t || (line_size - t) % t != 0) {
      out.axiom = "line-size-decomposition";
      out.ids = {line_size, t};
      return out;
    }
    r = (line_size - t) / t;
  } else {
    if (line_size % t != 0) {
      out.axiom = "line-size-decomposition";
      out.ids = {line_size, t};
      return out;
    }
    r = line_size / t;
  }
  if (image_order && *image_order != r) {
    out.axiom = "parameters-quotient-mismatch";
    out.ids = {r, *image_order};
    return out;
  }
  out.ok = true;
  out.t = t;
  out.r = r;
  return out;
}

}  // namespace

NeighbourPartition neighbour_partition(const IncidenceStructure& s, unsigned threads) {
  auto points = point_partition(s, threads);
  if (!points.ok)
    fail(Errc::NotTransitive, "point neighbour relation: " + std::to_string(points.witness[0]) +
                                  " ~ " + std::to_string(points.witness[1]) + " ~ " +
                                  std::to_string(points.witness[2]) + " but the ends differ");
  auto lines = scan_line_pairs(s, threads);
  auto line_check = line_classes_by_cover(s, points.partition, lines.adj);
  if (!line_check.ok)
    fail(Errc::NotTransitive,
         "line neighbour relation: lines " + std::to_string(line_check.witness[0]) + " and " +
             std::to_string(line_check.witness[1]) +
             " share two points but cover different point neighbourhoods");
  return NeighbourPartition{std::move(points.partition), std::move(line_check.partition)};
}

Quotient quotient(const IncidenceStructure& s, const NeighbourPartition& n) {
  std::uint32_t num_classes = static_cast<std::uint32_t>(n.points.classes.size());

  std::vector<std::uint32_t> line_map(s.num_lines(), UINT32_MAX);
  std::map<std::vector<PointId>, std::uint32_t> image_ids;
  std::vector<std::vector<PointId>> image_lines;
  for (std::uint32_t lc = 0; lc < n.lines.classes.size(); ++lc) {
    std::vector<PointId> covered;
    for (LineId g : n.lines.classes[lc])
      for (PointId p : s.line(g)) covered.push_back(n.points.class_of[p]);
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    auto [it, inserted] = image_ids.emplace(covered, static_cast<std::uint32_t>(image_lines.size()));
    if (inserted) image_lines.push_back(covered);
    for (LineId g : n.lines.classes[lc]) line_map[g] = it->second;
  }

  return Quotient{n.points.class_of, std::move(line_map),
                  IncidenceStructure(num_classes, std::move(image_lines))};
}

IncidenceStructure Restriction::as_structure() const {
  if (lines.empty())
    fail(Errc::EmptyStructure, "restriction at point " + std::to_string(center) + " has no lines");
  std::vector<std::vector<PointId>> dense;
  dense.reserve(lines.size());
  for (const auto& l : lines) {
    std::vector<PointId> row;
    row.reserve(l.size());
    for (PointId p : l) {
      auto it = std::lower_bound(points.begin(), points.end(), p);
      row.push_back(static_cast<PointId>(it - points.begin()));
    }
    dense.push_back(std::move(row));
  }
  return IncidenceStructure(static_cast<std::uint32_t>(points.size()), std::move(dense));
}

namespace {

Restriction restriction_of_class(const IncidenceStructure& s, const std::vector<PointId>& cls,
                                 PointId center) {
  Restriction out;
  out.center = center;
  out.points = cls;
  std::map<std::vector<PointId>, std::uint32_t> counts;
  for (LineId g = 0; g < s.num_lines(); ++g) {
    std::vector<PointId> chunk;
    std::set_intersection(s.line(g).begin(), s.line(g).end(), cls.begin(), cls.end(),
                          std::back_inserter(chunk));
    if (chunk.size() >= 2) ++counts[chunk];
  }
  for (auto& [line, count] : counts) {
    out.lines.push_back(line);
    out.multiplicities.push_back(count);
  }
  return out;
}

}  // namespace

Restriction restriction(const IncidenceStructure& s, PointId p, unsigned threads) {
  s.check_point(p);
  auto points = point_partition(s, threads);
  if (!points.ok)
    fail(Errc::NotTransitive, "point neighbour relation: " + std::to_string(points.witness[0]) +
                                  " ~ " + std::to_string(points.witness[1]) + " ~ " +
                                  std::to_string(points.witness[2]) + " but the ends differ");
  return restriction_of_class(s, points.partition.classes[points.partition.class_of[p]], p);
}

namespace {

std::optional<Violation> uniform_line_size(const IncidenceStructure& s) {
  for (LineId g = 1; g < s.num_lines(); ++g)
    if (s.line(g).size() != s.line(0).size())
      return Violation{"line-size-uniform", {0, g}};
  return std::nullopt;
}

std::optional<Violation> quotient_collapse(const NeighbourPartition& n, const Quotient& q) {
  std::map<std::uint32_t, LineId> first_line;
  for (std::uint32_t lc = 0; lc < n.lines.classes.size(); ++lc) {
    LineId rep = n.lines.classes[lc].front();
    auto [it, inserted] = first_line.emplace(q.line_map[rep], rep);
    if (!inserted) return Violation{"quotient-line-collapse", {it->second, rep}};
  }
  return std::nullopt;
}

VerificationReport verify_hjelmslev(const IncidenceStructure& s, KindTag kind, unsigned threads) {
  if (auto v = uniform_line_size(s)) return VerificationReport::reject(v->axiom, v->ids);

  auto points = scan_point_pairs(s, threads);
  if (points.uncovered)
    return VerificationReport::reject("point-pair-coverage",
                                      {(*points.uncovered)[0], (*points.uncovered)[1]});
  auto lines = scan_line_pairs(s, threads);
  if (kind == KindTag::projective && lines.uncovered)
    return VerificationReport::reject("line-pair-intersection",
                                      {(*lines.uncovered)[0], (*lines.uncovered)[1]});

  auto point_check = analyze_relation(s.num_points(), points.adj);
  if (!point_check.is_equivalence)
    return VerificationReport::reject(
        "point-neighbours-not-transitive",
        {point_check.witness[0], point_check.witness[1], point_check.witness[2]});

  if (kind == KindTag::projective) {
    // Projective kind: any two lines meet, so lines of one neighbourhood
    // share t >= 2 points and the raw relation must itself be an
    // equivalence. The affine kind has parallel neighbours instead.
    auto line_check = analyze_relation(s.num_lines(), lines.adj);
    if (!line_check.is_equivalence)
      return VerificationReport::reject(
          "line-neighbours-not-transitive",
          {line_check.witness[0], line_check.witness[1], line_check.witness[2]});
  }
  auto line_cover = line_classes_by_cover(s, point_check.partition, lines.adj);
  if (!line_cover.ok)
    return VerificationReport::reject("line-neighbour-condition",
                                      {line_cover.witness[0], line_cover.witness[1]});

  NeighbourPartition n{std::move(point_check.partition), std::move(line_cover.partition)};
  Quotient q = quotient(s, n);
  if (auto v = quotient_collapse(n, q)) return VerificationReport::reject(v->axiom, v->ids);

  std::uint32_t image_order = 0;
  if (kind == KindTag::projective) {
    auto rep = validate_projective_plane(q.image);
    if (!rep.pass)
      return VerificationReport::reject("quotient-projective:" + rep.violations.front().axiom,
                                        rep.violations.front().ids);
    image_order = static_cast<std::uint32_t>(q.image.line(0).size()) - 1;
  } else {
    auto rep = validate_affine_plane(q.image);
    if (!rep.pass)
      return VerificationReport::reject("quotient-affine:" + rep.violations.front().axiom,
                                        rep.violations.front().ids);
    image_order = static_cast<std::uint32_t>(q.image.line(0).size());

    // Condition 3c: disjoint lines map to parallel (equal or disjoint) lines.
    for (LineId g = 0; g < s.num_lines(); ++g)
      for (LineId h = g + 1; h < s.num_lines(); ++h) {
        if (s.intersection_size(g, h) != 0) continue;
        if (q.line_map[g] == q.line_map[h]) continue;
        if (q.image.intersection_size(q.line_map[g], q.line_map[h]) != 0)
          return VerificationReport::reject("parallel-not-preserved", {g, h});
      }
  }

  auto params = derive_params(s, n, kind, image_order);
  if (!params.ok) return VerificationReport::reject("parameters:" + params.axiom, params.ids);
  return VerificationReport::ok_params(params.t, params.r);
}

}  // namespace

VerificationReport verify_ph(const IncidenceStructure& s, unsigned threads) {
  return verify_hjelmslev(s, KindTag::projective, threads);
}

VerificationReport verify_ah(const IncidenceStructure& s, unsigned threads) {
  return verify_hjelmslev(s, KindTag::affine, threads);
}

VerificationReport verify_2_uniform(const IncidenceStructure& s, unsigned threads) {
  VerificationReport base = verify_ph(s, threads);
  if (!base.pass) {
    VerificationReport affine = verify_ah(s, threads);
    if (!affine.pass) {
      VerificationReport rep = VerificationReport::reject("not-hjelmslev-plane", {});
      rep.violations.push_back(Violation{"as-projective:" + base.violations.front().axiom,
                                         base.violations.front().ids});
      rep.violations.push_back(Violation{"as-affine:" + affine.violations.front().axiom,
                                         affine.violations.front().ids});
      return rep;
    }
    base = affine;
  }

  std::uint32_t t = *base.t;
  if (t == 1) return base;  // ordinary plane, reported as the 1-uniform case

  auto n = neighbour_partition(s, threads);
  for (const auto& cls : n.points.classes) {
    PointId center = cls.front();
    Restriction res = restriction_of_class(s, cls, center);
    if (res.lines.empty())
      return VerificationReport::reject("restriction-empty", {center});
    for (std::uint32_t mult : res.multiplicities)
      if (mult != res.multiplicities.front())
        return VerificationReport::reject("restriction-multiplicity", {center});
    auto rep = validate_affine_plane(res.as_structure());
    if (!rep.pass)
      return VerificationReport::reject("restriction-not-affine", {center});
    if (res.lines.front().size() != t || res.points.size() != static_cast<std::size_t>(t) * t)
      return VerificationReport::reject("restriction-order", {center});
  }
  return base;
}

std::pair<std::uint32_t, std::uint32_t> parameters(const IncidenceStructure& s,
                                                   const NeighbourPartition& n) {
  KindTag kind = KindTag::projective;
  for (LineId g = 0; g < s.num_lines() && kind == KindTag::projective; ++g)
    for (LineId h = g + 1; h < s.num_lines(); ++h)
      if (s.intersection_size(g, h) == 0) {
        kind = KindTag::affine;
        break;
      }
  auto params = derive_params(s, n, kind, std::nullopt);
  if (!params.ok) {
    std::string ids;
    for (auto id : params.ids) ids += " " + std::to_string(id);
    fail(Errc::Inconsistent, "parameter derivations disagree: " + params.axiom + ids);
  }
  return {params.t, params.r};
}

namespace {

template <typename Counter>
std::vector<std::pair<std::uint32_t, Counter>> as_multiset(const std::map<std::uint32_t, Counter>& m) {
  std::vector<std::pair<std::uint32_t, Counter>> out;
  out.reserve(m.size());
  for (const auto& [k, v] : m) out.emplace_back(k, v);
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> component_sizes(std::uint32_t n,
                                                                     const BitMatrix& adj) {
  std::vector<bool> seen(n, false);
  std::map<std::uint32_t, std::uint32_t> sizes;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::uint32_t size = 0;
    std::deque<std::uint32_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::uint32_t v = queue.front();
      queue.pop_front();
      ++size;
      for (std::uint32_t w = 0; w < n; ++w)
        if (adj.test(v, w) && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    ++sizes[size];
  }
  return as_multiset(sizes);
}

template <typename Counter>
void append_multiset(std::string& out, const std::vector<std::pair<std::uint32_t, Counter>>& m) {
  out += '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m[i].first) + ":" + std::to_string(m[i].second);
  }
  out += ']';
}

}  // namespace

Fingerprint fingerprint(const IncidenceStructure& s) {
  Fingerprint out;
  out.num_points = s.num_points();
  out.num_lines = s.num_lines();

  std::map<std::uint32_t, std::uint32_t> line_sizes, degrees;
  for (LineId g = 0; g < s.num_lines(); ++g)
    ++line_sizes[static_cast<std::uint32_t>(s.line(g).size())];
  for (PointId p = 0; p < s.num_points(); ++p) ++degrees[s.degree(p)];
  out.line_sizes = as_multiset(line_sizes);
  out.point_degrees = as_multiset(degrees);

  auto points = scan_point_pairs(s, 1);
  auto lines = scan_line_pairs(s, 1);
  out.point_classes = component_sizes(s.num_points(), points.adj);
  out.line_classes = component_sizes(s.num_lines(), lines.adj);

  std::map<std::uint32_t, std::uint64_t> inter;
  for (LineId g = 0; g < s.num_lines(); ++g)
    for (LineId h = g + 1; h < s.num_lines(); ++h) ++inter[s.intersection_size(g, h)];
  out.intersections = as_multiset(inter);
  return out;
}

std::string Fingerprint::to_string() const {
  std::string out = "points=" + std::to_string(num_points) + ";lines=" + std::to_string(num_lines);
  out += ";line_sizes=";
  append_multiset(out, line_sizes);
  out += ";degrees=";
  append_multiset(out, point_degrees);
  out += ";point_classes=";
  append_multiset(out, point_classes);
  out += ";line_classes=";
  append_multiset(out, line_classes);
  out += ";intersections=";
  append_multiset(out, intersections);
  return out;
}

}  // namespace hj
