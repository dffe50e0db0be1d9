#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "hj/construct.hpp"
#include "hj/verify.hpp"

using hj::HjelmslevPlane;
using hj::PlaneKind;

namespace {

HjelmslevPlane golden_plane() {
  auto base = fixtures::golden_projective();
  std::vector<hj::AffinePlane> nbs{fixtures::golden_affine()};
  std::vector<hj::OrthogonalArray> oas{fixtures::golden_oa()};
  auto choices = hj::canonical_choices(base.structure, nbs, oas);
  return hj::construct_ph(base, nbs, oas, choices);
}

HjelmslevPlane ph_plane(std::uint32_t m, std::uint64_t seed = 0, bool random = false) {
  auto base = hj::projective_plane(m);
  std::vector<hj::AffinePlane> nbs{hj::affine_plane(m)};
  std::vector<hj::OrthogonalArray> oas{hj::oa_from_affine(hj::affine_plane(m))};
  auto choices = random ? hj::random_choices(base.structure, nbs, oas, seed)
                        : hj::canonical_choices(base.structure, nbs, oas);
  return hj::construct_ph(base, nbs, oas, choices);
}

HjelmslevPlane ah_plane(std::uint32_t m, std::uint64_t seed = 0, bool random = false) {
  auto base = hj::affine_plane(m);
  std::vector<hj::AffinePlane> nbs{hj::affine_plane(m)};
  std::vector<hj::OrthogonalArray> oas{
      hj::oa_from_affine(hj::affine_plane(m)).without_last_column()};
  auto choices = random ? hj::random_choices(base.structure, nbs, oas, seed)
                        : hj::canonical_choices(base.structure, nbs, oas);
  return hj::construct_ah(base, nbs, oas, choices);
}

std::set<std::set<std::string>> label_sets(const HjelmslevPlane& h,
                                           const std::vector<hj::LineId>& lines) {
  std::set<std::set<std::string>> out;
  for (auto g : lines) {
    std::set<std::string> labels;
    for (auto p : h.structure.line(g)) labels.insert(h.structure.point_name(p));
    out.insert(labels);
  }
  return out;
}

}  // namespace

TEST_CASE("the order-3 construction reproduces the golden line-neighbourhood") {
  auto h = golden_plane();
  // base line 1 is {3,4,5,9}
  auto produced = label_sets(h, h.line_classes[1]);
  std::set<std::set<std::string>> expected;
  for (const auto& line : fixtures::golden_line_neighbourhood())
    expected.insert(std::set<std::string>(line.begin(), line.end()));
  CHECK(produced == expected);
}

TEST_CASE("projective construction cardinalities") {
  auto h2 = ph_plane(2);
  CHECK(h2.structure.num_points() == 28);
  CHECK(h2.structure.num_lines() == 28);
  for (hj::LineId g = 0; g < 28; ++g) CHECK(h2.structure.line(g).size() == 6);
  for (hj::PointId p = 0; p < 28; ++p) CHECK(h2.structure.degree(p) == 6);

  auto h3 = golden_plane();
  CHECK(h3.structure.num_points() == 117);
  CHECK(h3.structure.num_lines() == 117);
  for (hj::LineId g = 0; g < 117; ++g) CHECK(h3.structure.line(g).size() == 12);
  for (const auto& cls : h3.point_classes) CHECK(cls.size() == 9);
  for (const auto& cls : h3.line_classes) CHECK(cls.size() == 9);
}

TEST_CASE("pairwise intersections inside and across line classes") {
  for (std::uint32_t m : {2u, 3u}) {
    auto h = ph_plane(m);
    const auto& s = h.structure;
    std::vector<std::uint32_t> class_of(s.num_lines());
    for (std::uint32_t c = 0; c < h.line_classes.size(); ++c)
      for (auto g : h.line_classes[c]) class_of[g] = c;
    for (hj::LineId g = 0; g < s.num_lines(); ++g)
      for (hj::LineId k = g + 1; k < s.num_lines(); ++k) {
        std::uint32_t expected = class_of[g] == class_of[k] ? m : 1;
        CHECK(s.intersection_size(g, k) == expected);
      }
  }
}

TEST_CASE("each neighbourhood class line is reused m times per base line") {
  auto h = golden_plane();
  const auto& prov = *h.provenance;
  const auto& nb = prov.neighbourhoods.front();
  // for base line 1 and its point 3: each line of the class chosen at 3
  // appears in exactly 3 of the 9 emitted lines
  std::uint32_t cls = prov.choices.class_assignment[3].at(1);
  for (hj::LineId local : nb.parallel_classes[cls]) {
    std::set<hj::PointId> chunk;
    for (auto q : nb.structure.line(local)) chunk.insert(hj::composite_point(3, 3, q));
    std::uint32_t uses = 0;
    for (auto g : h.line_classes[1]) {
      const auto& pts = h.structure.line(g);
      bool contains = true;
      for (auto q : chunk) contains &= std::binary_search(pts.begin(), pts.end(), q);
      if (contains) ++uses;
    }
    CHECK(uses == 3);
  }
}

TEST_CASE("affine construction cardinalities") {
  auto h2 = ah_plane(2);
  CHECK(h2.kind == PlaneKind::affine);
  CHECK(h2.structure.num_points() == 16);
  CHECK(h2.structure.num_lines() == 24);
  for (hj::LineId g = 0; g < 24; ++g) CHECK(h2.structure.line(g).size() == 4);

  auto h3 = ah_plane(3);
  CHECK(h3.structure.num_points() == 81);
  CHECK(h3.structure.num_lines() == 108);
  for (hj::LineId g = 0; g < 108; ++g) CHECK(h3.structure.line(g).size() == 9);
  for (hj::PointId p = 0; p < 81; ++p) CHECK(h3.structure.degree(p) == 12);
}

TEST_CASE("quotient of a constructed plane is its base") {
  for (std::uint32_t m : {2u, 3u}) {
    auto h = ah_plane(m);
    auto n = hj::neighbour_partition(h.structure);
    auto q = hj::quotient(h.structure, n);
    CHECK(hj::structure_digest(q.image) == hj::structure_digest(h.provenance->base));
  }
  auto h = golden_plane();
  auto q = hj::quotient(h.structure, hj::neighbour_partition(h.structure));
  CHECK(hj::structure_digest(q.image) ==
        hj::structure_digest(fixtures::golden_projective_structure()));
}

TEST_CASE("construction is deterministic") {
  auto a = ph_plane(3, 11, true);
  auto b = ph_plane(3, 11, true);
  CHECK(hj::structure_digest(a.structure) == hj::structure_digest(b.structure));
  CHECK(a.provenance->choices.digest() == b.provenance->choices.digest());
}

TEST_CASE("truncation") {
  auto h3 = golden_plane();
  auto t3 = hj::truncate_ph(h3, 12);
  CHECK(t3.kind == PlaneKind::affine);
  CHECK(t3.structure.num_points() == 81);
  CHECK(t3.structure.num_lines() == 108);
  for (hj::LineId g = 0; g < 108; ++g) CHECK(t3.structure.line(g).size() == 9);
  CHECK(h3.structure.num_points() - t3.structure.num_points() == (3 + 1) * 9);

  auto h2 = ph_plane(2);
  auto t2 = hj::truncate_ph(h2, 0);
  CHECK(t2.structure.num_points() == 16);
  CHECK(t2.structure.num_lines() == 24);

  CHECK_THROWS_AS(hj::truncate_ph(t2, 0), hj::Error);  // already affine kind
  CHECK_THROWS_AS(hj::truncate_ph(h2, 7), hj::Error);  // class out of range
}

TEST_CASE("extension round trips through truncation") {
  for (std::uint32_t m : {2u, 3u}) {
    auto h = ah_plane(m);
    std::vector<hj::AffinePlane> inf_nbs{hj::affine_plane(m)};
    auto inf_oa = hj::oa_from_affine(hj::affine_plane(m));
    auto extended = hj::extend_ah(h, inf_nbs, inf_oa);
    CHECK(extended.kind == PlaneKind::projective);
    CHECK(extended.structure.num_points() == (m * m + m + 1) * m * m);
    CHECK(hj::verify_ph(extended.structure).pass);

    auto back = hj::truncate_ph(extended, static_cast<std::uint32_t>(extended.line_classes.size()) - 1);
    CHECK(hj::structure_digest(back.structure) == hj::structure_digest(h.structure));
    CHECK(hj::equal_lines(back.structure, h.structure));
  }
}

TEST_CASE("extension requires provenance") {
  auto h = ph_plane(2);
  auto truncated = hj::truncate_ph(h, 0);  // no ledger survives truncation
  std::vector<hj::AffinePlane> inf_nbs{hj::affine_plane(2)};
  auto inf_oa = hj::oa_from_affine(hj::affine_plane(2));
  try {
    hj::extend_ah(truncated, inf_nbs, inf_oa);
    FAIL_CHECK("expected MissingProvenance");
  } catch (const hj::Error& e) {
    CHECK(e.code() == hj::Errc::MissingProvenance);
  }
}

TEST_CASE("construction rejects inconsistent inputs") {
  auto base = fixtures::golden_projective();
  std::vector<hj::AffinePlane> nbs{fixtures::golden_affine()};
  std::vector<hj::OrthogonalArray> oas{fixtures::golden_oa()};
  auto choices = hj::canonical_choices(base.structure, nbs, oas);

  // corrupt the ledger: one class serves two lines through point 0
  auto broken = choices;
  auto through0 = base.structure.lines_of_point(0);
  broken.class_assignment[0][through0[1]] = broken.class_assignment[0][through0[0]];
  try {
    hj::construct_ph(base, nbs, oas, broken);
    FAIL_CHECK("expected InvalidChoices");
  } catch (const hj::Error& e) {
    CHECK(e.code() == hj::Errc::InvalidChoices);
  }

  // wrong neighbourhood order
  std::vector<hj::AffinePlane> wrong{hj::affine_plane(2)};
  try {
    hj::construct_ph(base, wrong, oas, choices);
    FAIL_CHECK("expected SizeMismatch");
  } catch (const hj::Error& e) {
    CHECK(e.code() == hj::Errc::SizeMismatch);
  }
}
