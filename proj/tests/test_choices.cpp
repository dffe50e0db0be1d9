#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hj/choices.hpp"
#include "hj/seeds.hpp"

using hj::ConstructionChoices;

namespace {

struct GoldenSeeds {
  hj::ProjectivePlane base = fixtures::golden_projective();
  std::vector<hj::AffinePlane> neighbourhoods{fixtures::golden_affine()};
  std::vector<hj::OrthogonalArray> oas{fixtures::golden_oa()};
};

}  // namespace

TEST_CASE("canonical choices reproduce the golden assignment") {
  GoldenSeeds seeds;
  auto choices = hj::canonical_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas);
  hj::validate_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas, choices);

  // line 1 is {3,4,5,9}: columns labeled by ascending point id
  CHECK(choices.column_points[1] == std::vector<hj::PointId>{3, 4, 5, 9});

  // points 3, 4, 5 feed line 1 from the row class (class 0), point 9 from
  // the column class (class 1)
  CHECK(choices.class_assignment[3].at(1) == 0);
  CHECK(choices.class_assignment[4].at(1) == 0);
  CHECK(choices.class_assignment[5].at(1) == 0);
  CHECK(choices.class_assignment[9].at(1) == 1);

  // symbol maps follow lexicographic line order: L->RST, M->UVW, N->XYZ in
  // the row class; L->RUX, M->SVY, N->TWZ in the column class
  const auto& nb = seeds.neighbourhoods.front();
  const auto& row_class = nb.parallel_classes[0];
  for (std::uint32_t i = 0; i < 3; ++i)
    CHECK(choices.symbol_assignment[1][0].at(row_class[i]) == i);
  const auto& col_class = nb.parallel_classes[1];
  for (std::uint32_t i = 0; i < 3; ++i)
    CHECK(choices.symbol_assignment[1][3].at(col_class[i]) == i);
}

TEST_CASE("canonical choices at order 2 use every class exactly once") {
  auto base = hj::projective_plane(2);
  std::vector<hj::AffinePlane> nbs{hj::affine_plane(2)};
  std::vector<hj::OrthogonalArray> oas{hj::oa_from_affine(hj::affine_plane(2))};
  auto choices = hj::canonical_choices(base.structure, nbs, oas);
  for (hj::PointId p = 0; p < base.structure.num_points(); ++p) {
    std::set<std::uint32_t> used;
    for (const auto& [line, cls] : choices.class_assignment[p]) used.insert(cls);
    CHECK(used == std::set<std::uint32_t>{0, 1, 2});
  }
}

TEST_CASE("random choices are seeded and deterministic") {
  GoldenSeeds seeds;
  auto a = hj::random_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas, 7);
  auto b = hj::random_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas, 7);
  CHECK(a.digest() == b.digest());
  CHECK(a.seed == 7);

  auto c = hj::random_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas, 8);
  if (c.digest() == a.digest()) {
    auto d = hj::random_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas, 9);
    CHECK(d.digest() != a.digest());
  }

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto ledger = hj::random_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas, seed);
    CHECK_NOTHROW(
        hj::validate_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas, ledger));
  }
}

TEST_CASE("choices ledger round trips through the text format") {
  GoldenSeeds seeds;
  for (auto& ledger :
       {hj::canonical_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas),
        hj::random_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas, 99)}) {
    auto text = hj::emit_choices(ledger);
    auto round = hj::parse_choices(text);
    CHECK(hj::emit_choices(round) == text);
    CHECK(round.digest() == ledger.digest());
    CHECK(round.seed == ledger.seed);
    CHECK_NOTHROW(
        hj::validate_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas, round));
  }

  CHECK_THROWS_AS(hj::parse_choices("CHOICES 2\n"), hj::Error);
  CHECK_THROWS_AS(hj::parse_choices("CHOICES 1\npoint 1: 0->0\n"), hj::Error);  // gap
  CHECK_THROWS_AS(hj::parse_choices("CHOICES 1\nline 0: columns 0 1\n"), hj::Error);
}

TEST_CASE("shape and bijection errors") {
  GoldenSeeds seeds;

  // two neighbourhoods for thirteen base points
  std::vector<hj::AffinePlane> two{fixtures::golden_affine(), fixtures::golden_affine()};
  CHECK_THROWS_AS(hj::canonical_choices(seeds.base.structure, two, seeds.oas), hj::Error);
  try {
    hj::canonical_choices(seeds.base.structure, two, seeds.oas);
  } catch (const hj::Error& e) {
    CHECK(e.code() == hj::Errc::SizeMismatch);
  }

  // wrong OA shape: OA(2,3,2) against an order-3 base
  std::vector<hj::OrthogonalArray> bad_oa{hj::oa_from_affine(hj::affine_plane(2))};
  CHECK_THROWS_AS(hj::canonical_choices(seeds.base.structure, seeds.neighbourhoods, bad_oa),
                  hj::Error);

  // reusing one parallel class for two lines through a point
  auto choices = hj::canonical_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas);
  auto through3 = seeds.base.structure.lines_of_point(3);
  choices.class_assignment[3][through3[1]] = choices.class_assignment[3][through3[0]];
  try {
    hj::validate_choices(seeds.base.structure, seeds.neighbourhoods, seeds.oas, choices);
    FAIL_CHECK("expected InvalidChoices");
  } catch (const hj::Error& e) {
    CHECK(e.code() == hj::Errc::InvalidChoices);
  }
}
