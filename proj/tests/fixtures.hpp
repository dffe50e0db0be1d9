#pragma once

// Hand-checked fixtures: the order-3 projective plane, affine plane and
// OA(2,4,3) used across the tests, plus the nine expected lines of the
// {3,4,5,9} line-neighbourhood. Points 0-9,A,B,C map to ids 0..12 and
// R..Z to ids 0..8.

#include <string>
#include <vector>

#include "hj/incidence.hpp"
#include "hj/seeds.hpp"

namespace fixtures {

inline hj::IncidenceStructure golden_projective_structure() {
  std::vector<std::vector<hj::PointId>> lines = {
      {0, 1, 2, 9},  {3, 4, 5, 9},  {6, 7, 8, 9},  {0, 3, 6, 10}, {1, 4, 7, 10},
      {2, 5, 8, 10}, {0, 4, 8, 11}, {1, 5, 6, 11}, {2, 3, 7, 11}, {0, 7, 5, 12},
      {1, 3, 8, 12}, {2, 4, 6, 12}, {9, 10, 11, 12},
  };
  std::map<hj::PointId, std::string> labels;
  for (hj::PointId p = 0; p <= 9; ++p) labels[p] = std::to_string(p);
  labels[10] = "A";
  labels[11] = "B";
  labels[12] = "C";
  return hj::IncidenceStructure(13, std::move(lines), std::move(labels));
}

inline hj::ProjectivePlane golden_projective() {
  return hj::ProjectivePlane{golden_projective_structure(), 3};
}

inline hj::IncidenceStructure golden_affine_structure() {
  // R,S,T,U,V,W,X,Y,Z = 0..8
  std::vector<std::vector<hj::PointId>> lines = {
      {0, 1, 2}, {3, 4, 5}, {6, 7, 8},  // rows
      {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // columns
      {0, 4, 8}, {1, 5, 6}, {2, 3, 7},  // one diagonal direction
      {0, 5, 7}, {1, 3, 8}, {2, 4, 6},  // the other
  };
  std::map<hj::PointId, std::string> labels;
  const char* names = "RSTUVWXYZ";
  for (hj::PointId p = 0; p < 9; ++p) labels[p] = std::string(1, names[p]);
  return hj::IncidenceStructure(9, std::move(lines), std::move(labels));
}

inline hj::AffinePlane golden_affine() {
  auto s = golden_affine_structure();
  auto classes = hj::parallel_classes(s);
  return hj::AffinePlane{std::move(s), 3, std::move(classes)};
}

// L, M, N = 0, 1, 2.
inline hj::OrthogonalArray golden_oa() {
  std::vector<std::vector<std::uint32_t>> rows = {
      {0, 0, 0, 0}, {0, 1, 1, 1}, {0, 2, 2, 2}, {1, 0, 1, 2}, {1, 1, 2, 0},
      {1, 2, 0, 1}, {2, 0, 2, 1}, {2, 1, 0, 2}, {2, 2, 1, 0},
  };
  return hj::OrthogonalArray(4, 3, std::move(rows));
}

// The nine lines of the {3,4,5,9} line-neighbourhood as composite label
// sets. Two entries of the source data read "(4,X)" where the chosen class
// {U,V,W} forces "(4,W)"; these are fixed here per the array semantics.
inline std::vector<std::vector<std::string>> golden_line_neighbourhood() {
  return {
      {"(3,R)", "(3,S)", "(3,T)", "(4,R)", "(4,S)", "(4,T)", "(5,R)", "(5,S)", "(5,T)", "(9,R)", "(9,U)", "(9,X)"},
      {"(3,R)", "(3,S)", "(3,T)", "(4,U)", "(4,V)", "(4,W)", "(5,U)", "(5,V)", "(5,W)", "(9,S)", "(9,V)", "(9,Y)"},
      {"(3,R)", "(3,S)", "(3,T)", "(4,X)", "(4,Y)", "(4,Z)", "(5,X)", "(5,Y)", "(5,Z)", "(9,T)", "(9,W)", "(9,Z)"},
      {"(3,U)", "(3,V)", "(3,W)", "(4,R)", "(4,S)", "(4,T)", "(5,U)", "(5,V)", "(5,W)", "(9,T)", "(9,W)", "(9,Z)"},
      {"(3,U)", "(3,V)", "(3,W)", "(4,U)", "(4,V)", "(4,W)", "(5,X)", "(5,Y)", "(5,Z)", "(9,R)", "(9,U)", "(9,X)"},
      {"(3,U)", "(3,V)", "(3,W)", "(4,X)", "(4,Y)", "(4,Z)", "(5,R)", "(5,S)", "(5,T)", "(9,S)", "(9,V)", "(9,Y)"},
      {"(3,X)", "(3,Y)", "(3,Z)", "(4,R)", "(4,S)", "(4,T)", "(5,X)", "(5,Y)", "(5,Z)", "(9,S)", "(9,V)", "(9,Y)"},
      {"(3,X)", "(3,Y)", "(3,Z)", "(4,U)", "(4,V)", "(4,W)", "(5,R)", "(5,S)", "(5,T)", "(9,T)", "(9,W)", "(9,Z)"},
      {"(3,X)", "(3,Y)", "(3,Z)", "(4,X)", "(4,Y)", "(4,Z)", "(5,U)", "(5,V)", "(5,W)", "(9,R)", "(9,U)", "(9,X)"},
  };
}

inline hj::IncidenceStructure fano() {
  return hj::IncidenceStructure(
      7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

// Five points, four lines; 0 ~ 1 and 1 ~ 2 but 0 and 2 share no line, so
// the point neighbour relation is not transitive.
inline hj::IncidenceStructure glued_triangles() {
  return hj::IncidenceStructure(5, {{0, 1, 3}, {0, 1, 4}, {1, 2, 3}, {1, 2, 4}});
}

// One long line plus a pencil through the far point: no quadrangle.
inline hj::IncidenceStructure near_pencil() {
  return hj::IncidenceStructure(4, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}});
}

}  // namespace fixtures
