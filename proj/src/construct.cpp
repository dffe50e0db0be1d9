#include "hj/construct.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hj {

namespace {

std::string composite_label(const IncidenceStructure& base, PointId b,
                            const IncidenceStructure& local, PointId q) {
  return "(" + base.point_name(b) + "," + local.point_name(q) + ")";
}

HjelmslevPlane construct_impl(PlaneKind kind, const IncidenceStructure& base, std::uint32_t order,
                              const std::vector<AffinePlane>& neighbourhoods,
                              const std::vector<OrthogonalArray>& oas,
                              const ConstructionChoices& choices) {
  validate_choices(base, neighbourhoods, oas, choices);
  std::uint32_t m = order;
  std::uint32_t t2 = m * m;

  std::uint32_t num_points = base.num_points() * t2;
  std::map<PointId, std::string> labels;
  for (PointId b = 0; b < base.num_points(); ++b) {
    const auto& nb = neighbourhood_for(neighbourhoods, b).structure;
    for (PointId q = 0; q < t2; ++q)
      labels[composite_point(b, m, q)] = composite_label(base, b, nb, q);
  }

  // One emitted line per (base line, OA row): the union over columns of the
  // class line carrying that row's symbol, in the point-neighbourhood of
  // the column's base point.
  std::vector<std::vector<PointId>> lines;
  lines.reserve(static_cast<std::size_t>(base.num_lines()) * t2);
  for (LineId l = 0; l < base.num_lines(); ++l) {
    const auto& oa = oa_for(oas, l);
    const auto& cols = choices.column_points[l];

    // symbol -> neighbourhood line, per column
    std::vector<std::vector<LineId>> line_for_symbol(cols.size(), std::vector<LineId>(m));
    for (std::uint32_t j = 0; j < cols.size(); ++j)
      for (const auto& [line_id, symbol] : choices.symbol_assignment[l][j])
        line_for_symbol[j][symbol] = line_id;

    for (std::uint32_t row = 0; row < oa.rows(); ++row) {
      std::vector<PointId> pts;
      pts.reserve(static_cast<std::size_t>(cols.size()) * m);
      for (std::uint32_t j = 0; j < cols.size(); ++j) {
        PointId b = cols[j];
        const auto& nb = neighbourhood_for(neighbourhoods, b).structure;
        for (PointId q : nb.line(line_for_symbol[j][oa.at(row, j)]))
          pts.push_back(composite_point(b, m, q));
      }
      lines.push_back(std::move(pts));
    }
  }

  HjelmslevPlane out{IncidenceStructure(num_points, std::move(lines), std::move(labels)),
                     kind,
                     m,
                     m,
                     {},
                     {},
                     std::nullopt};

  out.point_classes.resize(base.num_points());
  for (PointId b = 0; b < base.num_points(); ++b) {
    out.point_classes[b].reserve(t2);
    for (PointId q = 0; q < t2; ++q) out.point_classes[b].push_back(composite_point(b, m, q));
  }
  out.line_classes.resize(base.num_lines());
  for (LineId l = 0; l < base.num_lines(); ++l) {
    out.line_classes[l].reserve(t2);
    for (std::uint32_t row = 0; row < t2; ++row) out.line_classes[l].push_back(l * t2 + row);
  }
  return out;
}

}  // namespace

PointId composite_point(PointId base, std::uint32_t order, PointId local) {
  return base * order * order + local;
}

HjelmslevPlane construct_ph(const ProjectivePlane& base,
                            const std::vector<AffinePlane>& neighbourhoods,
                            const std::vector<OrthogonalArray>& oas,
                            const ConstructionChoices& choices) {
  for (const auto& nb : neighbourhoods)
    if (nb.order != base.order)
      fail(Errc::SizeMismatch, "neighbourhood order " + std::to_string(nb.order) +
                                   " does not match base order " + std::to_string(base.order));
  auto out = construct_impl(PlaneKind::projective, base.structure, base.order, neighbourhoods, oas,
                            choices);
  out.provenance = Provenance{PlaneKind::projective, base.order, base.structure,
                              {},           neighbourhoods,     oas,
                              choices};
  return out;
}

HjelmslevPlane construct_ah(const AffinePlane& base,
                            const std::vector<AffinePlane>& neighbourhoods,
                            const std::vector<OrthogonalArray>& oas,
                            const ConstructionChoices& choices) {
  for (const auto& nb : neighbourhoods)
    if (nb.order != base.order)
      fail(Errc::SizeMismatch, "neighbourhood order " + std::to_string(nb.order) +
                                   " does not match base order " + std::to_string(base.order));
  auto out =
      construct_impl(PlaneKind::affine, base.structure, base.order, neighbourhoods, oas, choices);
  out.provenance = Provenance{PlaneKind::affine,       base.order, base.structure,
                              base.parallel_classes,   neighbourhoods, oas,
                              choices};
  return out;
}

HjelmslevPlane truncate_ph(const HjelmslevPlane& h, std::uint32_t line_class) {
  if (h.kind != PlaneKind::projective)
    fail(Errc::NotProjectiveKind, "truncation needs a projective-kind plane");
  if (line_class >= h.line_classes.size())
    fail(Errc::IdOutOfRange, "line class " + std::to_string(line_class) + " out of range");

  const auto& s = h.structure;
  std::vector<bool> drop_line(s.num_lines(), false);
  std::vector<bool> drop_point(s.num_points(), false);
  for (LineId g : h.line_classes[line_class]) {
    drop_line[g] = true;
    for (PointId p : s.line(g)) drop_point[p] = true;
  }

  std::vector<PointId> remap(s.num_points(), UINT32_MAX);
  std::uint32_t next = 0;
  for (PointId p = 0; p < s.num_points(); ++p)
    if (!drop_point[p]) remap[p] = next++;

  std::vector<std::vector<PointId>> lines;
  std::vector<LineId> line_remap(s.num_lines(), UINT32_MAX);
  lines.reserve(s.num_lines() - h.line_classes[line_class].size());
  for (LineId g = 0; g < s.num_lines(); ++g) {
    if (drop_line[g]) continue;
    std::vector<PointId> pts;
    for (PointId p : s.line(g))
      if (remap[p] != UINT32_MAX) pts.push_back(remap[p]);
    line_remap[g] = static_cast<LineId>(lines.size());
    lines.push_back(std::move(pts));
  }

  std::map<PointId, std::string> labels;
  for (const auto& [p, label] : s.point_labels())
    if (remap[p] != UINT32_MAX) labels[remap[p]] = label;

  HjelmslevPlane out{IncidenceStructure(next, std::move(lines), std::move(labels)),
                     PlaneKind::affine,
                     h.t,
                     h.r,
                     {},
                     {},
                     std::nullopt};

  for (const auto& cls : h.point_classes) {
    std::vector<PointId> mapped;
    for (PointId p : cls)
      if (remap[p] != UINT32_MAX) mapped.push_back(remap[p]);
    if (!mapped.empty()) out.point_classes.push_back(std::move(mapped));
  }
  for (std::uint32_t c = 0; c < h.line_classes.size(); ++c) {
    if (c == line_class) continue;
    std::vector<LineId> mapped;
    for (LineId g : h.line_classes[c]) mapped.push_back(line_remap[g]);
    out.line_classes.push_back(std::move(mapped));
  }
  return out;
}

HjelmslevPlane extend_ah(const HjelmslevPlane& h,
                         const std::vector<AffinePlane>& infinity_neighbourhoods,
                         const OrthogonalArray& infinity_oa) {
  if (!h.provenance || h.provenance->base_kind != PlaneKind::affine)
    fail(Errc::MissingProvenance, "extension needs a plane built by construct_ah");
  const Provenance& prov = *h.provenance;
  std::uint32_t m = prov.order;

  if (infinity_neighbourhoods.empty() ||
      (infinity_neighbourhoods.size() != 1 && infinity_neighbourhoods.size() != m + 1))
    fail(Errc::SizeMismatch, "need 1 or " + std::to_string(m + 1) + " infinity neighbourhoods");
  for (const auto& nb : infinity_neighbourhoods)
    if (nb.order != m) fail(Errc::SizeMismatch, "infinity neighbourhood order mismatch");
  if (infinity_oa.columns() != m + 1 || infinity_oa.symbols() != m)
    fail(Errc::SizeMismatch, "infinity OA must be an OA(2,m+1,m)");

  AffinePlane base{prov.base, m, prov.base_parallel_classes};
  ProjectivePlane extended = projectivize(base);
  std::uint32_t affine_points = prov.base.num_points();
  std::uint32_t affine_lines = prov.base.num_lines();
  LineId infinity_line = affine_lines;  // appended last by projectivize

  // Expand the neighbourhood list: original planes for affine base points,
  // the supplied ones for the points at infinity.
  std::vector<AffinePlane> neighbourhoods;
  neighbourhoods.reserve(affine_points + m + 1);
  for (PointId b = 0; b < affine_points; ++b)
    neighbourhoods.push_back(neighbourhood_for(prov.neighbourhoods, b));
  for (std::uint32_t c = 0; c <= m; ++c)
    neighbourhoods.push_back(
        infinity_neighbourhoods.size() == 1 ? infinity_neighbourhoods.front()
                                            : infinity_neighbourhoods[c]);

  // Complete each per-line OA by one column; the infinity line gets its own.
  std::vector<OrthogonalArray> oas;
  oas.reserve(affine_lines + 1);
  for (LineId l = 0; l < affine_lines; ++l) oas.push_back(complete_oa(oa_for(prov.oas, l)));
  oas.push_back(infinity_oa);

  // Extend the ledger. Affine assignments carry over verbatim; the infinity
  // points get canonical assignments over their incident lines.
  ConstructionChoices choices;
  choices.seed = prov.choices.seed;
  choices.class_assignment = prov.choices.class_assignment;
  choices.class_assignment.resize(affine_points + m + 1);
  for (std::uint32_t c = 0; c <= m; ++c) {
    PointId inf = affine_points + c;
    std::uint32_t next_class = 0;
    for (LineId l : extended.structure.lines_of_point(inf))
      choices.class_assignment[inf][l] = next_class++;
  }

  choices.column_points = prov.choices.column_points;
  choices.symbol_assignment = prov.choices.symbol_assignment;
  auto canonical_symbols = [&](PointId p, std::uint32_t class_index) {
    const auto& cls = neighbourhoods[p].parallel_classes[class_index];
    std::map<LineId, std::uint32_t> symbols;
    for (std::uint32_t i = 0; i < cls.size(); ++i) symbols[cls[i]] = i;
    return symbols;
  };
  std::vector<std::uint32_t> class_of_line(affine_lines, 0);
  for (std::uint32_t c = 0; c < prov.base_parallel_classes.size(); ++c)
    for (LineId g : prov.base_parallel_classes[c]) class_of_line[g] = c;
  for (LineId l = 0; l < affine_lines; ++l) {
    PointId inf = affine_points + class_of_line[l];
    choices.column_points[l].push_back(inf);  // matches the completed OA's new column
    choices.symbol_assignment[l].push_back(
        canonical_symbols(inf, choices.class_assignment[inf].at(l)));
  }
  choices.column_points.push_back({});
  choices.symbol_assignment.push_back({});
  for (std::uint32_t c = 0; c <= m; ++c) {
    PointId inf = affine_points + c;
    choices.column_points[infinity_line].push_back(inf);
    choices.symbol_assignment[infinity_line].push_back(
        canonical_symbols(inf, choices.class_assignment[inf].at(infinity_line)));
  }

  return construct_ph(extended, neighbourhoods, oas, choices);
}

}  // namespace hj
