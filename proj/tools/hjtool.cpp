// hjtool: constructs and verifies 2-uniform Hjelmslev planes from classical
// seeds (projective planes, affine planes, orthogonal arrays) over the INC,
// OA and CHOICES text formats. Exit codes: 0 success, 1 verification
// failure, 2 input or format errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hj/choices.hpp"
#include "hj/construct.hpp"
#include "hj/incidence.hpp"
#include "hj/seeds.hpp"
#include "hj/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) hj::fail(hj::Errc::Io, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) hj::fail(hj::Errc::Io, "cannot write " + path);
  out << text;
  if (!out) hj::fail(hj::Errc::Io, "short write to " + path);
}

hj::IncidenceStructure load_structure(const std::string& path) {
  return hj::parse_structure(read_file(path));
}

hj::ProjectivePlane load_projective(const std::string& path) {
  return hj::ProjectivePlane::from_structure(load_structure(path));
}

hj::AffinePlane load_affine(const std::string& path) {
  return hj::AffinePlane::from_structure(load_structure(path));
}

hj::OrthogonalArray load_oa(const std::string& path) {
  auto oa = hj::parse_oa(read_file(path));
  auto rep = hj::validate_oa(oa);
  if (!rep.pass)
    hj::fail(hj::Errc::ShapeError, path + " is not a strength-2 orthogonal array:\n" + rep.to_text());
  return oa;
}

std::vector<hj::AffinePlane> load_affines(const std::vector<std::string>& paths) {
  std::vector<hj::AffinePlane> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(load_affine(p));
  return out;
}

std::vector<hj::OrthogonalArray> load_oas(const std::vector<std::string>& paths) {
  std::vector<hj::OrthogonalArray> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(load_oa(p));
  return out;
}

struct ChoicesSpec {
  std::string mode = "canonical";  // canonical | random | <path>
  std::uint64_t seed = 0;
};

hj::ConstructionChoices make_choices(const ChoicesSpec& spec, const hj::IncidenceStructure& base,
                                     const std::vector<hj::AffinePlane>& neighbourhoods,
                                     const std::vector<hj::OrthogonalArray>& oas) {
  if (spec.mode == "canonical") return hj::canonical_choices(base, neighbourhoods, oas);
  if (spec.mode == "random") return hj::random_choices(base, neighbourhoods, oas, spec.seed);
  auto choices = hj::parse_choices(read_file(spec.mode));
  hj::validate_choices(base, neighbourhoods, oas, choices);
  return choices;
}

void print_structure_summary(const hj::IncidenceStructure& s) {
  std::cout << "points=" << s.num_points() << "\n";
  std::cout << "lines=" << s.num_lines() << "\n";
  std::cout << "digest=" << hj::structure_digest(s) << "\n";
}

void print_plane_summary(const hj::HjelmslevPlane& h) {
  print_structure_summary(h.structure);
  std::cout << "kind=" << (h.kind == hj::PlaneKind::projective ? "ph" : "ah") << "\n";
  std::cout << "t=" << h.t << "\n";
  std::cout << "r=" << h.r << "\n";
  std::cout << "points_per_line=" << h.structure.line(0).size() << "\n";
  std::cout << "point_classes=" << h.point_classes.size() << "\n";
  std::cout << "line_classes=" << h.line_classes.size() << "\n";
}

// Rebuilds the bookkeeping of a plane loaded from a bare INC file.
hj::HjelmslevPlane plane_from_verified(hj::IncidenceStructure s, const hj::VerificationReport& rep,
                                       hj::PlaneKind kind, unsigned threads) {
  auto n = hj::neighbour_partition(s, threads);
  hj::HjelmslevPlane h{std::move(s), kind, *rep.t, *rep.r, n.points.classes, n.lines.classes, {}};
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and verify 2-uniform Hjelmslev planes"};
  app.require_subcommand(1);
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  app.add_option("--threads", threads, "worker threads for verification (never affects output)");
  bool verbose = false;
  app.add_flag("--verbose", verbose, "human-readable commentary on stdout");

  // ---- gen-pp
  auto* gen_pp = app.add_subcommand("gen-pp", "generate PG(2,m) over a finite field");
  std::uint32_t gen_pp_order = 0;
  std::string gen_pp_out;
  gen_pp->add_option("--order", gen_pp_order, "plane order (prime power)")->required();
  gen_pp->add_option("-o,--out", gen_pp_out, "output INC file")->required();

  // ---- gen-ap
  auto* gen_ap = app.add_subcommand("gen-ap", "generate AG(2,m) by deleting a line of PG(2,m)");
  std::uint32_t gen_ap_order = 0, gen_ap_line = 0;
  std::string gen_ap_out;
  gen_ap->add_option("--order", gen_ap_order, "plane order (prime power)")->required();
  gen_ap->add_option("--line", gen_ap_line, "line of PG(2,m) to delete (default 0)");
  gen_ap->add_option("-o,--out", gen_ap_out, "output INC file")->required();

  // ---- gen-oa
  auto* gen_oa = app.add_subcommand("gen-oa", "generate an OA(2,k,m) from AG(2,m)");
  std::uint32_t gen_oa_order = 0, gen_oa_columns = 0;
  std::string gen_oa_out;
  gen_oa->add_option("--order", gen_oa_order, "symbol count m (prime power)")->required();
  gen_oa->add_option("--columns", gen_oa_columns, "columns k <= m+1 (default m+1)");
  gen_oa->add_option("-o,--out", gen_oa_out, "output OA file")->required();

  // ---- complete-oa
  auto* complete = app.add_subcommand("complete-oa", "extend an OA(2,m,m) to an OA(2,m+1,m)");
  std::string complete_in, complete_out;
  complete->add_option("-i,--in", complete_in, "input OA file")->required();
  complete->add_option("-o,--out", complete_out, "output OA file")->required();

  // ---- construct-ph / construct-ah (shared option shapes)
  std::string cons_base, cons_out, cons_choices = "canonical", cons_emit_choices;
  std::vector<std::string> cons_affine, cons_oa;
  std::uint64_t cons_seed = 0;
  auto add_construct_options = [&](CLI::App* cmd) {
    cmd->add_option("--base", cons_base, "base plane INC file")->required();
    cmd->add_option("--affine", cons_affine, "neighbourhood plane INC file(s); one file broadcasts")
        ->required()
        ->expected(-1);
    cmd->add_option("--oa", cons_oa, "orthogonal array file(s); one file broadcasts")
        ->required()
        ->expected(-1);
    cmd->add_option("--choices", cons_choices, "canonical | random | <choices file>");
    cmd->add_option("--seed", cons_seed, "seed for --choices random");
    cmd->add_option("--emit-choices", cons_emit_choices, "write the choices ledger here");
    cmd->add_option("-o,--out", cons_out, "output INC file")->required();
  };
  auto* cons_ph = app.add_subcommand("construct-ph", "2-uniform projective Hjelmslev plane");
  add_construct_options(cons_ph);
  auto* cons_ah = app.add_subcommand("construct-ah", "2-uniform affine Hjelmslev plane");
  add_construct_options(cons_ah);

  // ---- truncate
  auto* truncate = app.add_subcommand("truncate", "remove one line-neighbourhood of a PH plane");
  std::string trunc_in, trunc_out;
  std::uint32_t trunc_class = 0;
  truncate->add_option("-i,--in", trunc_in, "input INC file (projective-kind plane)")->required();
  truncate->add_option("--line-class", trunc_class, "line class index to remove")->required();
  truncate->add_option("-o,--out", trunc_out, "output INC file")->required();

  // ---- extend
  auto* extend = app.add_subcommand(
      "extend", "rebuild an AH plane from its seeds and extend it to a PH plane");
  std::vector<std::string> ext_inf_affine;
  std::string ext_inf_oa, ext_out;
  extend->add_option("--base", cons_base, "affine base plane INC file")->required();
  extend->add_option("--affine", cons_affine, "neighbourhood plane INC file(s)")->required()->expected(-1);
  extend->add_option("--oa", cons_oa, "OA(2,m,m) file(s)")->required()->expected(-1);
  extend->add_option("--choices", cons_choices, "canonical | random | <choices file>");
  extend->add_option("--seed", cons_seed, "seed for --choices random");
  extend->add_option("--emit-choices", cons_emit_choices, "write the construction ledger here");
  extend->add_option("--inf-affine", ext_inf_affine,
                     "neighbourhood plane(s) for the points at infinity (default: broadcast --affine)")
      ->expected(-1);
  extend->add_option("--inf-oa", ext_inf_oa, "OA(2,m+1,m) file for the line at infinity")->required();
  extend->add_option("-o,--out", ext_out, "output INC file")->required();

  // ---- verify
  auto* verify = app.add_subcommand("verify", "verify Hjelmslev axioms and report (t, r)");
  bool verify_ph_flag = false, verify_ah_flag = false, verify_uniform_flag = false;
  std::string verify_in;
  verify->add_flag("--ph", verify_ph_flag, "check the projective Hjelmslev axioms");
  verify->add_flag("--ah", verify_ah_flag, "check the affine Hjelmslev axioms");
  verify->add_flag("--uniform", verify_uniform_flag, "check 2-uniformity");
  verify->add_option("file", verify_in, "INC file")->required();

  // ---- restrict
  auto* restrict_cmd = app.add_subcommand("restrict", "point-neighbourhood restriction");
  std::string restrict_in, restrict_out;
  std::uint32_t restrict_point = 0;
  restrict_cmd->add_option("-i,--in", restrict_in, "input INC file")->required();
  restrict_cmd->add_option("--point", restrict_point, "center point id")->required();
  restrict_cmd->add_option("-o,--out", restrict_out, "optional INC file of the restriction");

  // ---- fingerprint
  auto* fp = app.add_subcommand("fingerprint", "isomorphism-screening invariants");
  std::vector<std::string> fp_files;
  fp->add_option("files", fp_files, "one or two INC files")->expected(1, 2);

  // ---- info
  auto* info = app.add_subcommand("info", "counts and digest of an INC file");
  std::string info_in;
  info->add_option("file", info_in, "INC file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_pp) {
      auto plane = hj::projective_plane(gen_pp_order);
      write_file(gen_pp_out, hj::emit_structure(plane.structure));
      std::cout << "order=" << plane.order << "\n";
      print_structure_summary(plane.structure);
      std::cout << "file=" << gen_pp_out << "\n";
      if (verbose)
        std::cout << "projective plane of order " << plane.order << " written to " << gen_pp_out
                  << "\n";
    } else if (*gen_ap) {
      auto plane = hj::projective_plane(gen_ap_order);
      auto affine = hj::affine_from_projective(plane, gen_ap_line);
      write_file(gen_ap_out, hj::emit_structure(affine.structure));
      std::cout << "order=" << affine.order << "\n";
      print_structure_summary(affine.structure);
      std::cout << "parallel_classes=" << affine.parallel_classes.size() << "\n";
      std::cout << "file=" << gen_ap_out << "\n";
    } else if (*gen_oa) {
      std::uint32_t m = gen_oa_order;
      std::uint32_t k = gen_oa->count("--columns") ? gen_oa_columns : m + 1;
      if (k == 0 || k > m + 1)
        hj::fail(hj::Errc::ShapeError, "columns must be between 1 and m+1");
      auto oa = hj::oa_from_affine(hj::affine_plane(m));
      while (oa.columns() > k) oa = oa.without_last_column();
      write_file(gen_oa_out, hj::emit_oa(oa));
      std::cout << "columns=" << oa.columns() << "\n";
      std::cout << "symbols=" << oa.symbols() << "\n";
      std::cout << "rows=" << oa.rows() << "\n";
      std::cout << "file=" << gen_oa_out << "\n";
    } else if (*complete) {
      auto oa = hj::parse_oa(read_file(complete_in));
      auto completed = hj::complete_oa(oa);
      write_file(complete_out, hj::emit_oa(completed));
      std::cout << "columns=" << completed.columns() << "\n";
      std::cout << "symbols=" << completed.symbols() << "\n";
      std::cout << "file=" << complete_out << "\n";
    } else if (*cons_ph || *cons_ah) {
      auto neighbourhoods = load_affines(cons_affine);
      auto oas = load_oas(cons_oa);
      ChoicesSpec spec{cons_choices, cons_seed};
      hj::HjelmslevPlane plane = [&]() {
        if (*cons_ph) {
          auto base = load_projective(cons_base);
          auto choices = make_choices(spec, base.structure, neighbourhoods, oas);
          return hj::construct_ph(base, neighbourhoods, oas, choices);
        }
        auto base = load_affine(cons_base);
        auto choices = make_choices(spec, base.structure, neighbourhoods, oas);
        return hj::construct_ah(base, neighbourhoods, oas, choices);
      }();
      write_file(cons_out, hj::emit_structure(plane.structure));
      if (!cons_emit_choices.empty())
        write_file(cons_emit_choices, hj::emit_choices(plane.provenance->choices));
      print_plane_summary(plane);
      std::cout << "choices_digest=" << plane.provenance->choices.digest() << "\n";
      std::cout << "file=" << cons_out << "\n";
    } else if (*truncate) {
      auto s = load_structure(trunc_in);
      auto rep = hj::verify_ph(s, threads);
      if (!rep.pass) {
        std::cout << rep.to_text();
        return 1;
      }
      auto h = plane_from_verified(std::move(s), rep, hj::PlaneKind::projective, threads);
      auto truncated = hj::truncate_ph(h, trunc_class);
      write_file(trunc_out, hj::emit_structure(truncated.structure));
      print_plane_summary(truncated);
      std::cout << "file=" << trunc_out << "\n";
    } else if (*extend) {
      auto base = load_affine(cons_base);
      auto neighbourhoods = load_affines(cons_affine);
      auto oas = load_oas(cons_oa);
      ChoicesSpec spec{cons_choices, cons_seed};
      auto choices = make_choices(spec, base.structure, neighbourhoods, oas);
      auto h = hj::construct_ah(base, neighbourhoods, oas, choices);
      std::vector<hj::AffinePlane> inf_neighbourhoods;
      if (!ext_inf_affine.empty()) {
        inf_neighbourhoods = load_affines(ext_inf_affine);
      } else if (neighbourhoods.size() == 1) {
        inf_neighbourhoods = neighbourhoods;
      } else {
        hj::fail(hj::Errc::SizeMismatch,
                 "--inf-affine is required when --affine is not a single broadcast file");
      }
      auto extended = hj::extend_ah(h, inf_neighbourhoods, load_oa(ext_inf_oa));
      write_file(ext_out, hj::emit_structure(extended.structure));
      if (!cons_emit_choices.empty())
        write_file(cons_emit_choices, hj::emit_choices(choices));
      print_plane_summary(extended);
      std::cout << "file=" << ext_out << "\n";
    } else if (*verify) {
      int selected = (verify_ph_flag ? 1 : 0) + (verify_ah_flag ? 1 : 0) + (verify_uniform_flag ? 1 : 0);
      if (selected != 1)
        hj::fail(hj::Errc::FormatError, "choose exactly one of --ph, --ah, --uniform");
      auto s = load_structure(verify_in);
      hj::VerificationReport rep;
      if (verify_ph_flag) rep = hj::verify_ph(s, threads);
      if (verify_ah_flag) rep = hj::verify_ah(s, threads);
      if (verify_uniform_flag) rep = hj::verify_2_uniform(s, threads);
      std::cout << rep.to_text();
      return rep.pass ? 0 : 1;
    } else if (*restrict_cmd) {
      auto s = load_structure(restrict_in);
      auto res = hj::restriction(s, restrict_point, threads);
      std::cout << "center=" << res.center << "\n";
      std::cout << "points=" << res.points.size() << "\n";
      std::cout << "lines=" << res.lines.size() << "\n";
      std::uint32_t min_mult = 0, max_mult = 0;
      for (std::uint32_t x : res.multiplicities) {
        min_mult = min_mult == 0 ? x : std::min(min_mult, x);
        max_mult = std::max(max_mult, x);
      }
      std::cout << "multiplicity_min=" << min_mult << "\n";
      std::cout << "multiplicity_max=" << max_mult << "\n";
      if (!restrict_out.empty()) {
        write_file(restrict_out, hj::emit_structure(res.as_structure()));
        std::cout << "file=" << restrict_out << "\n";
      }
    } else if (*fp) {
      auto first = hj::fingerprint(load_structure(fp_files[0]));
      std::cout << "fingerprint=" << first.to_string() << "\n";
      if (fp_files.size() == 2) {
        auto second = hj::fingerprint(load_structure(fp_files[1]));
        std::cout << "fingerprint2=" << second.to_string() << "\n";
        std::cout << "equal=" << (first == second ? "true" : "false") << "\n";
        if (verbose)
          std::cout << "equal fingerprints are necessary, not sufficient, for isomorphism\n";
      }
    } else if (*info) {
      auto s = load_structure(info_in);
      print_structure_summary(s);
      std::map<std::size_t, std::uint32_t> sizes;
      for (hj::LineId g = 0; g < s.num_lines(); ++g) ++sizes[s.line(g).size()];
      std::cout << "line_sizes=";
      bool first = true;
      for (auto [size, count] : sizes) {
        std::cout << (first ? "" : ",") << size << ":" << count;
        first = false;
      }
      std::cout << "\n";
    }
  } catch (const hj::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    bool verdict_like = e.code() == hj::Errc::NotTransitive || e.code() == hj::Errc::NotCompletable ||
                        e.code() == hj::Errc::Inconsistent;
    return verdict_like ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
