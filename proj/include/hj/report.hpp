#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hj {

struct Violation {
  std::string axiom;              // short kebab-case axiom id
  std::vector<std::uint32_t> ids; // witness ids, meaning depends on the axiom
};

struct VerificationReport {
  bool pass = false;
  std::optional<std::uint32_t> t;
  std::optional<std::uint32_t> r;
  std::vector<Violation> violations;

  static VerificationReport ok() { return VerificationReport{true, {}, {}, {}}; }

  static VerificationReport ok_params(std::uint32_t t, std::uint32_t r) {
    return VerificationReport{true, t, r, {}};
  }

  static VerificationReport reject(std::string axiom, std::vector<std::uint32_t> ids) {
    VerificationReport rep;
    rep.pass = false;
    rep.violations.push_back(Violation{std::move(axiom), std::move(ids)});
    return rep;
  }

  /// "VERDICT pass|fail" + optional "PARAMS t=.. r=.." + one VIOLATION line
  /// per entry, in canonical order.
  std::string to_text() const {
    std::string out = pass ? "VERDICT pass\n" : "VERDICT fail\n";
    if (pass && t && r)
      out += "PARAMS t=" + std::to_string(*t) + " r=" + std::to_string(*r) + "\n";
    for (const auto& v : violations) {
      out += "VIOLATION " + v.axiom;
      for (auto id : v.ids) out += " " + std::to_string(id);
      out += "\n";
    }
    return out;
  }
};

}  // namespace hj
