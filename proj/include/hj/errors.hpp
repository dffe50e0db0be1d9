#pragma once

#include <stdexcept>
#include <string>

namespace hj {

/// Error conditions raised by the library. Verification verdicts are not
/// errors; they are reported through VerificationReport instead.
enum class Errc {
  DuplicateLine,
  PointOutOfRange,
  EmptyLine,
  EmptyStructure,
  IdOutOfRange,
  FormatError,
  UnsupportedOrder,
  BadField,
  NotAffine,
  NotProjective,
  ShapeError,
  NotCompletable,
  SizeMismatch,
  InvalidChoices,
  NotProjectiveKind,
  MissingProvenance,
  NotTransitive,
  Inconsistent,
  Io,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateLine: return "DuplicateLine";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::EmptyLine: return "EmptyLine";
    case Errc::EmptyStructure: return "EmptyStructure";
    case Errc::IdOutOfRange: return "IdOutOfRange";
    case Errc::FormatError: return "FormatError";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::BadField: return "BadField";
    case Errc::NotAffine: return "NotAffine";
    case Errc::NotProjective: return "NotProjective";
    case Errc::ShapeError: return "ShapeError";
    case Errc::NotCompletable: return "NotCompletable";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::InvalidChoices: return "InvalidChoices";
    case Errc::NotProjectiveKind: return "NotProjectiveKind";
    case Errc::MissingProvenance: return "MissingProvenance";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::Io: return "Io";
  }
  return "UnknownError";
}

}  // namespace hj
