// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treeidx {

enum class Errc {
  CycleOrDisconnected,
  InvalidLabel,
  DuplicateEdge,
  SelfLoop,
  InvalidOrder,
  NotAnEdge,
  NotRealizable,
  InvalidFamilySpec,
  CapExceeded,
  EmptyClass,
  EvaluationError,
  ParseError,
  UnknownClaim,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::CycleOrDisconnected: return "CycleOrDisconnected";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::InvalidFamilySpec: return "InvalidFamilySpec";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::EmptyClass: return "EmptyClass";
    case Errc::EvaluationError: return "EvaluationError";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownClaim: return "UnknownClaim";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is meant for humans, the code for callers and tests.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace treeidx
