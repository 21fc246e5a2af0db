#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pvd {

// Error codes shared across the library. The CLI groups them into exit
// codes: input and validation problems exit 2, resource and precision
// limits exit 3.
enum class Errc {
  Validation,      // malformed descriptor, inconsistent arguments
  Parse,           // text input rejected (carries position + expected set)
  ZeroInversion,   // multiplicative inverse of zero requested
  PayloadMismatch, // group element shape does not match the descriptor
  UnsupportedKind, // no decision rule for this group kind
  UnsupportedGroup,// operation restricted to a narrower exponent kind
  NegativeExponent,// series exponent outside the positive cone
  GroupMismatch,   // operands live over different exponent groups
  ZeroSeries,      // order/lead requested of the zero series
  NotAUnit,        // inversion of a series with zero constant term
  NotInRing,       // operand outside the ring the operation is defined on
  NodeMismatch,    // lattice node does not belong to the given lattice
  PrecisionLoss,   // result not determined by the inputs' precision/budget
  WindowExhausted, // subgroup enumeration outgrew the window before a verdict
  InfiniteLattice, // full lattice requested over an infinite base field
  DepthExceeded,   // lattice closure fell below the requested depth
  TooLarge,        // brute-force object above the hard size cap
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Validation: return "Validation";
    case Errc::Parse: return "Parse";
    case Errc::ZeroInversion: return "ZeroInversion";
    case Errc::PayloadMismatch: return "PayloadMismatch";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::UnsupportedGroup: return "UnsupportedGroup";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::ZeroSeries: return "ZeroSeries";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotInRing: return "NotInRing";
    case Errc::NodeMismatch: return "NodeMismatch";
    case Errc::PrecisionLoss: return "PrecisionLoss";
    case Errc::WindowExhausted: return "WindowExhausted";
    case Errc::InfiniteLattice: return "InfiniteLattice";
    case Errc::DepthExceeded: return "DepthExceeded";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, std::string(errc_name(code)) + ": " + message);
}

// Parse failure: byte offset into the input plus the token set that would
// have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& message)
      : Error(Errc::Parse, message),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace pvd
