#ifndef SCATTER_ERROR_HPP
#define SCATTER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace scatter {

// Every failure the library can signal.  Call sites that need to distinguish
// outcomes catch Error and switch on code; the message is for humans.
enum class Errc {
  ParseError,
  PreconditionViolation,
  InvalidShape,
  InvalidOrbit,
  InvalidParameter,
  DuplicateCoordinate,
  MultipleXChains,
  RankMismatch,
  ZeroInAChain,
  NotScattered,
  RankTooLarge,
  CertificateNotUnique,
  CertificateFailedAfterFallback,
  WitnessFailed,
  InternalError,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::InvalidShape: return "InvalidShape";
    case Errc::InvalidOrbit: return "InvalidOrbit";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::DuplicateCoordinate: return "DuplicateCoordinate";
    case Errc::MultipleXChains: return "MultipleXChains";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::ZeroInAChain: return "ZeroInAChain";
    case Errc::NotScattered: return "NotScattered";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::CertificateNotUnique: return "CertificateNotUnique";
    case Errc::CertificateFailedAfterFallback: return "CertificateFailedAfterFallback";
    case Errc::WitnessFailed: return "WitnessFailed";
    case Errc::InternalError: return "InternalError";
  }
  return "Error";
}

}  // namespace scatter

#endif
