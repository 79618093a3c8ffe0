#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dlab {

enum class ErrorKind {
  NonSimple,
  Disconnected,
  NotSphereEmbedding,
  InconsistentRotation,
  UnknownVertex,
  NoSuchFace,
  NotATriangle,
  ParseError,
  MissingOuterFace,
  LimitExceeded,
  BadParameters,
  ChargeSumMismatch,
  AmbiguousRule,
  OverlappingCluster,
  UnclassifiableElement,
  PinConflict,
  SearchBudgetExceeded,
  MalformedCertificate,
  BadSpec,
  UnknownLemma,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSimple: return "NonSimple";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotSphereEmbedding: return "NotSphereEmbedding";
    case ErrorKind::InconsistentRotation: return "InconsistentRotation";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NoSuchFace: return "NoSuchFace";
    case ErrorKind::NotATriangle: return "NotATriangle";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingOuterFace: return "MissingOuterFace";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ChargeSumMismatch: return "ChargeSumMismatch";
    case ErrorKind::AmbiguousRule: return "AmbiguousRule";
    case ErrorKind::OverlappingCluster: return "OverlappingCluster";
    case ErrorKind::UnclassifiableElement: return "UnclassifiableElement";
    case ErrorKind::PinConflict: return "PinConflict";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::UnknownLemma: return "UnknownLemma";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dlab
