#ifndef ARITHSURF_ERROR_HPP
#define ARITHSURF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace arithsurf {

enum class ErrorKind {
  kPrecondition,
  kArityMismatch,
  kDegenerate,
  kSingularFiber,
  kTorsionFiber,
  kUndefinedFiberCoordinate,
  kSingularPoint,
  kLineComponent,
  kReducible,
  kTwoTorsionLocus,
  kExhausted,
  kUnreachableTarget,
  kBadReduction,
  kCapExceeded,
  kTheoremViolation,
  kInternal,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kArityMismatch: return "arity-mismatch";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kSingularFiber: return "singular-fiber";
    case ErrorKind::kTorsionFiber: return "torsion-fiber";
    case ErrorKind::kUndefinedFiberCoordinate: return "undefined-fiber-coordinate";
    case ErrorKind::kSingularPoint: return "singular-point";
    case ErrorKind::kLineComponent: return "line-component";
    case ErrorKind::kReducible: return "reducible";
    case ErrorKind::kTwoTorsionLocus: return "two-torsion-locus";
    case ErrorKind::kExhausted: return "exhausted";
    case ErrorKind::kUnreachableTarget: return "unreachable-target";
    case ErrorKind::kBadReduction: return "bad-reduction";
    case ErrorKind::kCapExceeded: return "cap-exceeded";
    case ErrorKind::kTheoremViolation: return "theorem-violation";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can distinguish precondition failures from bugs.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arithsurf

#endif  // ARITHSURF_ERROR_HPP
