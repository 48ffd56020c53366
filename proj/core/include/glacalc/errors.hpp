#ifndef GLACALC_ERRORS_HPP
#define GLACALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glacalc {

/// Base class for every failure the engine can report to callers.
struct CalcError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A rational-function denominator collapsed to the zero polynomial.
struct DivisionByZeroError : CalcError {
  DivisionByZeroError() : CalcError("division by zero in F") {}
};

/// Two operands live over coefficient rings with different variables.
struct RingMismatchError : CalcError {
  RingMismatchError() : CalcError("ring mismatch") {}
};

/// An expression names a variable the ring does not declare, or a
/// derivation index is outside 1..m.
struct UnknownVariableError : CalcError {
  explicit UnknownVariableError(const std::string& what_name)
      : CalcError("unknown variable: " + what_name) {}
};

/// Structure data with inconsistent dimensions or badly shaped tables.
struct MalformedAlgebraError : CalcError {
  explicit MalformedAlgebraError(const std::string& detail)
      : CalcError("malformed algebra: " + detail) {}
};

/// A structure-constant table breaks L^g(a,b) = -L^g(b,a).
/// Indices are reported 1-based.
struct AntisymmetryError : CalcError {
  AntisymmetryError(int a, int b, int g)
      : CalcError("antisymmetry violated at (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(g) + ")") {}
};

/// Elements or forms attached to different algebra instances were combined.
struct MixedAlgebrasError : CalcError {
  MixedAlgebrasError() : CalcError("mixed algebras") {}
};

/// An operation that differentiates coordinates was invoked with m = 0.
struct NoVariablesError : CalcError {
  NoVariablesError() : CalcError("requires at least one variable") {}
};

/// The forward/inverse maps of a claimed diffeomorphism do not compose
/// to the identity.
struct NotDiffeomorphismError : CalcError {
  NotDiffeomorphismError() : CalcError("not a diffeomorphism pair") {}
};

/// The Jacobian of a deformation map is not invertible over the fraction field.
struct SingularDeformationError : CalcError {
  SingularDeformationError() : CalcError("singular deformation") {}
};

/// Subspace generators are linearly dependent over the fraction field.
struct DegenerateGeneratorsError : CalcError {
  DegenerateGeneratorsError() : CalcError("degenerate generating set") {}
};

/// An ideal-membership test needed a form degree above the configured cap.
struct DegreeCapError : CalcError {
  DegreeCapError() : CalcError("raise degree cap") {}
};

/// Internal consistency failures.  These are never valid outcomes; they
/// indicate a bug in the engine itself.
struct CertificateError : std::logic_error {
  CertificateError() : std::logic_error("certificate reconstruction failed") {}
};
struct TheoremEquivalenceError : std::logic_error {
  TheoremEquivalenceError() : std::logic_error("theorem equivalence violated") {}
};

/// The exactness solver only handles algebras over constants (m = 0).
struct ExactnessRestrictedError : CalcError {
  ExactnessRestrictedError()
      : CalcError("exactness solver restricted to constant-coefficient algebras") {}
};

}  // namespace glacalc

#endif
