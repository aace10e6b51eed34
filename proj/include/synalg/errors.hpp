#ifndef SYNALG_ERRORS_HPP
#define SYNALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace synalg {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or ill-conditioned input: wrong dimensions, non-finite entries,
/// asymmetry beyond tolerance, bad files, bad configuration.
class input_error : public error {
 public:
  using error::error;
};

/// Operand required to be positive semidefinite is not.
class not_positive_error : public error {
 public:
  not_positive_error(const std::string& msg, double margin)
      : error(msg), margin(margin) {}
  double margin;  // offending minimum eigenvalue
};

/// Operand required to be invertible is singular within tolerance.
class not_invertible_error : public error {
 public:
  not_invertible_error(const std::string& msg, double margin)
      : error(msg), margin(margin) {}
  double margin;  // min |eigenvalue|
};

/// Candidate failed the idempotence test.
class not_projection_error : public error {
 public:
  not_projection_error(const std::string& msg, double residual)
      : error(msg), residual(residual) {}
  double residual;  // ||p^2 - p||
};

/// A family passed where commutation is required does not commute.
class non_commuting_error : public error {
 public:
  non_commuting_error(const std::string& msg, double residual)
      : error(msg), residual(residual) {}
  double residual;  // worst pairwise commutator max-norm
};

/// Element is not a member of the commutative block it was evaluated against.
class not_in_block_error : public error {
 public:
  not_in_block_error(const std::string& msg, double residual)
      : error(msg), residual(residual) {}
  double residual;  // off-diagonal / cell-constancy residual
};

/// Order-theoretic hypotheses of a check are violated; no verdict is produced.
class hypothesis_error : public error {
 public:
  using error::error;
};

/// Internal numerical invariant failed (solver breakdown, lost orthogonality).
class numerical_error : public error {
 public:
  using error::error;
};

}  // namespace synalg

#endif  // SYNALG_ERRORS_HPP
