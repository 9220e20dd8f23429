#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superfed {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on charts with different (p|q) signatures.
class signature_error : public error {
 public:
  using error::error;
};

/// Inversion of a superfunction whose body is zero.
class not_invertible_error : public error {
 public:
  using error::error;
};

/// A denominator vanishes at an evaluation point.
class pole_error : public error {
 public:
  using error::error;
};

/// A sign-dependent operation received a non-homogeneous (Mixed) input.
class homogeneity_error : public error {
 public:
  using error::error;
};

/// No invertible-body pivot was found while solving against a two-form.
class degenerate_form_error : public error {
 public:
  using error::error;
};

/// An operation's input violates a documented precondition.
class precondition_error : public error {
 public:
  using error::error;
};

/// A loaded object violates one of its module invariants.
class invariant_violation : public error {
 public:
  using error::error;
};

/// Syntax or semantic error in an expression or spec file.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace superfed
