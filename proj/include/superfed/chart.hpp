#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superfed/superfunction.hpp"

namespace superfed {

struct Coordinate {
  std::string name;
  Parity parity = Parity::even;
};

/// A single global coordinate superdomain R^(p|q).
///
/// Coordinates keep their declared order; index i (0-based) addresses the
/// i-th coordinate, and within each parity group coordinates are numbered in
/// order of appearance.
class Chart {
 public:
  /// Throws precondition_error on duplicate or non-identifier names.
  explicit Chart(std::vector<Coordinate> coordinates);

  /// x1..xp followed by th1..thq.
  static Chart standard(std::size_t p, std::size_t q);

  std::size_t dimension() const noexcept { return coords_.size(); }
  Signature signature() const noexcept { return sig_; }
  const Coordinate& coordinate(std::size_t i) const { return coords_.at(i); }
  Parity parity(std::size_t i) const { return coords_.at(i).parity; }
  const std::string& name(std::size_t i) const { return coords_.at(i).name; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Position of coordinate i inside its parity group.
  std::size_t slot(std::size_t i) const { return slot_.at(i); }

  const std::vector<std::string>& even_names() const noexcept { return even_names_; }
  const std::vector<std::string>& odd_names() const noexcept { return odd_names_; }

  Superfunction zero() const { return Superfunction::zero(sig_); }
  Superfunction constant(const Rational& c) const { return Superfunction::constant(sig_, c); }
  Superfunction coordinate_function(std::size_t i) const;
  /// Partial derivative along coordinate i (left derivative when odd).
  Superfunction partial(std::size_t i, const Superfunction& f) const;
  /// Throws signature_error if `f` is not on this chart's signature.
  void check(const Superfunction& f) const;

  std::string format(const Superfunction& f) const;

  friend bool operator==(const Chart& a, const Chart& b);

 private:
  std::vector<Coordinate> coords_;
  std::vector<std::size_t> slot_;
  std::vector<std::string> even_names_;
  std::vector<std::string> odd_names_;
  Signature sig_;
};

bool is_identifier(std::string_view s) noexcept;

}  // namespace superfed
