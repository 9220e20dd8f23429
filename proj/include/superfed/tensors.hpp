#pragma once

#include <vector>

#include "superfed/chart.hpp"

namespace superfed {

/// X = sum_i X^i d_i with coefficients written on the left.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<Superfunction> components)
      : comps_(std::move(components)) {}

  static VectorField zero(const Chart& chart);
  /// The coordinate field d_i.
  static VectorField coordinate(const Chart& chart, std::size_t i);

  std::size_t size() const noexcept { return comps_.size(); }
  const Superfunction& operator[](std::size_t i) const { return comps_.at(i); }
  Superfunction& operator[](std::size_t i) { return comps_.at(i); }
  const std::vector<Superfunction>& components() const noexcept { return comps_; }
  bool is_zero() const noexcept;

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Rational& c, VectorField a);
  /// f X, multiplying each component on the left.
  friend VectorField operator*(const Superfunction& f, const VectorField& x);

  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  std::vector<Superfunction> comps_;
};

/// Parity |X| of a homogeneous field (zero counts as even); throws
/// homogeneity_error for mixed fields.
Parity field_parity(const Chart& chart, const VectorField& x);

/// Grading of a field: even, odd, mixed, or zero.
Grading field_grading(const Chart& chart, const VectorField& x);

/// Square table of superfunctions indexed by coordinate pairs.
class Table2 {
 public:
  Table2() = default;
  Table2(std::size_t n, Signature sig) : n_(n), data_(n * n, Superfunction(sig)) {}

  std::size_t dimension() const noexcept { return n_; }
  const Superfunction& operator()(std::size_t i, std::size_t j) const { return data_.at(i * n_ + j); }
  Superfunction& operator()(std::size_t i, std::size_t j) { return data_.at(i * n_ + j); }

  friend bool operator==(const Table2&, const Table2&);

 private:
  std::size_t n_ = 0;
  std::vector<Superfunction> data_;
};

/// Component table T^k_{ij} of a (2,1) tensor: T(d_i, d_j) = sum_k T^k_{ij} d_k.
class Table21 {
 public:
  Table21() = default;
  Table21(std::size_t n, Signature sig) : n_(n), data_(n * n * n, Superfunction(sig)) {}
  static Table21 zero(const Chart& chart) { return Table21(chart.dimension(), chart.signature()); }

  std::size_t dimension() const noexcept { return n_; }
  const Superfunction& operator()(std::size_t k, std::size_t i, std::size_t j) const {
    return data_.at((i * n_ + j) * n_ + k);
  }
  Superfunction& operator()(std::size_t k, std::size_t i, std::size_t j) {
    return data_.at((i * n_ + j) * n_ + k);
  }
  /// The vector field T(d_i, d_j).
  VectorField on_pair(std::size_t i, std::size_t j) const;
  void set_pair(std::size_t i, std::size_t j, const VectorField& v);

  Table21& operator+=(const Table21& other);
  Table21& operator-=(const Table21& other);
  Table21& operator*=(const Rational& c);
  friend Table21 operator+(Table21 a, const Table21& b) { return a += b; }
  friend Table21 operator-(Table21 a, const Table21& b) { return a -= b; }
  friend Table21 operator*(const Rational& c, Table21 a) { return a *= c; }

  friend bool operator==(const Table21&, const Table21&);

 private:
  std::size_t n_ = 0;
  std::vector<Superfunction> data_;
};

/// Table B_{ijk} of a three-times covariant tensor on coordinate fields.
class Table3 {
 public:
  Table3() = default;
  Table3(std::size_t n, Signature sig) : n_(n), data_(n * n * n, Superfunction(sig)) {}

  std::size_t dimension() const noexcept { return n_; }
  const Superfunction& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_.at((i * n_ + j) * n_ + k);
  }
  Superfunction& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_.at((i * n_ + j) * n_ + k);
  }

  friend bool operator==(const Table3&, const Table3&);

 private:
  std::size_t n_ = 0;
  std::vector<Superfunction> data_;
};

/// Twice covariant homogeneous tensor g given by its Gram matrix g(d_i, d_j).
struct BilinearForm {
  Table2 gram;
  Parity parity = Parity::even;

  static BilinearForm zero(const Chart& chart, Parity parity) {
    return {Table2(chart.dimension(), chart.signature()), parity};
  }
};

/// Parity-even connection given by its Christoffel symbols:
/// nabla_{d_i} d_j = sum_k Gamma^k_{ij} d_k.
struct Connection {
  Table21 christoffel;

  static Connection flat(const Chart& chart) { return {Table21::zero(chart)}; }
  friend bool operator==(const Connection& a, const Connection& b) {
    return a.christoffel == b.christoffel;
  }
};

}  // namespace superfed
