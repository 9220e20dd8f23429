#include "superfed/tensors.hpp"

#include "superfed/errors.hpp"

namespace superfed {

VectorField VectorField::zero(const Chart& chart) {
  return VectorField(std::vector<Superfunction>(chart.dimension(), chart.zero()));
}

VectorField VectorField::coordinate(const Chart& chart, std::size_t i) {
  VectorField v = zero(chart);
  v[i] = chart.constant(Rational(1));
  return v;
}

bool VectorField::is_zero() const noexcept {
  for (const auto& c : comps_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  if (other.size() != size()) throw signature_error("vector fields of different dimension");
  for (std::size_t i = 0; i < size(); ++i) comps_[i] += other.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  if (other.size() != size()) throw signature_error("vector fields of different dimension");
  for (std::size_t i = 0; i < size(); ++i) comps_[i] -= other.comps_[i];
  return *this;
}

VectorField operator*(const Rational& c, VectorField a) {
  for (auto& x : a.comps_) x *= c;
  return a;
}

VectorField operator*(const Superfunction& f, const VectorField& x) {
  std::vector<Superfunction> out;
  out.reserve(x.size());
  for (const auto& c : x.comps_) out.push_back(f * c);
  return VectorField(std::move(out));
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.comps_[i] == b.comps_[i])) return false;
  }
  return true;
}

Grading field_grading(const Chart& chart, const VectorField& x) {
  if (x.size() != chart.dimension()) throw signature_error("vector field not on this chart");
  bool even = false;
  bool odd = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    switch (grading_of(x[i])) {
      case Grading::zero:
        break;
      case Grading::mixed:
        return Grading::mixed;
      case Grading::even:
        (is_odd(chart.parity(i)) ? odd : even) = true;
        break;
      case Grading::odd:
        (is_odd(chart.parity(i)) ? even : odd) = true;
        break;
    }
  }
  if (even && odd) return Grading::mixed;
  if (!even && !odd) return Grading::zero;
  return even ? Grading::even : Grading::odd;
}

Parity field_parity(const Chart& chart, const VectorField& x) {
  switch (field_grading(chart, x)) {
    case Grading::mixed:
      throw homogeneity_error("vector field is not homogeneous");
    case Grading::odd:
      return Parity::odd;
    default:
      return Parity::even;
  }
}

bool operator==(const Table2& a, const Table2& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (!(a.data_[i] == b.data_[i])) return false;
  }
  return true;
}

VectorField Table21::on_pair(std::size_t i, std::size_t j) const {
  std::vector<Superfunction> comps;
  comps.reserve(n_);
  for (std::size_t k = 0; k < n_; ++k) comps.push_back((*this)(k, i, j));
  return VectorField(std::move(comps));
}

void Table21::set_pair(std::size_t i, std::size_t j, const VectorField& v) {
  if (v.size() != n_) throw signature_error("vector field of wrong dimension");
  for (std::size_t k = 0; k < n_; ++k) (*this)(k, i, j) = v[k];
}

Table21& Table21::operator+=(const Table21& other) {
  if (other.n_ != n_) throw signature_error("tensor tables of different dimension");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Table21& Table21::operator-=(const Table21& other) {
  if (other.n_ != n_) throw signature_error("tensor tables of different dimension");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Table21& Table21::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

bool operator==(const Table21& a, const Table21& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (!(a.data_[i] == b.data_[i])) return false;
  }
  return true;
}

bool operator==(const Table3& a, const Table3& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (!(a.data_[i] == b.data_[i])) return false;
  }
  return true;
}

}  // namespace superfed
