#pragma once

#include <memory>
#include <span>
#include <vector>

#include "superfed/tensors.hpp"

namespace superfed {

/// A nonzero residual of some identity together with the coordinate
/// indices (0-based) at which it was evaluated.
struct IndexedResidual {
  std::vector<std::size_t> indices;
  Superfunction residual;
};

/// X(f) = sum_i X^i d_i f.
Superfunction apply(const Chart& chart, const VectorField& x, const Superfunction& f);

/// Graded commutator [X,Y] = XY - (-1)^{|X||Y|} YX as a derivation.
VectorField lie_bracket(const Chart& chart, const VectorField& x, const VectorField& y);

/// g(X, Y) extended from the Gram matrix by graded bilinearity:
/// g(fX, Y) = (-1)^{|f||g|} f g(X,Y) and g(X, fY) = (-1)^{|f|(|g|+|X|)} f g(X,Y).
Superfunction form_eval(const Chart& chart, const BilinearForm& g, const VectorField& x,
                        const VectorField& y);

/// nabla_X Y = sum_i X^i [ (d_i Y^k) d_k + (-1)^{|d_i||Y^j|} Y^j Gamma^k_{ij} d_k ].
VectorField covariant_derivative(const Chart& chart, const Connection& c, const VectorField& x,
                                 const VectorField& y);

/// T(X,Y) = nabla_X Y - (-1)^{|X||Y|} nabla_Y X - [X,Y].
VectorField torsion(const Chart& chart, const Connection& c, const VectorField& x,
                    const VectorField& y);

/// (nabla_X g)(Y,Z) = X(g(Y,Z)) - (-1)^{|X||g|} g(nabla_X Y, Z)
///                    - (-1)^{|X|(|Y|+|g|)} g(Y, nabla_X Z).
Superfunction covariant_derivative_bilinear(const Chart& chart, const Connection& c,
                                            const BilinearForm& g, const VectorField& x,
                                            const VectorField& y, const VectorField& z);

/// Table of (nabla_{d_i} g)(d_j, d_k) over all coordinate triples. Agrees
/// with covariant_derivative_bilinear on coordinate fields.
Table3 compatibility_residuals(const Chart& chart, const Connection& c, const BilinearForm& g);

/// Entries whose parity differs from |g| + |d_i| + |d_j|.
std::vector<IndexedResidual> parity_violations(const Chart& chart, const BilinearForm& g);

/// Residuals g_ij + (-1)^{|d_i||d_j|} g_ji that fail to vanish.
std::vector<IndexedResidual> antisymmetry_violations(const Chart& chart, const BilinearForm& g);

struct ClosednessCheck {
  bool closed = true;
  /// residuals(i,j,k) for every coordinate triple.
  Table3 residuals;
};

/// Coordinate form of d omega = 0:
/// (-1)^{|w||i|} d_i w_jk - (-1)^{|j|(|w|+|i|)} d_j w_ik + (-1)^{|k|(|w|+|i|+|j|)} d_k w_ij.
ClosednessCheck is_closed(const Chart& chart, const BilinearForm& omega);

/// d alpha for a covector with components alpha_j = alpha(d_j) of parity
/// |alpha| + |d_j|. The result has parity |alpha| and Gram entries
/// (-1)^{|alpha||i|} d_i alpha_j - (-1)^{|j|(|alpha|+|i|)} d_j alpha_i.
BilinearForm d_one_form(const Chart& chart, std::span<const Superfunction> alpha,
                        Parity parity);

/// Determinant of the body (theta-free part) of the Gram matrix.
RationalFunction body_determinant(const Chart& chart, const BilinearForm& g);

/// Inverse of the signed Gram matrix used to solve omega(V, d_k) = t_k.
///
/// Built once by Gauss-Jordan column elimination with invertible-body pivots;
/// throws degenerate_form_error when no such pivot exists.
class OmegaSolver {
 public:
  OmegaSolver(const Chart& chart, const BilinearForm& omega);

  /// The unique V of parity `v_parity` with form_eval(omega, V, d_k) = targets[k].
  VectorField solve(std::span<const Superfunction> targets, Parity v_parity) const;

 private:
  std::size_t n_;
  Signature sig_;
  Parity omega_parity_;
  Table2 inverse_;
};

/// A homogeneous, graded antisymmetric, closed and nondegenerate two-form.
class TwoForm {
 public:
  /// Validates every invariant; throws invariant_violation or
  /// degenerate_form_error naming the first failure.
  static TwoForm make(const Chart& chart, BilinearForm omega);

  const BilinearForm& form() const noexcept { return form_; }
  Parity parity() const noexcept { return form_.parity; }
  const Superfunction& operator()(std::size_t i, std::size_t j) const { return form_.gram(i, j); }
  const OmegaSolver& solver() const noexcept { return *solver_; }

 private:
  TwoForm(BilinearForm form, std::shared_ptr<const OmegaSolver> solver)
      : form_(std::move(form)), solver_(std::move(solver)) {}

  BilinearForm form_;
  std::shared_ptr<const OmegaSolver> solver_;
};

/// Solves form_eval(omega, V, d_k) = targets[k] for V of parity `v_parity`.
VectorField solve_against_omega(const Chart& chart, const BilinearForm& omega,
                                std::span<const Superfunction> targets, Parity v_parity);
VectorField solve_against_omega(const TwoForm& omega, std::span<const Superfunction> targets,
                                Parity v_parity);

/// Christoffel entries whose parity differs from |i| + |j| + |k|.
std::vector<IndexedResidual> connection_parity_violations(const Chart& chart,
                                                          const Connection& c);

/// Gamma^k_{ij} == (-1)^{|i||j|} Gamma^k_{ji} for all indices.
bool is_symmetric(const Chart& chart, const Connection& c);

}  // namespace superfed
