#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superfed/geometry.hpp"

namespace superfed {

/// N defined by nabla0_X omega(Y,Z) = (-1)^{|omega||X|} omega(N(X,Y), Z).
struct NTensor {
  Table21 components;
};

/// A (2,1) tensor S used to move between connections: nabla' = nabla + S.
struct STensor {
  Table21 components;
};

/// Totally graded symmetric cochain B_{ijk} = omega(S(d_i,d_j), d_k).
struct SCochain {
  Table3 components;
  Parity parity = Parity::even;
};

/// One evaluated identity: passes iff the residual is the zero superfunction.
struct Check {
  std::string identity;
  std::vector<std::size_t> indices;
  Superfunction residual;
  bool passed = true;
};

class VerificationReport {
 public:
  void add(std::string identity, std::vector<std::size_t> indices, Superfunction residual);

  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool passed() const noexcept { return failures_ == 0; }
  std::size_t failures() const noexcept { return failures_; }
  /// First failing check of `identity` (any identity when empty), or null.
  const Check* first_failure(std::string_view identity = {}) const;
  bool passed(std::string_view identity) const { return first_failure(identity) == nullptr; }

  void append(const VerificationReport& other);

 private:
  std::vector<Check> checks_;
  std::size_t failures_ = 0;
};

namespace identity {
inline constexpr const char* torsion = "torsion";
inline constexpr const char* compatibility = "compatibility";
inline constexpr const char* supersymmetry = "supersymmetry";
inline constexpr const char* total_symmetry = "total_symmetry";
inline constexpr const char* n_antisymmetry = "n_antisymmetry";
inline constexpr const char* n_cyclic = "n_cyclic";
}  // namespace identity

/// Solves for N one coordinate pair at a time; throws precondition_error if
/// `base` is not symmetric.
NTensor extract_n(const Chart& chart, const Connection& base, const TwoForm& omega);

/// Gamma^k_{ij} = Gamma0^k_{ij} + N^k_{ij}/3 + (-1)^{|i||j|} N^k_{ji}/3.
Connection fedosov_correct(const Chart& chart, const Connection& base, const NTensor& n);
Connection fedosov_correct(const Chart& chart, const Connection& base, const TwoForm& omega);

/// Torsion components for every coordinate pair and nabla omega for every
/// coordinate triple.
VerificationReport verify_symplectic(const Chart& chart, const Connection& c,
                                     const TwoForm& omega);

/// omega(N(d_i,d_j), d_k) + (-1)^{|j||k|} omega(N(d_i,d_k), d_j) on all triples.
VerificationReport check_n_antisymmetry(const Chart& chart, const TwoForm& omega,
                                        const NTensor& n);

/// Cyclic identity of N, valid for closed omega, on all triples.
VerificationReport check_n_cyclic(const Chart& chart, const TwoForm& omega, const NTensor& n);

/// Symmetry and parity defects of a cochain.
std::vector<IndexedResidual> cochain_violations(const Chart& chart, const SCochain& b);

/// The S with omega(S(d_i,d_j), d_k) = B_{ijk}; throws precondition_error if
/// B is not totally graded symmetric.
STensor s_from_cochain(const Chart& chart, const TwoForm& omega, const SCochain& b);

/// Supersymmetry of S and graded symmetry of omega(S(X,Y),Z) in (Y,Z).
VerificationReport check_admissible(const Chart& chart, const TwoForm& omega, const STensor& s);

/// Gamma'^k_{ij} = Gamma^k_{ij} + S^k_{ij}.
Connection deform(const Connection& c, const STensor& s);

/// C' - C'' as a tensor.
STensor difference(const Connection& a, const Connection& b);

/// t a + (1 - t) b.
Connection affine_combination(const Connection& a, const Connection& b, const Rational& t);

/// Deterministic random cochain of the given parity with polynomial entries
/// of degree at most `degree` (odd generators count towards the degree).
SCochain random_cochain(const Chart& chart, Parity parity, unsigned degree, std::uint64_t seed);

}  // namespace superfed
