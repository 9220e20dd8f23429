#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superfed/geometry.hpp"

namespace superfed {

/// Shape of a randomized test chart R^(p|q) with a form of parity |omega|.
struct CorpusConfig {
  std::size_t p = 0;
  std::size_t q = 0;
  Parity parity = Parity::even;
};

/// Even forms for p in {2,4}, q in {0..3}; odd forms where p == q.
std::vector<CorpusConfig> corpus_configurations();

/// Constant Darboux-type Gram matrix: x_a paired with x_{a+p/2} and
/// theta_b with itself for even forms, x_a paired with theta_a for odd
/// forms. Throws precondition_error when no such form exists.
BilinearForm darboux_form(const Chart& chart, Parity parity);

struct CorpusInstance {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  CorpusConfig config;
  Chart chart;
  BilinearForm alpha_form;  // d(alpha) part of omega
  TwoForm omega;

  std::string label() const;
};

/// omega = darboux + d(alpha) for a random 1-form alpha of degree <= 2,
/// resampled until nondegenerate. Deterministic in (index, seed).
CorpusInstance make_corpus_instance(std::size_t index, std::uint64_t seed,
                                    const CorpusConfig& config);

/// `count` instances cycling through corpus_configurations().
std::vector<CorpusInstance> make_corpus(std::size_t count, std::uint64_t seed);

/// SplitMix64 step, used to derive independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept;

}  // namespace superfed
