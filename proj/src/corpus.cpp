#include "superfed/corpus.hpp"

#include <algorithm>

#include "superfed/errors.hpp"
#include "superfed/sampling.hpp"

namespace superfed {

std::vector<CorpusConfig> corpus_configurations() {
  std::vector<CorpusConfig> out;
  for (std::size_t p : {2, 4}) {
    for (std::size_t q = 0; q <= 3; ++q) out.push_back({p, q, Parity::even});
  }
  out.push_back({2, 2, Parity::odd});
  return out;
}

BilinearForm darboux_form(const Chart& chart, Parity parity) {
  const Signature sig = chart.signature();
  BilinearForm form = BilinearForm::zero(chart, parity);
  std::vector<std::size_t> evens;
  std::vector<std::size_t> odds;
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    (is_odd(chart.parity(i)) ? odds : evens).push_back(i);
  }
  const Superfunction one = chart.constant(Rational(1));
  if (!is_odd(parity)) {
    if (sig.even % 2 != 0) throw precondition_error("even Darboux form needs an even p");
    const std::size_t half = sig.even / 2;
    for (std::size_t a = 0; a < half; ++a) {
      form.gram(evens[a], evens[a + half]) = one;
      form.gram(evens[a + half], evens[a]) = -one;
    }
    for (std::size_t b : odds) form.gram(b, b) = one;
  } else {
    if (sig.even != sig.odd) throw precondition_error("odd Darboux form needs p == q");
    for (std::size_t a = 0; a < sig.even; ++a) {
      form.gram(evens[a], odds[a]) = one;
      form.gram(odds[a], evens[a]) = -one;
    }
  }
  return form;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string CorpusInstance::label() const {
  return "#" + std::to_string(index) + " R^(" + std::to_string(config.p) + "|" +
         std::to_string(config.q) + ") " + std::string(to_string(config.parity)) + " omega";
}

CorpusInstance make_corpus_instance(std::size_t index, std::uint64_t seed,
                                    const CorpusConfig& config) {
  Chart chart = Chart::standard(config.p, config.q);
  const BilinearForm base = darboux_form(chart, config.parity);
  Sampler sampler(mix_seed(seed, index));
  // Sparser 1-forms on bigger charts keep expression swell bounded.
  const unsigned keep_den = std::max(3u, static_cast<unsigned>(chart.dimension()));
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Superfunction> alpha;
    for (std::size_t j = 0; j < chart.dimension(); ++j) {
      alpha.push_back(sampler.superfunction(chart.signature(), config.parity + chart.parity(j),
                                            2, 1, keep_den));
    }
    BilinearForm d_alpha = d_one_form(chart, alpha, config.parity);
    bool constant = true;
    for (std::size_t i = 0; i < chart.dimension() && constant; ++i) {
      for (std::size_t j = 0; j < chart.dimension() && constant; ++j) {
        const Superfunction& f = d_alpha.gram(i, j);
        constant = f.is_zero() || (f.components().size() == 1 &&
                                   f.components().front().first == 0 &&
                                   f.components().front().second.is_constant());
      }
    }
    if (constant) continue;
    BilinearForm omega = base;
    for (std::size_t i = 0; i < chart.dimension(); ++i) {
      for (std::size_t j = 0; j < chart.dimension(); ++j) {
        omega.gram(i, j) += d_alpha.gram(i, j);
      }
    }
    try {
      TwoForm form = TwoForm::make(chart, omega);
      return {index, seed, config, chart, std::move(d_alpha), std::move(form)};
    } catch (const degenerate_form_error&) {
      // resample
    }
  }
  throw error("could not sample a nondegenerate form for corpus instance " +
              std::to_string(index));
}

std::vector<CorpusInstance> make_corpus(std::size_t count, std::uint64_t seed) {
  const auto configs = corpus_configurations();
  std::vector<CorpusInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(make_corpus_instance(i, seed, configs[i % configs.size()]));
  }
  return out;
}

}  // namespace superfed
