#pragma once

#include <cstdint>
#include <string_view>
#include <optional>
#include <utility>

#include "altlab/matrix.hpp"

namespace altlab {

/// SplitMix64 (Steele, Lea, Flood). The whole sampler is built on this
/// generator so that samples are bit-reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1): top 53 bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard complex Gaussian (E|z|^2 = 1) by Box-Muller on two draws.
  Complex complex_gaussian() noexcept;

 private:
  std::uint64_t state_;
};

/// Per-sample seed: splitmix(campaign_seed XOR splitmix(index)), where
/// splitmix(x) is the first output of SplitMix64 seeded with x.
std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t index) noexcept;

enum class SampleKind {
  kGeneral,        // i.i.d. standard complex Gaussian entries
  kHermitian,      // (G + G*) / 2
  kPsd,            // G G* / dim
  kPdSpectrum,     // V diag(uniform[b, a]) V*, V Haar
  kCommutingPair,  // V D1 V*, V D2 V* with a shared Haar V
  kScalar,         // 1 x 1 positive
  kRankDeficient,  // G_k G_k* / dim with G_k of width dim - ceil(dim / 2)
};

std::string_view to_string(SampleKind kind) noexcept;
std::optional<SampleKind> parse_sample_kind(std::string_view name) noexcept;

struct SampleSpec {
  SampleKind kind = SampleKind::kPsd;
  std::size_t dim = 1;
  /// Spectrum bounds for kPdSpectrum.
  double a = 2.0;
  double b = 1.0;
  std::uint64_t campaign_seed = 0;
  std::uint64_t index = 0;
};

/// Throws std::invalid_argument for dim = 0 or pd_spectrum bounds that are
/// not a >= b > 0.
void validate(const SampleSpec& spec);

/// Pure function of `spec`. For kCommutingPair returns the first matrix of
/// the pair; kScalar ignores dim.
ComplexMatrix sample(const SampleSpec& spec);

/// Both matrices of a kCommutingPair sample.
std::pair<ComplexMatrix, ComplexMatrix> sample_pair(const SampleSpec& spec);

/// Haar unitary from the polar factor of a Gaussian matrix.
ComplexMatrix haar_unitary(std::size_t dim, SplitMix64& rng);

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng);

}  // namespace altlab
