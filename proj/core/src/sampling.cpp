#include "altlab/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "altlab/functions.hpp"

namespace altlab {

namespace {

constexpr std::array<std::string_view, 7> kKindNames = {
    "general", "hermitian", "psd", "pd_spectrum", "commuting_pair", "scalar", "rank_deficient"};

ComplexMatrix gram(const ComplexMatrix& g, std::size_t dim) {
  ComplexMatrix p = g * g.adjoint();
  p *= 1.0 / static_cast<double>(dim);
  return p;
}

}  // namespace

Complex SplitMix64::complex_gaussian() noexcept {
  // u1 in (0, 1] keeps the logarithm finite.
  const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform();
  const double radius = std::sqrt(-std::log(u1));  // sqrt(-2 ln u1) / sqrt(2)
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t index) noexcept {
  return SplitMix64(campaign_seed ^ SplitMix64(index).next()).next();
}

std::string_view to_string(SampleKind kind) noexcept {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<SampleKind> parse_sample_kind(std::string_view name) noexcept {
  for (std::size_t k = 0; k < kKindNames.size(); ++k) {
    if (kKindNames[k] == name) return static_cast<SampleKind>(k);
  }
  return std::nullopt;
}

void validate(const SampleSpec& spec) {
  if (spec.dim == 0) throw std::invalid_argument("SampleSpec: dim must be >= 1");
  if (spec.kind == SampleKind::kPdSpectrum && !(spec.b > 0.0 && spec.a >= spec.b)) {
    throw std::invalid_argument("SampleSpec: pd_spectrum needs a >= b > 0 (got a = " +
                                std::to_string(spec.a) + ", b = " + std::to_string(spec.b) + ")");
  }
}

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) z = rng.complex_gaussian();
  return g;
}

ComplexMatrix haar_unitary(std::size_t dim, SplitMix64& rng) {
  return polar(gaussian_matrix(dim, dim, rng)).unitary;
}

std::pair<ComplexMatrix, ComplexMatrix> sample_pair(const SampleSpec& spec) {
  validate(spec);
  SplitMix64 rng(derive_seed(spec.campaign_seed, spec.index));
  const std::size_t n = spec.dim;
  const auto v = haar_unitary(n, rng);
  std::vector<double> d1(n);
  std::vector<double> d2(n);
  for (auto& x : d1) x = std::norm(rng.complex_gaussian());
  for (auto& x : d2) x = std::norm(rng.complex_gaussian());
  return {HermitianMatrix::project(spectral_synthesis(v, d1)).matrix(),
          HermitianMatrix::project(spectral_synthesis(v, d2)).matrix()};
}

ComplexMatrix sample(const SampleSpec& spec) {
  validate(spec);
  if (spec.kind == SampleKind::kCommutingPair) return sample_pair(spec).first;

  SplitMix64 rng(derive_seed(spec.campaign_seed, spec.index));
  const std::size_t n = spec.dim;
  switch (spec.kind) {
    case SampleKind::kGeneral: return gaussian_matrix(n, n, rng);
    case SampleKind::kHermitian: {
      const auto g = gaussian_matrix(n, n, rng);
      return HermitianMatrix::project(g).matrix();
    }
    case SampleKind::kPsd: return gram(gaussian_matrix(n, n, rng), n);
    case SampleKind::kPdSpectrum: {
      const auto v = haar_unitary(n, rng);
      std::vector<double> d(n);
      for (auto& x : d) x = spec.b + (spec.a - spec.b) * rng.uniform();
      return HermitianMatrix::project(spectral_synthesis(v, d)).matrix();
    }
    case SampleKind::kScalar: {
      const double x = std::norm(rng.complex_gaussian());
      return ComplexMatrix(1, 1, {Complex(x > 0.0 ? x : 1.0, 0.0)});
    }
    case SampleKind::kRankDeficient: {
      const std::size_t rank = n - (n + 1) / 2;
      if (rank == 0) return ComplexMatrix(n, n);
      return gram(gaussian_matrix(n, rank, rng), n);
    }
    case SampleKind::kCommutingPair: break;
  }
  throw std::invalid_argument("sample: unknown kind");
}

}  // namespace altlab
