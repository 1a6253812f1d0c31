#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "altlab/inequalities.hpp"
#include "altlab/sampling.hpp"

namespace altlab {

struct TrajectoryPoint {
  std::size_t iteration;
  double ratio;
};

/// A point whose ratio exceeded 1 + tol in a proven regime even after the
/// tightened re-evaluation.
struct Anomaly {
  std::size_t iteration;
  double ratio;
  ComplexMatrix a;
  ComplexMatrix b;
};

/// Best inputs found by a tightness probe.
struct Witness {
  IneqId id{};
  IneqParams params;
  std::size_t dim = 0;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  ComplexMatrix a;
  ComplexMatrix b;
  double best_ratio = 0.0;
  std::size_t best_iteration = 0;
  /// Running best, non-decreasing.
  std::vector<TrajectoryPoint> trajectory;
  bool exploratory = false;
  std::vector<Anomaly> anomalies;
};

struct ProbeOptions {
  IneqId id = IneqId::kWaterwine;
  IneqParams params;
  std::size_t dim = 3;
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  /// Draw positive slots of every restart from this kind.
  std::optional<SampleKind> initializer;
  double tolerance = kDefaultTolerance;
  /// Restarts run on this many workers (0 = hardware concurrency).
  std::size_t threads = 1;
};

/// Random-restart hill climbing on lhs / rhs. Each step perturbs A, B or
/// both and keeps the proposal if the ratio improves. Moves rotate through
///   - additive: m + eps * scale * G, projected back onto the input class
///     (modulus for positive slots, spectrum clamped to [b, a] for bounded);
///   - rotate: eigenvectors turned by a near-identity unitary, spectrum kept;
///   - spectrum: eigenvalues scaled by exp(eps * g) (shifted for Hermitian).
/// General slots always use the additive move. eps decays geometrically from
/// 0.5 to 1e-3 within each restart; every budget / 10 iterations a fresh
/// sample starts a new restart. Deterministic in `seed`.
///
/// Throws std::invalid_argument for budget 0, dim 0, a non-ratio inequality
/// or parameters outside the checker's domain.
Witness probe_tightness(const ProbeOptions& options);

/// lhs / rhs of the inequality at (a, b); nullopt when rhs <= 0 or the
/// checker rejects the inputs.
std::optional<double> tightness_ratio(IneqId id, const ComplexMatrix& a, const ComplexMatrix& b,
                                      const IneqParams& params);

}  // namespace altlab
