#include "altlab/probe.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "altlab/campaign.hpp"
#include "altlab/functions.hpp"
#include "altlab/spectral.hpp"

namespace altlab {

namespace {

constexpr double kInitialStep = 0.5;
constexpr double kFinalStep = 1e-3;
constexpr std::uint64_t kProbeStream = 0x70726f6265ULL;  // "probe"

enum class Move { kAdditive, kRotate, kSpectrum };

ComplexMatrix additive(const ComplexMatrix& m, double eps, SplitMix64& rng) {
  const std::size_t n = m.rows();
  const double norm = m.frobenius_norm();
  const double scale = eps * (norm > 0.0 ? norm / std::sqrt(static_cast<double>(n)) : 1.0);
  ComplexMatrix step = gaussian_matrix(n, n, rng);
  step *= scale;
  return m + step;
}

// Eigenvectors turned by the unitary factor of I + i eps K, K Hermitian
// Gaussian. Keeps the spectrum, so degenerate eigenvalues stay degenerate.
ComplexMatrix rotate(const EigenDecomposition& d, double eps, SplitMix64& rng) {
  const std::size_t n = d.eigenvalues.size();
  const auto k = HermitianMatrix::project(gaussian_matrix(n, n, rng));
  const ComplexMatrix turn = polar(ComplexMatrix::identity(n) + Complex(0.0, eps) * k.matrix()).unitary;
  return spectral_synthesis(d.eigenvectors * turn, d.eigenvalues);
}

ComplexMatrix perturb(const ComplexMatrix& m, InputClass cls, double eps, const IneqParams& params,
                      Move move, SplitMix64& rng) {
  if (cls == InputClass::kGeneral) return additive(m, eps, rng);
  if (move == Move::kAdditive) {
    switch (cls) {
      case InputClass::kHermitian: return HermitianMatrix::project(additive(m, eps, rng)).matrix();
      case InputClass::kPsd: return modulus(additive(m, eps, rng)).matrix();
      case InputClass::kBoundedPsd: {
        auto d = hermitian_eig(HermitianMatrix::project(modulus(additive(m, eps, rng)).matrix()));
        for (double& w : d.eigenvalues) w = std::clamp(w, params.b, params.a);
        return HermitianMatrix::project(d.reconstruct()).matrix();
      }
      case InputClass::kGeneral: break;
    }
    return m;
  }
  auto d = hermitian_eig(HermitianMatrix::project(m));
  if (move == Move::kRotate) return HermitianMatrix::project(rotate(d, eps, rng)).matrix();
  // Spectrum move: multiplicative for positive slots, additive for Hermitian.
  double top = 0.0;
  for (double w : d.eigenvalues) top = std::max(top, std::abs(w));
  for (double& w : d.eigenvalues) {
    const double g = rng.complex_gaussian().real() * std::sqrt(2.0);
    if (cls == InputClass::kHermitian) {
      w += eps * (top > 0.0 ? top : 1.0) * g;
    } else {
      w = std::max(w, 0.0) * std::exp(eps * g);
      if (cls == InputClass::kBoundedPsd) w = std::clamp(w, params.b, params.a);
    }
  }
  return HermitianMatrix::project(d.reconstruct()).matrix();
}

struct Evaluation {
  double ratio;
  bool anomalous;
};

struct RestartOutcome {
  std::size_t restart = 0;
  bool found = false;
  double best_ratio = 0.0;
  std::size_t best_iteration = 0;
  ComplexMatrix a;
  ComplexMatrix b;
  std::vector<TrajectoryPoint> improvements;
  std::vector<Anomaly> anomalies;
};

}  // namespace

std::optional<double> tightness_ratio(IneqId id, const ComplexMatrix& a, const ComplexMatrix& b,
                                      const IneqParams& params) {
  try {
    const auto rep = evaluate(id, a, b, params);
    if (!(rep.rhs > 0.0)) return std::nullopt;
    return rep.lhs / rep.rhs;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  } catch (const std::domain_error&) {
    return std::nullopt;
  } catch (const std::range_error&) {
    return std::nullopt;
  } catch (const ConvergenceError&) {
    return std::nullopt;
  }
}

Witness probe_tightness(const ProbeOptions& options) {
  if (options.budget == 0) throw std::invalid_argument("probe: budget must be >= 1");
  if (options.dim == 0) throw std::invalid_argument("probe: dim must be >= 1");
  if (!is_ratio_type(options.id)) {
    throw std::invalid_argument("probe: '" + std::string(to_string(options.id)) +
                                "' reports a Loewner margin, not a ratio");
  }
  if (auto why = param_violation(options.id, options.params)) {
    throw std::invalid_argument("probe: " + *why);
  }

  const bool exploratory = is_exploratory(options.id, options.params);
  const auto classes = input_classes(options.id);
  const std::size_t budget = options.budget;
  const std::size_t restart_length = std::max<std::size_t>(1, budget / 10);
  const std::size_t restarts = (budget + restart_length - 1) / restart_length;

  auto step_size = [&](std::size_t iteration) {
    if (restart_length == 1) return kInitialStep;
    const double progress = static_cast<double>(iteration) / static_cast<double>(restart_length - 1);
    return kInitialStep * std::pow(kFinalStep / kInitialStep, progress);
  };

  auto score = [&](const ComplexMatrix& a, const ComplexMatrix& b) -> std::optional<Evaluation> {
    auto ratio = tightness_ratio(options.id, a, b, options.params);
    if (!ratio) return std::nullopt;
    if (exploratory || *ratio <= 1.0 + options.tolerance) return Evaluation{*ratio, false};
    // Re-evaluate with a tightened eigensolver before calling it an anomaly.
    ScopedJacobiOptions tight({1e-16, 400});
    auto refined = tightness_ratio(options.id, a, b, options.params);
    if (!refined) return std::nullopt;
    return Evaluation{*refined, *refined > 1.0 + options.tolerance};
  };

  auto run_restart = [&](std::size_t restart) {
    RestartOutcome out;
    out.restart = restart;
    const std::size_t first = restart * restart_length;
    const std::size_t last = std::min(budget, first + restart_length);
    SplitMix64 rng(derive_seed(options.seed ^ kProbeStream, restart));

    SampledInputs start =
        options.initializer
            ? draw_inputs(options.id, options.params, options.dim, options.seed, restart,
                          *options.initializer)
            : draw_inputs(options.id, options.params, options.dim, options.seed, restart);
    ComplexMatrix a = std::move(start.a);
    ComplexMatrix b = std::move(start.b);
    double current = -1.0;
    bool have_current = false;

    auto consider = [&](std::size_t iteration, ComplexMatrix&& ca, ComplexMatrix&& cb) {
      auto eval = score(ca, cb);
      if (!eval) return;
      if (eval->anomalous) out.anomalies.push_back({iteration, eval->ratio, ca, cb});
      if (have_current && !(eval->ratio > current)) return;
      have_current = true;
      current = eval->ratio;
      a = std::move(ca);
      b = std::move(cb);
      out.found = true;
      out.best_ratio = current;
      out.best_iteration = iteration;
      out.a = a;
      out.b = b;
      out.improvements.push_back({iteration, current});
    };

    consider(first, ComplexMatrix(a), ComplexMatrix(b));
    for (std::size_t it = first + 1; it < last; ++it) {
      const double eps = step_size(it - first);
      // Cycle: perturb A, then B, then both.
      const auto phase = (it - first) % 3;
      const auto move = static_cast<Move>(((it - first) / 3) % 3);
      ComplexMatrix ca = phase == 1 ? a : perturb(a, classes.a, eps, options.params, move, rng);
      ComplexMatrix cb = phase == 0 ? b : perturb(b, classes.b, eps, options.params, move, rng);
      if (!have_current) {
        // The starting point was rejected; take the proposal unconditionally.
        a = ca;
        b = cb;
      }
      consider(it, std::move(ca), std::move(cb));
    }
    return out;
  };

  std::vector<RestartOutcome> outcomes(restarts);
  std::size_t threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<std::size_t>(threads, 1, restarts);
  if (threads == 1) {
    for (std::size_t k = 0; k < restarts; ++k) outcomes[k] = run_restart(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < restarts; k = next++) outcomes[k] = run_restart(k);
      });
    }
  }

  Witness w;
  w.id = options.id;
  w.params = options.params;
  w.dim = options.dim;
  w.budget = budget;
  w.seed = options.seed;
  w.exploratory = exploratory;
  const RestartOutcome* best = nullptr;
  for (const auto& o : outcomes) {
    if (o.found && (!best || o.best_ratio > best->best_ratio)) best = &o;
    for (const auto& an : o.anomalies) w.anomalies.push_back(an);
  }
  if (!best) {
    throw std::runtime_error("probe: no admissible point found (every proposal had rhs <= 0)");
  }
  w.a = best->a;
  w.b = best->b;
  w.best_ratio = best->best_ratio;
  w.best_iteration = best->best_iteration;

  // Restarts own disjoint iteration ranges in order, so concatenation is
  // already sorted by iteration.
  double running = -std::numeric_limits<double>::infinity();
  for (const auto& o : outcomes) {
    for (const auto& pt : o.improvements) {
      if (pt.ratio > running) {
        running = pt.ratio;
        w.trajectory.push_back(pt);
      }
    }
  }
  return w;
}

}  // namespace altlab
