#include "altlab/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace altlab {

namespace {

SampleSpec spec_for(SampleKind kind, std::size_t dim, std::uint64_t seed, std::uint64_t index,
                    const IneqParams& params) {
  SampleSpec spec;
  spec.kind = kind;
  spec.dim = kind == SampleKind::kScalar ? 1 : dim;
  spec.a = params.a;
  spec.b = params.b;
  spec.campaign_seed = seed;
  spec.index = index;
  return spec;
}

SampleKind slot_kind(InputClass cls, std::size_t dim, std::uint64_t index, bool first_slot,
                     bool allow_singular) {
  switch (cls) {
    case InputClass::kGeneral: return SampleKind::kGeneral;
    case InputClass::kHermitian: return SampleKind::kHermitian;
    case InputClass::kBoundedPsd: return SampleKind::kPdSpectrum;
    case InputClass::kPsd: break;
  }
  if (dim == 1) return SampleKind::kScalar;
  if (!allow_singular) return SampleKind::kPsd;
  const auto phase = index % 10;
  if ((phase == 9 && first_slot) || (phase == 7 && !first_slot)) return SampleKind::kRankDeficient;
  return SampleKind::kPsd;
}

bool needs_definite(IneqId id, const IneqParams& params) {
  return id == IneqId::kWater && params.r * params.q < 0.0;
}

SampledInputs draw(IneqId id, const IneqParams& params, std::size_t dim, std::uint64_t seed,
                   std::uint64_t index, std::optional<SampleKind> forced) {
  const auto classes = input_classes(id);
  const bool both_positive = classes.a == InputClass::kPsd && classes.b == InputClass::kPsd;
  const bool allow_singular = !needs_definite(id, params);
  const bool commuting = both_positive && dim > 1 &&
                         (forced ? *forced == SampleKind::kCommutingPair
                                 : (allow_singular && index % 10 == 8));
  if (commuting) {
    auto [a, b] = sample_pair(spec_for(SampleKind::kCommutingPair, dim, seed, 2 * index, params));
    return {std::move(a), std::move(b), SampleKind::kCommutingPair, SampleKind::kCommutingPair};
  }
  auto kind_for = [&](InputClass cls, bool first) {
    if (forced && cls == InputClass::kPsd && *forced != SampleKind::kCommutingPair) {
      return dim == 1 && *forced != SampleKind::kRankDeficient ? SampleKind::kScalar : *forced;
    }
    return slot_kind(cls, dim, index, first, allow_singular);
  };
  const SampleKind ka = kind_for(classes.a, true);
  const SampleKind kb = kind_for(classes.b, false);
  return {sample(spec_for(ka, dim, seed, 2 * index, params)),
          sample(spec_for(kb, dim, seed, 2 * index + 1, params)), ka, kb};
}

template <typename T>
void require_nonempty(const std::vector<T>& grid, const char* name) {
  if (grid.empty()) throw std::invalid_argument(std::string("campaign: ") + name + " grid is empty");
}

}  // namespace

SampledInputs draw_inputs(IneqId id, const IneqParams& params, std::size_t dim,
                          std::uint64_t campaign_seed, std::uint64_t index) {
  return draw(id, params, dim, campaign_seed, index, std::nullopt);
}

SampledInputs draw_inputs(IneqId id, const IneqParams& params, std::size_t dim,
                          std::uint64_t campaign_seed, std::uint64_t index, SampleKind kind) {
  return draw(id, params, dim, campaign_seed, index, kind);
}

CampaignConfig default_campaign_config() {
  CampaignConfig c;
  c.ineqs.assign(all_inequalities().begin(), all_inequalities().end());
  c.dims = {1, 2, 3, 4, 6, 8};
  c.r_grid = {0.1, 0.3, 0.5, 0.7, 0.9, 1.5, 2.0, 4.0};
  c.q_grid = {-1.0, 0.5, 1.0, 2.0, 4.0};
  c.p_grid = {SchattenIndex(1.0), SchattenIndex(1.5), SchattenIndex(2.0), SchattenIndex(3.0),
              SchattenIndex::infinity()};
  c.spectrum_bounds = {{2.0, 1.0}, {10.0, 1.0}};
  return c;
}

void validate(const CampaignConfig& c) {
  require_nonempty(c.ineqs, "inequality");
  require_nonempty(c.dims, "dims");
  require_nonempty(c.r_grid, "r");
  require_nonempty(c.q_grid, "q");
  require_nonempty(c.p_grid, "p");
  require_nonempty(c.spectrum_bounds, "spectrum bounds (a, b)");
  if (c.samples == 0) throw std::invalid_argument("campaign: --samples must be >= 1");
  if (!(c.tolerance >= 0.0)) throw std::invalid_argument("campaign: --tol must be >= 0");
  for (auto d : c.dims) {
    if (d == 0 || d > 64) throw std::invalid_argument("campaign: dims must lie in [1, 64]");
  }
  for (double r : c.r_grid) {
    if (r < 0.0 || r > 8.0) {
      throw std::invalid_argument("campaign: r = " + std::to_string(r) + " outside [0, 8]");
    }
  }
  for (double q : c.q_grid) {
    if (std::abs(q) > 8.0) {
      throw std::invalid_argument("campaign: q = " + std::to_string(q) + " outside [-8, 8]");
    }
  }
  for (const auto& p : c.p_grid) {
    if (p.value() < 0.25) {
      throw std::invalid_argument("campaign: p = " + p.to_string() + " below 0.25");
    }
  }
  for (double t : c.t_grid) {
    if (t < 0.0 || t > 1.0) {
      throw std::invalid_argument("campaign: t = " + std::to_string(t) + " outside [0, 1]");
    }
  }
  for (const auto& [a, b] : c.spectrum_bounds) {
    if (!(b > 0.0 && a >= b)) {
      throw std::invalid_argument("campaign: spectrum bounds need a >= b > 0");
    }
  }
  if (expand_cells(c).empty()) {
    throw std::invalid_argument(
        "campaign: no valid parameter cell; check that the r/q/p/t grids fit the selected "
        "inequalities (e.g. t_family needs r <= 1, bourin needs r >= 1, general needs q, p >= 1)");
  }
}

std::vector<Cell> expand_cells(const CampaignConfig& c) {
  std::vector<Cell> cells;
  for (IneqId id : c.ineqs) {
    std::vector<IneqParams> grid;
    IneqParams base;
    switch (id) {
      case IneqId::kAlt:
      case IneqId::kWater:
      case IneqId::kWaterwine:
        for (double r : c.r_grid) {
          for (double q : c.q_grid) {
            base.r = r;
            base.q = q;
            grid.push_back(base);
          }
        }
        break;
      case IneqId::kTFamily:
        for (double r : c.r_grid) {
          for (double q : c.q_grid) {
            base.r = r;
            base.q = q;
            if (c.t_grid.empty()) {
              base.t = 1.0 - r;
              grid.push_back(base);
            }
            for (double t : c.t_grid) {
              base.t = t;
              grid.push_back(base);
            }
          }
        }
        break;
      case IneqId::kBourin:
        for (double r : c.r_grid) {
          for (const auto& [a, b] : c.spectrum_bounds) {
            base.r = r;
            base.a = a;
            base.b = b;
            grid.push_back(base);
          }
        }
        break;
      case IneqId::kTraceNormSpecial: grid.push_back(base); break;
      case IneqId::kHolder:
      case IneqId::kHolderCorollary:
        for (double q : c.q_grid) {
          if (q <= 0.0) continue;
          for (const auto& p : c.p_grid) {
            base.u = q;
            base.s = 2.0 * q;
            base.t = 2.0 * q;
            base.p = p;
            grid.push_back(base);
          }
        }
        break;
      case IneqId::kGeneralA:
      case IneqId::kLemmaSumDiff:
      case IneqId::kHermitianB:
      case IneqId::kGeneral:
        for (double q : c.q_grid) {
          for (const auto& p : c.p_grid) {
            base.q = q;
            base.p = p;
            grid.push_back(base);
          }
        }
        break;
      case IneqId::kProofSteps:
        for (double r : c.r_grid) {
          base.r = r;
          grid.push_back(base);
        }
        break;
    }
    for (std::size_t dim : c.dims) {
      for (const auto& params : grid) {
        if (param_violation(id, params)) continue;
        cells.push_back({id, dim, params, is_exploratory(id, params)});
      }
    }
  }
  return cells;
}

int CampaignResult::exit_status() const noexcept {
  if (proven_violations > 0) return 1;
  if (errors > 0) return 2;
  return 0;
}

CampaignResult run_campaign(const CampaignConfig& config, const RecordSink& sink,
                            const Evaluator& evaluator) {
  validate(config);
  const auto cells = expand_cells(config);
  std::size_t threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::clamp<std::size_t>(threads, 1, config.samples);

  CampaignResult result;
  std::vector<CampaignRecord> batch(config.samples);
  for (const Cell& cell : cells) {
    CheckContext ctx;
    ctx.tolerance = config.tolerance;
    ctx.seed = config.seed;

    auto evaluate_one = [&](std::size_t i) {
      CampaignRecord rec;
      rec.cell = cell;
      rec.index = i;
      try {
        const auto inputs = draw_inputs(cell.id, cell.params, cell.dim, config.seed, i);
        rec.kind_a = inputs.kind_a;
        rec.kind_b = inputs.kind_b;
        rec.report = evaluator ? evaluator(cell, inputs, ctx)
                               : evaluate(cell.id, inputs.a, inputs.b, cell.params, ctx);
      } catch (const std::exception& e) {
        rec.report.reset();
        rec.error = e.what();
      }
      batch[i] = std::move(rec);
    };

    if (threads == 1) {
      for (std::size_t i = 0; i < config.samples; ++i) evaluate_one(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < config.samples; i = next++) evaluate_one(i);
        });
      }
    }

    auto summary = std::find_if(result.summaries.begin(), result.summaries.end(),
                                [&](const auto& s) { return s.id == cell.id; });
    if (summary == result.summaries.end()) {
      result.summaries.push_back({cell.id, 0, 0, 0, 0, 0, std::numeric_limits<double>::infinity()});
      summary = std::prev(result.summaries.end());
    }
    result.has_exploratory_cells |= cell.exploratory;
    for (const auto& rec : batch) {
      ++summary->count;
      if (!rec.report) {
        ++summary->errors;
        ++result.errors;
      } else {
        const auto& rep = *rec.report;
        summary->min_relative_slack = std::min(summary->min_relative_slack, rep.relative_slack);
        if (rep.verdict == Verdict::kEquality) ++summary->equalities;
        if (rep.verdict == Verdict::kViolated) {
          if (cell.exploratory || rep.exploratory) {
            ++summary->exploratory_violations;
          } else {
            ++summary->violations;
            ++result.proven_violations;
          }
        }
      }
      if (sink) sink(rec);
    }
  }
  return result;
}

}  // namespace altlab
