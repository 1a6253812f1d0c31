#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altlab/inequalities.hpp"
#include "altlab/sampling.hpp"

namespace altlab {

/// The (A, B) inputs of campaign sample `index`: matrix A is SampleSpec index
/// 2 * index and B is 2 * index + 1 (a commuting pair uses 2 * index for both).
struct SampledInputs {
  ComplexMatrix a;
  ComplexMatrix b;
  SampleKind kind_a;
  SampleKind kind_b;
};

/// Input classes per slot follow `input_classes(id)`. dim 1 uses scalars for
/// positive slots. Indices cycle through generic, rank-deficient and
/// commuting inputs so every campaign exercises the degenerate paths.
SampledInputs draw_inputs(IneqId id, const IneqParams& params, std::size_t dim,
                          std::uint64_t campaign_seed, std::uint64_t index);

/// Same, with every positive slot drawn from `kind` (e.g. kCommutingPair).
SampledInputs draw_inputs(IneqId id, const IneqParams& params, std::size_t dim,
                          std::uint64_t campaign_seed, std::uint64_t index, SampleKind kind);

enum class OutputFormat { kJsonl, kCsv };

struct CampaignConfig {
  std::vector<IneqId> ineqs;
  std::vector<std::size_t> dims;
  std::vector<double> r_grid;
  std::vector<double> q_grid;
  std::vector<SchattenIndex> p_grid;
  /// Empty: the t-family runs at its sharp end t = 1 - r.
  std::vector<double> t_grid;
  /// (a, b) spectrum bounds for the Bourin sandwich.
  std::vector<std::pair<double, double>> spectrum_bounds;
  std::size_t samples = 20;
  std::uint64_t seed = 42;
  double tolerance = kDefaultTolerance;
  OutputFormat format = OutputFormat::kJsonl;
  /// 0 = hardware concurrency.
  std::size_t threads = 0;
};

CampaignConfig default_campaign_config();

/// Throws std::invalid_argument with a message naming the offending field.
void validate(const CampaignConfig& config);

/// One parameter cell of one inequality.
struct Cell {
  IneqId id;
  std::size_t dim;
  IneqParams params;
  bool exploratory;
};

/// Cells in output order. Grid points outside an inequality's domain are
/// skipped (Hölder takes u from the q grid with s = t = 2u).
std::vector<Cell> expand_cells(const CampaignConfig& config);

struct CampaignRecord {
  Cell cell;
  std::uint64_t index = 0;
  SampleKind kind_a{};
  SampleKind kind_b{};
  std::optional<IneqReport> report;
  /// Set instead of `report` when the checker threw.
  std::optional<std::string> error;
};

struct InequalitySummary {
  IneqId id{};
  std::size_t count = 0;
  std::size_t violations = 0;
  std::size_t exploratory_violations = 0;
  std::size_t equalities = 0;
  std::size_t errors = 0;
  double min_relative_slack = 0.0;
};

struct CampaignResult {
  std::vector<InequalitySummary> summaries;
  std::size_t proven_violations = 0;
  std::size_t errors = 0;
  bool has_exploratory_cells = false;

  /// 0 iff no proven-regime violation and no evaluation error; 1 for
  /// violations; 2 for errors only.
  int exit_status() const noexcept;
};

using RecordSink = std::function<void(const CampaignRecord&)>;
using Evaluator = std::function<IneqReport(const Cell&, const SampledInputs&, const CheckContext&)>;

/// Evaluates every (cell, sample) pair and hands records to `sink` in
/// (inequality, cell, index) order, independent of the thread count.
/// `evaluator` replaces the registry dispatch (used for harness mutation
/// tests).
CampaignResult run_campaign(const CampaignConfig& config, const RecordSink& sink,
                            const Evaluator& evaluator = {});

}  // namespace altlab
