#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "altlab/campaign.hpp"
#include "altlab/matrix_io.hpp"
#include "altlab/probe.hpp"
#include "altlab/report_io.hpp"

namespace altlab::cli {

namespace {

IneqId ineq_or_throw(const std::string& name) {
  if (auto id = parse_ineq_id(name)) return *id;
  throw std::invalid_argument("unknown inequality '" + name + "'");
}

IneqParams apply(const ScalarParams& s, IneqParams p) {
  if (s.r) p.r = *s.r;
  if (s.q) p.q = *s.q;
  if (s.t) p.t = *s.t;
  if (s.s) p.s = *s.s;
  if (s.u) p.u = *s.u;
  if (s.a) p.a = *s.a;
  if (s.b) p.b = *s.b;
  if (s.p) p.p = SchattenIndex::parse(*s.p);
  return p;
}

void check_params(IneqId id, const IneqParams& p) {
  if (auto why = param_violation(id, p)) {
    throw std::invalid_argument(std::string(to_string(id)) + ": " + *why);
  }
}

// Output stream that is either stdout or a file.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }
  void finish(const std::string& path) {
    stream().flush();
    if (!stream()) throw std::runtime_error("write to '" + (path.empty() ? "stdout" : path) + "' failed");
  }

 private:
  std::ofstream file_;
};

bool slot_accepts(InputClass slot, MatrixKind kind) {
  switch (slot) {
    case InputClass::kPsd:
    case InputClass::kBoundedPsd: return kind == MatrixKind::kPsd;
    case InputClass::kHermitian: return kind != MatrixKind::kGeneral;
    case InputClass::kGeneral: return true;
  }
  return false;
}

int report_exit(const IneqReport& r) {
  return r.verdict == Verdict::kViolated && !r.exploratory ? 1 : 0;
}

}  // namespace

int run_check(const CheckArgs& args) {
  CampaignConfig config = default_campaign_config();
  if (!(args.ineqs.size() == 1 && args.ineqs.front() == "all")) {
    config.ineqs.clear();
    for (const auto& name : args.ineqs) config.ineqs.push_back(ineq_or_throw(name));
  }
  if (!args.dims.empty()) config.dims = args.dims;
  if (!args.r.empty()) config.r_grid = args.r;
  if (!args.q.empty()) config.q_grid = args.q;
  if (!args.p.empty()) {
    config.p_grid.clear();
    for (const auto& p : args.p) config.p_grid.push_back(SchattenIndex::parse(p));
  }
  if (!args.t.empty()) config.t_grid = args.t;
  if (!args.a.empty() || !args.b.empty()) {
    const auto n = std::max(args.a.size(), args.b.size());
    auto pick = [n](const std::vector<double>& v, double fallback, const char* name) {
      if (v.empty()) return std::vector<double>(n, fallback);
      if (v.size() == 1) return std::vector<double>(n, v.front());
      if (v.size() != n) throw std::invalid_argument(fmt::format("--{} needs 1 or {} values", name, n));
      return v;
    };
    const auto a = pick(args.a, 2.0, "a");
    const auto b = pick(args.b, 1.0, "b");
    config.spectrum_bounds.clear();
    for (std::size_t k = 0; k < n; ++k) config.spectrum_bounds.emplace_back(a[k], b[k]);
  }
  config.samples = args.samples;
  config.seed = args.seed;
  config.tolerance = args.tol;
  config.format = args.format == "csv" ? OutputFormat::kCsv : OutputFormat::kJsonl;
  config.threads = args.threads;
  validate(config);

  Output out(args.out);
  RecordWriter writer(out.stream(), config.format);
  const auto result = run_campaign(config, [&](const CampaignRecord& r) { writer(r); });
  out.finish(args.out);
  write_summary(out.to_file() ? std::cout : std::cerr, result);
  return result.exit_status();
}

int run_probe(const ProbeArgs& args) {
  ProbeOptions opts;
  opts.id = ineq_or_throw(args.ineq);
  opts.params = apply(args.params, IneqParams{});
  check_params(opts.id, opts.params);
  opts.dim = args.dim;
  opts.budget = args.budget;
  opts.seed = args.seed;
  opts.tolerance = args.tol;
  opts.threads = args.threads;
  if (!args.init.empty()) {
    auto kind = parse_sample_kind(args.init);
    if (!kind) throw std::invalid_argument("unknown sample kind '" + args.init + "'");
    opts.initializer = *kind;
  }
  const Witness w = probe_tightness(opts);

  Output out(args.out);
  out.stream() << format_witness(w) << '\n';
  out.finish(args.out);
  auto& log = out.to_file() ? std::cout : std::cerr;
  fmt::print(log, "{} dim {}: best ratio {:.15g} at iteration {} of {}{}\n", to_string(w.id), w.dim,
             w.best_ratio, w.best_iteration, w.budget, w.exploratory ? " (exploratory)" : "");
  if (!w.anomalies.empty()) {
    fmt::print(log, "warning: {} anomalous point(s) with ratio above 1 + tol\n", w.anomalies.size());
  }
  return 0;
}

int run_case(const CaseArgs& args) {
  CheckContext ctx;
  ctx.tolerance = args.tol;
  ctx.seed = args.seed;

  if (args.files.size() == 1) {
    const Witness w = read_witness_file(args.files.front());
    const IneqParams params = apply(args.params, w.params);
    const IneqReport r = evaluate(w.id, w.a, w.b, params, ctx);
    Output out(args.out);
    out.stream() << format_report(r) << '\n';
    out.finish(args.out);
    const double ratio = r.lhs / r.rhs;
    const double diff = std::abs(ratio - w.best_ratio);
    const bool match = diff <= 1e-10 * std::max(1.0, std::abs(w.best_ratio));
    fmt::print(out.to_file() ? std::cout : std::cerr,
               "replayed ratio {:.17g}, witness ratio {:.17g}, difference {:.3g} ({})\n", ratio,
               w.best_ratio, diff, match ? "match" : "MISMATCH");
    return match ? report_exit(r) : 1;
  }

  if (args.ineq.empty()) throw std::invalid_argument("case: --ineq is required");
  const IneqId id = ineq_or_throw(args.ineq);
  const IneqParams params = apply(args.params, IneqParams{});
  check_params(id, params);

  ComplexMatrix a, b;
  if (args.files.size() == 2) {
    const auto fa = read_matrix_file(args.files[0]);
    const auto fb = read_matrix_file(args.files[1]);
    const auto classes = input_classes(id);
    if (!slot_accepts(classes.a, fa.kind) || !slot_accepts(classes.b, fb.kind)) {
      std::cerr << fmt::format("altlab: {} expects A: {}, B: {}; files declare {} and {}\n",
                               to_string(id), to_string(classes.a), to_string(classes.b),
                               to_string(fa.kind), to_string(fb.kind));
      return kExitDataError;
    }
    a = fa.matrix;
    b = fb.matrix;
  } else if (args.files.empty() && args.index) {
    if (args.dim == 0) throw std::invalid_argument("case: --index needs --dims");
    auto inputs = draw_inputs(id, params, args.dim, args.seed, *args.index);
    a = std::move(inputs.a);
    b = std::move(inputs.b);
  } else {
    throw std::invalid_argument("case: give A.json B.json, a witness file, or --index");
  }

  const IneqReport r = evaluate(id, a, b, params, ctx);
  Output out(args.out);
  out.stream() << format_report(r) << '\n';
  out.finish(args.out);
  return report_exit(r);
}

}  // namespace altlab::cli
