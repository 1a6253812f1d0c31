#include <cstdlib>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "altlab/matrix_io.hpp"
#include "commands.hpp"

namespace {

void add_scalar_params(CLI::App& cmd, altlab::cli::ScalarParams& p) {
  cmd.add_option("--r", p.r, "exponent r");
  cmd.add_option("--q", p.q, "outer exponent q");
  cmd.add_option("--p", p.p, "Schatten index p (number or inf)");
  cmd.add_option("--t", p.t, "t-family / Hölder exponent t");
  cmd.add_option("--s", p.s, "Hölder exponent s");
  cmd.add_option("--u", p.u, "Hölder exponent u");
  cmd.add_option("--a", p.a, "upper spectrum bound a");
  cmd.add_option("--b", p.b, "lower spectrum bound b");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ALTLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("ALTLAB_SEED", std::string("not an unsigned integer: ") + env);
    }
  }
  return 42;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace altlab::cli;
  CLI::App app{"altlab: numeric laboratory for matrix trace and Schatten-norm inequalities"};
  app.require_subcommand(1);

  CheckArgs check;
  ProbeArgs probe;
  CaseArgs kase;
  try {
    check.seed = probe.seed = kase.seed = default_seed();
  } catch (const CLI::Error& e) {
    std::cerr << "altlab: " << e.what() << '\n';
    return kExitUsage;
  }

  auto* check_cmd = app.add_subcommand("check", "run a seeded falsification campaign");
  check_cmd->add_option("--ineq", check.ineqs, "inequality ids, or 'all'")->delimiter(',');
  check_cmd->add_option("--dims", check.dims, "matrix dimensions")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--r", check.r, "r grid")->delimiter(',');
  check_cmd->add_option("--q", check.q, "q grid")->delimiter(',');
  check_cmd->add_option("--p", check.p, "Schatten p grid (inf allowed)")->delimiter(',');
  check_cmd->add_option("--t", check.t, "t grid (t-family)")->delimiter(',');
  check_cmd->add_option("--a", check.a, "upper spectrum bounds, paired with --b")->delimiter(',');
  check_cmd->add_option("--b", check.b, "lower spectrum bounds, paired with --a")->delimiter(',');
  check_cmd->add_option("--samples", check.samples, "samples per cell")->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", check.seed, "campaign seed (default: $ALTLAB_SEED or 42)");
  check_cmd->add_option("--tol", check.tol, "violation tolerance on relative slack")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--format", check.format, "record format")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  check_cmd->add_option("--out", check.out, "record file (default: stdout)");
  check_cmd->add_option("--threads", check.threads, "worker threads (0 = all cores)");

  auto* probe_cmd = app.add_subcommand("probe", "search for near-equality witnesses");
  probe_cmd->add_option("--ineq", probe.ineq, "inequality id");
  probe_cmd->add_option("--dims", probe.dim, "matrix dimension")->check(CLI::PositiveNumber);
  add_scalar_params(*probe_cmd, probe.params);
  probe_cmd->add_option("--budget", probe.budget, "iterations")->check(CLI::PositiveNumber);
  probe_cmd->add_option("--seed", probe.seed, "probe seed (default: $ALTLAB_SEED or 42)");
  probe_cmd->add_option("--tol", probe.tol, "anomaly tolerance")->check(CLI::NonNegativeNumber);
  probe_cmd->add_option("--init", probe.init, "sample kind for restart points");
  probe_cmd->add_option("--out", probe.out, "witness file (default: stdout)");
  probe_cmd->add_option("--threads", probe.threads, "parallel restarts (0 = all cores)");

  auto* case_cmd = app.add_subcommand(
      "case", "evaluate one inequality on two matrix files, or replay a witness file");
  case_cmd->add_option("files", kase.files, "A.json B.json | witness.json")->expected(0, 2);
  case_cmd->add_option("--ineq", kase.ineq, "inequality id (required unless replaying)");
  add_scalar_params(*case_cmd, kase.params);
  case_cmd->add_option("--tol", kase.tol, "violation tolerance")->check(CLI::NonNegativeNumber);
  case_cmd->add_option("--seed", kase.seed, "campaign seed for --index");
  case_cmd->add_option("--index", kase.index, "re-materialize this campaign sample");
  case_cmd->add_option("--dims", kase.dim, "dimension for --index");
  case_cmd->add_option("--out", kase.out, "report file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check_cmd) return run_check(check);
    if (*probe_cmd) return run_probe(probe);
    return run_case(kase);
  } catch (const altlab::ParseError& e) {
    std::cerr << "altlab: parse error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "altlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "altlab: " << e.what() << '\n';
    return kExitFailure;
  }
}
