#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace altlab::cli {

// Exit codes outside the campaign's 0/1/2 contract.
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitFailure = 70;

struct CheckArgs {
  std::vector<std::string> ineqs{"all"};
  std::vector<std::size_t> dims;
  std::vector<double> r;
  std::vector<double> q;
  std::vector<std::string> p;
  std::vector<double> t;
  std::vector<double> a;
  std::vector<double> b;
  std::size_t samples = 20;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string format = "jsonl";
  std::string out;
  std::size_t threads = 0;
};

struct ScalarParams {
  std::optional<double> r, q, t, s, u, a, b;
  std::optional<std::string> p;
};

struct ProbeArgs {
  std::string ineq = "waterwine";
  std::size_t dim = 3;
  ScalarParams params;
  std::size_t budget = 20000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string init;
  std::string out;
  std::size_t threads = 1;
};

struct CaseArgs {
  std::vector<std::string> files;
  std::string ineq;
  ScalarParams params;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  // Re-materialize campaign sample `index` instead of reading files.
  std::optional<std::uint64_t> index;
  std::size_t dim = 0;
  std::string out;
};

int run_check(const CheckArgs& args);
int run_probe(const ProbeArgs& args);
int run_case(const CaseArgs& args);

}  // namespace altlab::cli
