#include "altlab/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "json_detail.hpp"

namespace altlab {

namespace {

using detail::Json;

constexpr double kHighlightSlack = 1e-6;

double param_value(const IneqParams& p, std::string_view name) {
  if (name == "r") return p.r;
  if (name == "q") return p.q;
  if (name == "t") return p.t;
  if (name == "s") return p.s;
  if (name == "u") return p.u;
  if (name == "a") return p.a;
  if (name == "b") return p.b;
  return p.p.value();
}

// JSON has no infinity; Schatten p = inf is written as the string "inf".
Json param_json(const IneqParams& p, std::string_view name) {
  if (name == "p" && p.p.is_infinite()) return "inf";
  return param_value(p, name);
}

Json params_json(IneqId id, const IneqParams& p) {
  Json j = Json::object();
  for (auto name : consumed_params(id)) j[std::string(name)] = param_json(p, name);
  return j;
}

Json all_params_json(const IneqParams& p) {
  Json j = Json::object();
  for (std::string_view name : {"r", "q", "p", "t", "s", "u", "a", "b"}) {
    j[std::string(name)] = param_json(p, name);
  }
  return j;
}

IneqParams params_from_json(const Json& j) {
  IneqParams p;
  auto read = [&](const char* key, double& field) {
    if (j.contains(key)) field = j[key].get<double>();
  };
  read("r", p.r);
  read("q", p.q);
  read("t", p.t);
  read("s", p.s);
  read("u", p.u);
  read("a", p.a);
  read("b", p.b);
  if (j.contains("p")) {
    const auto& v = j["p"];
    p.p = v.is_string() ? SchattenIndex::parse(v.get<std::string>())
                        : SchattenIndex{v.get<double>()};
  }
  return p;
}

// Non-finite doubles become null rather than invalid JSON.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

MatrixKind kind_of(InputClass c) {
  switch (c) {
    case InputClass::kPsd:
    case InputClass::kBoundedPsd: return MatrixKind::kPsd;
    case InputClass::kHermitian: return MatrixKind::kHermitian;
    case InputClass::kGeneral: return MatrixKind::kGeneral;
  }
  return MatrixKind::kGeneral;
}

std::string hex64(std::uint64_t v) { return fmt::format("{:016x}", v); }

std::string params_compact(IneqId id, const IneqParams& p) {
  std::string out;
  for (auto name : consumed_params(id)) {
    if (!out.empty()) out += ';';
    if (name == "p") {
      out += "p=" + p.p.to_string();
    } else {
      out += fmt::format("{}={}", name, param_value(p, name));
    }
  }
  return out;
}

std::string csv_quote(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string format_jsonl_record(const CampaignRecord& rec) {
  Json j;
  j["ineq"] = std::string(to_string(rec.cell.id));
  j["dim"] = rec.cell.dim;
  j["params"] = params_json(rec.cell.id, rec.cell.params);
  j["index"] = rec.index;
  j["kind_a"] = std::string(to_string(rec.kind_a));
  j["kind_b"] = std::string(to_string(rec.kind_b));
  j["exploratory"] = rec.cell.exploratory;
  if (rec.report) {
    const auto& r = *rec.report;
    j["seed"] = r.seed;
    j["lhs"] = number(r.lhs);
    j["rhs"] = number(r.rhs);
    j["slack"] = number(r.slack);
    j["relative_slack"] = number(r.relative_slack);
    j["verdict"] = std::string(to_string(r.verdict));
    j["fingerprint"] = hex64(r.fingerprint);
  } else {
    j["verdict"] = "error";
    j["error"] = rec.error.value_or("unknown error");
  }
  return j.dump();
}

std::string csv_header() {
  return "ineq,dim,params,index,seed,kind_a,kind_b,lhs,rhs,slack,relative_slack,verdict,"
         "exploratory,fingerprint,error";
}

std::string format_csv_record(const CampaignRecord& rec) {
  const auto head = fmt::format("{},{},{},{}", to_string(rec.cell.id), rec.cell.dim,
                                csv_quote(params_compact(rec.cell.id, rec.cell.params)), rec.index);
  const auto kinds = fmt::format("{},{}", to_string(rec.kind_a), to_string(rec.kind_b));
  const int exploratory = rec.cell.exploratory ? 1 : 0;
  if (!rec.report) {
    return fmt::format("{},,{},,,,,error,{},,{}", head, kinds, exploratory,
                       csv_quote(rec.error.value_or("unknown error")));
  }
  const auto& r = *rec.report;
  return fmt::format("{},{},{},{},{},{},{},{},{},{},", head, r.seed, kinds, r.lhs, r.rhs, r.slack,
                     r.relative_slack, to_string(r.verdict), exploratory, hex64(r.fingerprint));
}

RecordWriter::RecordWriter(std::ostream& out, OutputFormat format) : out_(&out), format_(format) {}

void RecordWriter::operator()(const CampaignRecord& record) {
  if (format_ == OutputFormat::kCsv) {
    if (!header_written_) {
      *out_ << csv_header() << '\n';
      header_written_ = true;
    }
    *out_ << format_csv_record(record) << '\n';
  } else {
    *out_ << format_jsonl_record(record) << '\n';
  }
}

std::string format_report(const IneqReport& r) {
  Json j;
  j["ineq"] = std::string(to_string(r.id));
  j["dim"] = r.dim;
  j["params"] = params_json(r.id, r.params);
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["slack"] = number(r.slack);
  j["relative_slack"] = number(r.relative_slack);
  j["verdict"] = std::string(to_string(r.verdict));
  j["exploratory"] = r.exploratory;
  j["seed"] = r.seed;
  j["fingerprint"] = hex64(r.fingerprint);
  Json details = Json::object();
  for (const auto& d : r.details) details[d.name] = number(d.value);
  j["details"] = std::move(details);
  return j.dump(2);
}

void write_summary(std::ostream& out, const CampaignResult& result) {
  fmt::print(out, "{:<18} {:>8} {:>10} {:>12} {:>10} {:>7} {:>14}\n", "inequality", "count",
             "violations", "expl.viol", "equality", "errors", "min rel slack");
  for (const auto& s : result.summaries) {
    const bool flag = s.count > 0 && s.min_relative_slack < kHighlightSlack;
    fmt::print(out, "{:<18} {:>8} {:>10} {:>12} {:>10} {:>7} {:>14.6e}{}\n", to_string(s.id),
               s.count, s.violations, s.exploratory_violations, s.equalities, s.errors,
               s.min_relative_slack, flag ? "  *" : "");
  }
  if (std::any_of(result.summaries.begin(), result.summaries.end(), [](const auto& s) {
        return s.count > 0 && s.min_relative_slack < kHighlightSlack;
      })) {
    fmt::print(out, "* minimum relative slack below {:g}\n", kHighlightSlack);
  }
  if (result.has_exploratory_cells) {
    fmt::print(out,
               "== exploratory regime: some cells lie outside the proven parameter range; "
               "their violations do not affect the exit status ==\n");
  }
  fmt::print(out, "proven-regime violations: {}, errors: {}\n", result.proven_violations,
             result.errors);
}

std::string format_witness(const Witness& w) {
  Json j;
  j["type"] = "witness";
  j["ineq"] = std::string(to_string(w.id));
  j["params"] = all_params_json(w.params);
  j["dim"] = w.dim;
  j["budget"] = w.budget;
  j["seed"] = w.seed;
  j["best_ratio"] = number(w.best_ratio);
  j["best_iteration"] = w.best_iteration;
  j["exploratory"] = w.exploratory;
  const auto classes = input_classes(w.id);
  j["a"] = detail::matrix_to_json(w.a, kind_of(classes.a));
  j["b"] = detail::matrix_to_json(w.b, kind_of(classes.b));
  Json traj = Json::array();
  for (const auto& t : w.trajectory) traj.push_back(Json::array({t.iteration, number(t.ratio)}));
  j["trajectory"] = std::move(traj);
  Json anomalies = Json::array();
  for (const auto& a : w.anomalies) {
    Json e;
    e["iteration"] = a.iteration;
    e["ratio"] = number(a.ratio);
    e["a"] = detail::matrix_to_json(a.a, MatrixKind::kGeneral);
    e["b"] = detail::matrix_to_json(a.b, MatrixKind::kGeneral);
    anomalies.push_back(std::move(e));
  }
  j["anomalies"] = std::move(anomalies);
  return j.dump(2);
}

bool looks_like_witness(std::string_view text) {
  try {
    const auto j = Json::parse(text.begin(), text.end());
    return j.is_object() && j.value("type", "") == "witness";
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

Witness parse_witness(std::string_view text) {
  const Json j = detail::parse_document(text);
  auto fail = [&](const std::string& what, std::string_view key) {
    const auto offset = detail::offset_of_key(text, key);
    return ParseError("witness: " + what + " (byte " + std::to_string(offset) + ")", offset);
  };
  if (!j.is_object() || j.value("type", "") != "witness") throw fail("not a witness document", "type");
  for (const char* key : {"ineq", "params", "dim", "a", "b", "best_ratio"}) {
    if (!j.contains(key)) throw fail(std::string("missing field '") + key + "'", {});
  }
  Witness w;
  try {
    const auto id = parse_ineq_id(j["ineq"].get<std::string>());
    if (!id) throw fail("unknown inequality '" + j["ineq"].get<std::string>() + "'", "ineq");
    w.id = *id;
    w.params = params_from_json(j["params"]);
    w.dim = j["dim"].get<std::size_t>();
    w.budget = j.value("budget", std::size_t{0});
    w.seed = j.value("seed", std::uint64_t{0});
    w.best_ratio = j["best_ratio"].is_null() ? std::nan("") : j["best_ratio"].get<double>();
    w.best_iteration = j.value("best_iteration", std::size_t{0});
    w.exploratory = j.value("exploratory", false);
    if (j.contains("trajectory")) {
      for (const auto& t : j["trajectory"]) {
        w.trajectory.push_back({t.at(0).get<std::size_t>(), t.at(1).get<double>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw fail(std::string("bad field type: ") + e.what(), {});
  }
  w.a = detail::matrix_from_json(j["a"], text, "a").matrix;
  w.b = detail::matrix_from_json(j["b"], text, "b").matrix;
  return w;
}

void write_witness_file(const std::filesystem::path& path, const Witness& witness) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << format_witness(witness) << '\n';
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

Witness read_witness_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return parse_witness(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte_offset());
  }
}

}  // namespace altlab
