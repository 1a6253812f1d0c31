#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "altlab/campaign.hpp"
#include "altlab/probe.hpp"

namespace altlab {

/// One campaign record as a single JSON line (no trailing newline). Only the
/// parameters the inequality consumes are written.
std::string format_jsonl_record(const CampaignRecord& record);

std::string csv_header();
std::string format_csv_record(const CampaignRecord& record);

/// Writes records in `format`; the CSV header goes out before the first row.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format);
  void operator()(const CampaignRecord& record);

 private:
  std::ostream* out_;
  OutputFormat format_;
  bool header_written_ = false;
};

/// Single evaluation with all checker details, pretty-printed.
std::string format_report(const IneqReport& report);

/// Per-inequality table. Rows whose minimum relative slack is below 1e-6
/// are flagged; exploratory cells add a banner.
void write_summary(std::ostream& out, const CampaignResult& result);

std::string format_witness(const Witness& witness);
Witness parse_witness(std::string_view text);
void write_witness_file(const std::filesystem::path& path, const Witness& witness);
Witness read_witness_file(const std::filesystem::path& path);

/// True when `text` is a witness document rather than a bare matrix.
bool looks_like_witness(std::string_view text);

}  // namespace altlab
