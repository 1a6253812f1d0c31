#include "altlab/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json_detail.hpp"

namespace altlab {

namespace detail {

std::size_t offset_of_key(std::string_view text, std::string_view key) noexcept {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 0 : pos;
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("malformed JSON at byte " + std::to_string(offset) + ": " + e.what(), offset);
  }
}

Json matrix_to_json(const ComplexMatrix& m, MatrixKind kind) {
  Json data = Json::array();
  for (const auto& z : m.entries()) data.push_back(Json::array({z.real(), z.imag()}));
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["kind"] = std::string(to_string(kind));
  j["data"] = std::move(data);
  return j;
}

MatrixFile matrix_from_json(const Json& j, std::string_view text, std::string_view field) {
  auto fail = [&](const std::string& what, std::string_view key) -> ParseError {
    const std::size_t offset = offset_of_key(text, key.empty() ? field : key);
    const std::string where = field.empty() ? "" : " in '" + std::string(field) + "'";
    return ParseError("matrix" + where + ": " + what + " (byte " + std::to_string(offset) + ")",
                      offset);
  };
  if (!j.is_object()) throw fail("expected a JSON object", {});
  for (const char* key : {"rows", "cols", "data"}) {
    if (!j.contains(key)) throw fail(std::string("missing field '") + key + "'", {});
  }
  if (!j["rows"].is_number_unsigned() || j["rows"].get<std::size_t>() == 0) {
    throw fail("'rows' must be a positive integer", "rows");
  }
  if (!j["cols"].is_number_unsigned() || j["cols"].get<std::size_t>() == 0) {
    throw fail("'cols' must be a positive integer", "cols");
  }
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  MatrixFile out;
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw fail("'kind' must be a string", "kind");
    auto kind = parse_matrix_kind(j["kind"].get<std::string>());
    if (!kind) throw fail("'kind' must be one of general, hermitian, psd", "kind");
    out.kind = *kind;
  }
  const auto& data = j["data"];
  if (!data.is_array() || data.size() != rows * cols) {
    throw fail("'data' must be an array of rows*cols = " + std::to_string(rows * cols) +
                   " [re, im] pairs",
               "data");
  }
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    const auto& e = data[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw fail("data[" + std::to_string(k) + "] must be a [re, im] pair of numbers", "data");
    }
    entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  try {
    out.matrix = ComplexMatrix(rows, cols, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw fail(e.what(), "data");
  }
  return out;
}

}  // namespace detail

ParseError::ParseError(const std::string& message, std::size_t byte_offset)
    : std::runtime_error(message), byte_offset_(byte_offset) {}

std::string_view to_string(MatrixKind kind) noexcept {
  switch (kind) {
    case MatrixKind::kGeneral: return "general";
    case MatrixKind::kHermitian: return "hermitian";
    case MatrixKind::kPsd: return "psd";
  }
  return "general";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view name) noexcept {
  if (name == "general") return MatrixKind::kGeneral;
  if (name == "hermitian") return MatrixKind::kHermitian;
  if (name == "psd") return MatrixKind::kPsd;
  return std::nullopt;
}

MatrixFile parse_matrix(std::string_view text) {
  return detail::matrix_from_json(detail::parse_document(text), text);
}

std::string format_matrix(const ComplexMatrix& m, MatrixKind kind, int indent) {
  return detail::matrix_to_json(m, kind).dump(indent);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return parse_matrix(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte_offset());
  }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m,
                       MatrixKind kind) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << format_matrix(m, kind, 2) << '\n';
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace altlab
