#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "altlab/matrix.hpp"

namespace altlab {

/// Declared class of a matrix file.
enum class MatrixKind { kGeneral, kHermitian, kPsd };

std::string_view to_string(MatrixKind kind) noexcept;
std::optional<MatrixKind> parse_matrix_kind(std::string_view name) noexcept;

/// Malformed input document. `byte_offset` points at the syntax error, or
/// at the offending field for structural errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t byte_offset);
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

struct MatrixFile {
  ComplexMatrix matrix;
  MatrixKind kind = MatrixKind::kGeneral;
};

/// JSON object {"rows": m, "cols": n, "kind": ..., "data": [[re, im], ...]}
/// with data row-major. "kind" is optional and defaults to "general".
MatrixFile parse_matrix(std::string_view text);
std::string format_matrix(const ComplexMatrix& m, MatrixKind kind, int indent = -1);

MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m, MatrixKind kind);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace altlab
