#pragma once

// nlohmann/json glue shared by the file-format translation units. Not
// installed.

#include <string_view>

#include <json.hpp>

#include "altlab/matrix.hpp"
#include "altlab/matrix_io.hpp"

namespace altlab::detail {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m, MatrixKind kind);

/// `text` is the whole document, used to locate structural errors.
MatrixFile matrix_from_json(const Json& j, std::string_view text, std::string_view field = {});

Json parse_document(std::string_view text);

std::size_t offset_of_key(std::string_view text, std::string_view key) noexcept;

}  // namespace altlab::detail
