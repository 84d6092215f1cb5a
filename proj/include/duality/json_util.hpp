#pragma once

#include <string>

#include "json.hpp"

namespace duality {

// Parses JSON, converting syntax errors into ParseError with line/column context.
nlohmann::json parse_json_document(const std::string& text);

std::string read_text_file(const std::string& path);

} // namespace duality
