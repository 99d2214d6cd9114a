#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rhm/sequence_model.hpp"

namespace rhm {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// 64-bit FNV-1a digest as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view text);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double x);

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partial file. Creates parent directories.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

nlohmann::json sigma_to_json(const SigmaSpec& spec);
/// Accepts {"kind": "power-law", "epsilon", "beta"} or
/// {"kind": "explicit", "values": [...]}. Throws std::invalid_argument.
SigmaSpec sigma_from_json(const nlohmann::json& j);

}  // namespace rhm
