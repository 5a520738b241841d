#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace coherence::cli {

using Json = nlohmann::ordered_json;

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

/// Writes `text` to `path` when given, otherwise to `out`.
void emit(const std::string& text, const std::optional<std::filesystem::path>& path, std::ostream& out);

std::string dump(const Json& doc);

/// Runs `body`, mapping exceptions to exit codes and messages on `err`.
int guarded(std::ostream& err, const std::function<int()>& body);

}  // namespace coherence::cli
