#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace ringflow::cli {

struct OutputFile {
  std::string path;  // relative to the manifest's directory
  std::string sha256;
};

struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::string tool_version;
  std::string started;
  std::string finished;
  double wall_seconds = 0.0;
  std::vector<OutputFile> outputs;
};

/// Lowercase hex SHA-256 of a file's bytes. Throws ValidationError if unreadable.
std::string sha256_file(const std::filesystem::path& path);

/// UTC timestamp, ISO 8601 to the second.
std::string utc_timestamp();

nlohmann::json to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);

/// Writes `<dir>/<command>.manifest.json`, returns its path.
std::filesystem::path write_manifest(const std::filesystem::path& dir, const RunManifest& manifest);

/// Empty when every listed output exists and matches its digest; otherwise
/// one message per problem.
std::vector<std::string> verify_manifest(const std::filesystem::path& manifest_path);

}  // namespace ringflow::cli
