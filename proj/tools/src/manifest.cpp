#include "ringflow/cli/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>

#include "ringflow/error.hpp"

namespace ringflow::cli {

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot read " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw ComputationError("SHA-256 initialization failed");
  }
  std::array<char, 1 << 16> buffer{};
  while (in) {
    in.read(buffer.data(), buffer.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &length);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xF];
  }
  return hex;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char text[32];
  std::strftime(text, sizeof text, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return text;
}

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& o : m.outputs) outputs.push_back({{"path", o.path}, {"sha256", o.sha256}});
  return {{"command", m.command},         {"parameters", m.parameters},
          {"tool_version", m.tool_version}, {"started", m.started},
          {"finished", m.finished},       {"wall_seconds", m.wall_seconds},
          {"outputs", outputs}};
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  RunManifest m;
  try {
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters");
    m.tool_version = j.at("tool_version").get<std::string>();
    m.started = j.at("started").get<std::string>();
    m.finished = j.at("finished").get<std::string>();
    m.wall_seconds = j.value("wall_seconds", 0.0);
    for (const auto& o : j.at("outputs")) {
      m.outputs.push_back({o.at("path").get<std::string>(), o.at("sha256").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::filesystem::path write_manifest(const std::filesystem::path& dir, const RunManifest& manifest) {
  const auto path = dir / (manifest.command + ".manifest.json");
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write " + path.string());
  out << to_json(manifest).dump(2) << '\n';
  return path;
}

std::vector<std::string> verify_manifest(const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  require(static_cast<bool>(in), "cannot read manifest " + manifest_path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("manifest is not valid JSON: ") + e.what());
  }
  const auto manifest = manifest_from_json(j);
  const auto dir = manifest_path.parent_path();
  std::vector<std::string> problems;
  for (const auto& o : manifest.outputs) {
    const auto file = dir / o.path;
    if (!std::filesystem::exists(file)) {
      problems.push_back("missing output " + o.path);
    } else if (sha256_file(file) != o.sha256) {
      problems.push_back("digest mismatch for " + o.path);
    }
  }
  return problems;
}

}  // namespace ringflow::cli
