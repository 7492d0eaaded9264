#pragma once

#include "dynkin/engine.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace dynkin {

inline constexpr int kCacheSchemaVersion = 1;

/// A cache file exists but cannot be read back. The message names the file.
class CacheCorruption : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {schema_version, class, method, options, members}; members are sorted labels.
nlohmann::json to_json(const PcResult& r);
/// Throws std::invalid_argument on a malformed document.
PcResult from_json(const nlohmann::json& doc);

std::filesystem::path cache_path(const std::filesystem::path& dir, const SingularityClass& c, Method method,
                                 const PcOptions& options);

/// Writes through a temporary file and a rename, so readers never see a partial file.
void save_cache(const PcResult& r, const std::filesystem::path& dir);

/// nullopt when the file is absent, has another schema version, or was written
/// for a different key. Throws CacheCorruption for unparsable content.
std::optional<PcResult> load_cache(const SingularityClass& c, Method method, const PcOptions& options,
                                   const std::filesystem::path& dir);

/// load_cache, falling back to compute_pc and save_cache. No caching when `dir` is empty.
PcResult cached_pc(const SingularityClass& c, Method method, const PcOptions& options,
                   const std::optional<std::filesystem::path>& dir);

}  // namespace dynkin
