#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tokennet/types.hpp"

namespace tokennet {

/// Parses a game configuration object: keys `n_players`, `n_rounds`, `groups`
/// (array of group ids, index = player id - 1) and optional `initial_tokens`
/// (single integer applied to every player, or one integer per player;
/// defaults to 0 -- balances are reporting-only). Unknown keys are rejected.
GameConfig parse_config(const nlohmann::json& j);
GameConfig load_config(const std::filesystem::path& path);

nlohmann::json config_to_json(const GameConfig& config);

/// FNV-1a hash of the canonical (sorted-key, compact) JSON dump; identifies a
/// configuration in manifests.
std::uint64_t config_hash(const GameConfig& config);

/// Reads a game log CSV: header `round,giver,receiver`, one integer triple per
/// line. Accepts LF or CRLF; anything else is an IoError. The result is raw --
/// run validate_log to check it against a config.
AllocationLog read_log_csv(const std::filesystem::path& path);

/// Writes the log in canonical order (round, then giver), header included,
/// LF line endings.
void write_log_csv(const std::filesystem::path& path, const AllocationLog& log);

/// Shortest decimal form that round-trips to the same double (std::to_chars).
std::string format_double(double value);

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string hex64(std::uint64_t value);

/// Writes a whole file, creating parent directories; throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace tokennet
