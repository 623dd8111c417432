#include "tokennet/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace tokennet {

namespace {

std::int64_t require_integer(const nlohmann::json& value, const char* key) {
    if (!value.is_number_integer())
        throw ConfigError(std::string("config key '") + key + "' must be an integer");
    return value.get<std::int64_t>();
}

int parse_int_field(std::string_view text, const char* what, int line_number) {
    int parsed = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, parsed);
    if (ec != std::errc() || ptr != end)
        throw IoError("log line " + std::to_string(line_number) + ": bad " + what + " '" +
                      std::string(text) + "'");
    return parsed;
}

}  // namespace

GameConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "n_players" && key != "n_rounds" && key != "groups" &&
            key != "initial_tokens")
            throw ConfigError("unknown config key '" + key + "'");
    }
    if (!j.contains("n_players") || !j.contains("n_rounds") || !j.contains("groups"))
        throw ConfigError("config requires n_players, n_rounds and groups");

    GameConfig config;
    const std::int64_t n_players = require_integer(j.at("n_players"), "n_players");
    const std::int64_t n_rounds = require_integer(j.at("n_rounds"), "n_rounds");
    if (n_players < 1 || n_players > 100000) throw ConfigError("n_players out of range");
    if (n_rounds < 1 || n_rounds > 10000000) throw ConfigError("n_rounds out of range");
    config.n_players = static_cast<int>(n_players);
    config.n_rounds = static_cast<int>(n_rounds);

    const nlohmann::json& groups = j.at("groups");
    if (!groups.is_array()) throw ConfigError("groups must be an array of group ids");
    for (const nlohmann::json& group : groups)
        config.group_of.push_back(static_cast<int>(require_integer(group, "groups")));

    if (j.contains("initial_tokens")) {
        const nlohmann::json& tokens = j.at("initial_tokens");
        if (tokens.is_number_integer()) {
            config.initial_tokens.assign(static_cast<std::size_t>(config.n_players),
                                         tokens.get<std::int64_t>());
        } else if (tokens.is_array()) {
            for (const nlohmann::json& balance : tokens)
                config.initial_tokens.push_back(require_integer(balance, "initial_tokens"));
        } else {
            throw ConfigError("initial_tokens must be an integer or an array of integers");
        }
    } else {
        config.initial_tokens.assign(static_cast<std::size_t>(config.n_players), 0);
    }

    config.check();
    return config;
}

GameConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config " + path.string() + ": " + e.what());
    }
    return parse_config(j);
}

nlohmann::json config_to_json(const GameConfig& config) {
    return nlohmann::json{{"n_players", config.n_players},
                          {"n_rounds", config.n_rounds},
                          {"groups", config.group_of},
                          {"initial_tokens", config.initial_tokens}};
}

std::uint64_t config_hash(const GameConfig& config) {
    return fnv1a64(config_to_json(config).dump());
}

AllocationLog read_log_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open log file " + path.string());

    AllocationLog log;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_number == 1) {
            if (line != "round,giver,receiver")
                throw IoError(path.string() + ": expected header 'round,giver,receiver', got '" +
                              line + "'");
            continue;
        }
        if (line.empty()) continue;  // tolerate a trailing newline

        const std::size_t first = line.find(',');
        const std::size_t second = first == std::string::npos ? std::string::npos
                                                              : line.find(',', first + 1);
        if (second == std::string::npos || line.find(',', second + 1) != std::string::npos)
            throw IoError("log line " + std::to_string(line_number) +
                          ": expected three comma-separated integers");
        Allocation rec;
        rec.round = parse_int_field(std::string_view(line).substr(0, first), "round", line_number);
        rec.giver = parse_int_field(std::string_view(line).substr(first + 1, second - first - 1),
                                    "giver", line_number);
        rec.receiver =
            parse_int_field(std::string_view(line).substr(second + 1), "receiver", line_number);
        log.records.push_back(rec);
    }
    return log;
}

void write_log_csv(const std::filesystem::path& path, const AllocationLog& log) {
    AllocationLog canonical = log;
    std::stable_sort(canonical.records.begin(), canonical.records.end(),
                     [](const Allocation& lhs, const Allocation& rhs) {
                         return lhs.round != rhs.round ? lhs.round < rhs.round
                                                       : lhs.giver < rhs.giver;
                     });
    std::string out = "round,giver,receiver\n";
    for (const Allocation& rec : canonical.records) {
        out += std::to_string(rec.round);
        out += ',';
        out += std::to_string(rec.giver);
        out += ',';
        out += std::to_string(rec.receiver);
        out += '\n';
    }
    write_text_file(path, out);
}

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) throw Error("format_double failed");
    return std::string(buffer, ptr);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
    return fnv1a64(read_text_file(path));
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int nibble = 15; nibble >= 0; --nibble) {
        out[static_cast<std::size_t>(nibble)] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("short write to " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

}  // namespace tokennet
