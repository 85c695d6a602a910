// Runtime knobs: the EIGENROOT_PRECISION_BITS environment floor and the
// key=value config file surface. CLI flags override the file; the file
// overrides defaults; the env floor applies everywhere.
#ifndef EIGENROOT_CONFIG_HPP
#define EIGENROOT_CONFIG_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

namespace eigenroot {

// Precision floor in bits from the environment, 0 when unset.
inline long env_precision_floor_raw() {
    static const long cached = [] {
        const char* s = std::getenv("EIGENROOT_PRECISION_BITS");
        if (s == nullptr) return 0L;
        char* end = nullptr;
        const long bits = std::strtol(s, &end, 10);
        if (end == nullptr || *end != '\0' || bits <= 0)
            throw std::runtime_error("EIGENROOT_PRECISION_BITS must be a positive integer");
        return bits;
    }();
    return cached;
}

// Process-wide floor a config file may raise; flags and files feed this.
inline long& runtime_precision_floor_storage() {
    static long floor_bits = 0;
    return floor_bits;
}

inline void set_runtime_precision_floor(long bits) { runtime_precision_floor_storage() = bits; }

// The floor every precision choice respects: max(env var, config value).
inline long env_precision_floor() {
    return std::max(env_precision_floor_raw(), runtime_precision_floor_storage());
}

// INI-style key=value pairs; '#' starts a comment; blank lines skipped.
inline std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> out;
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line is not key=value: " + line);
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

} // namespace eigenroot

#endif
