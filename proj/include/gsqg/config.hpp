#pragma once

#include "gsqg/solver.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsqg {

struct ConfigError : std::runtime_error {
    ConfigError(const std::string& what, int line_) : std::runtime_error(what), line(line_) {}
    int line;
};

/// UTF-8 "key = value" run configuration; '#' starts a comment; blank lines
/// are ignored. Unknown keys are rejected at typed extraction, with the line
/// number of the offending entry.
class KeyValueConfig {
  public:
    static KeyValueConfig parse_file(const std::string& path);
    static KeyValueConfig parse_string(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback) const;
    int line_of(const std::string& key) const;

    void set(const std::string& key, const std::string& value);

    /// Keys in sorted order, one per line: the canonical echo that reports
    /// embed and the reproducibility hash is computed from.
    std::string canonical_text() const;
    std::uint64_t hash() const; // FNV-1a of the canonical text

    const std::map<std::string, std::string>& values() const { return values_; }

    /// Flags any key outside the accepted set (typo guard). Throws ConfigError.
    void reject_unknown(const std::vector<std::string>& accepted) const;

  private:
    std::map<std::string, std::string> values_;
    std::map<std::string, int> lines_;
};

/// Builds a SimulationConfig from the documented keys (see README). Unknown
/// keys and malformed values raise ConfigError with the line number.
SimulationConfig simulation_config_from(const KeyValueConfig& kv);

/// The simulation keys accepted by simulation_config_from; experiment drivers
/// extend this list with their own keys.
const std::vector<std::string>& simulation_config_keys();

} // namespace gsqg
