#include "gsqg/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gsqg {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

KeyValueConfig KeyValueConfig::parse_string(const std::string& text) {
    KeyValueConfig kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                                  ": expected 'key = value', got '" + line + "'",
                              lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key", lineno);
        if (kv.values_.count(key))
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" +
                                  key + "'",
                              lineno);
        kv.values_[key] = value;
        kv.lines_[key] = lineno;
    }
    return kv;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path, 0);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_string(buf.str());
}

std::string KeyValueConfig::get_string(const std::string& key,
                                       const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

int KeyValueConfig::line_of(const std::string& key) const {
    auto it = lines_.find(key);
    return it == lines_.end() ? 0 : it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line_of(key)) + ": key '" + key +
                              "' is not a number: '" + it->second + "'",
                          line_of(key));
    }
}

std::int64_t KeyValueConfig::get_int(const std::string& key,
                                     std::int64_t fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line_of(key)) + ": key '" + key +
                              "' is not an integer: '" + it->second + "'",
                          line_of(key));
    }
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "off" || v == "0" || v == "no") return false;
    throw ConfigError("line " + std::to_string(line_of(key)) + ": key '" + key +
                          "' is not a boolean: '" + v + "'",
                      line_of(key));
}

std::vector<double> KeyValueConfig::get_double_list(
    const std::string& key, const std::vector<double>& fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    std::istringstream is(it->second);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            out.push_back(std::stod(trim(tok)));
        } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(line_of(key)) + ": key '" + key +
                                  "' has a non-numeric entry: '" + tok + "'",
                              line_of(key));
        }
    }
    if (out.empty())
        throw ConfigError("line " + std::to_string(line_of(key)) + ": key '" + key +
                              "' is an empty list",
                          line_of(key));
    return out;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
    values_[key] = value;
    if (!lines_.count(key)) lines_[key] = 0;
}

std::string KeyValueConfig::canonical_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : values_) os << k << " = " << v << '\n';
    return os.str();
}

std::uint64_t KeyValueConfig::hash() const {
    const std::string text = canonical_text();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

void KeyValueConfig::reject_unknown(const std::vector<std::string>& accepted) const {
    for (const auto& [k, v] : values_) {
        (void)v;
        if (std::find(accepted.begin(), accepted.end(), k) == accepted.end())
            throw ConfigError("line " + std::to_string(line_of(k)) +
                                  ": unknown key '" + k + "'",
                              line_of(k));
    }
}

const std::vector<std::string>& simulation_config_keys() {
    static const std::vector<std::string> keys{
        "resolution",   "length",        "dealias_fraction", "beta",
        "noise",        "alpha",         "noise_cutoff",     "delta_noise",
        "nu",           "delta_kernel",  "nonlinearity",     "dt",
        "horizon",      "scheme",        "seed",             "initial_condition",
        "ic_amplitude", "forcing",       "forcing_amplitude", "forcing_decay",
        "level_r",      "passive_scalar", "cadence",          "p",
        "gamma",        "cfl_advisory",  "cfl_error"};
    return keys;
}

SimulationConfig simulation_config_from(const KeyValueConfig& kv) {
    SimulationConfig c;
    c.resolution = static_cast<int>(kv.get_int("resolution", c.resolution));
    c.length = kv.get_double("length", c.length);
    c.dealias_fraction = kv.get_double("dealias_fraction", c.dealias_fraction);
    c.beta = kv.get_double("beta", c.beta);
    c.noise_enabled = kv.get_bool("noise", c.noise_enabled);
    c.alpha = kv.get_double("alpha", c.alpha);
    c.noise_cutoff = static_cast<int>(kv.get_int("noise_cutoff", c.noise_cutoff));
    c.delta_noise = kv.get_double("delta_noise", c.delta_noise);
    c.nu = kv.get_double("nu", c.nu);
    c.delta_kernel = kv.get_double("delta_kernel", c.delta_kernel);
    c.nonlinearity_enabled = kv.get_bool("nonlinearity", c.nonlinearity_enabled);
    c.dt = kv.get_double("dt", c.dt);
    c.horizon = kv.get_double("horizon", c.horizon);
    const std::string scheme = kv.get_string("scheme", scheme_to_string(c.scheme));
    try {
        c.scheme = scheme_from_string(scheme);
    } catch (const std::exception& e) {
        throw ConfigError("line " + std::to_string(kv.line_of("scheme")) + ": " +
                              e.what(),
                          kv.line_of("scheme"));
    }
    c.seed = static_cast<std::uint64_t>(kv.get_int("seed", static_cast<std::int64_t>(c.seed)));
    c.initial_condition = kv.get_string("initial_condition", c.initial_condition);
    c.ic_amplitude = kv.get_double("ic_amplitude", c.ic_amplitude);
    c.forcing = kv.get_string("forcing", c.forcing);
    c.forcing_amplitude = kv.get_double("forcing_amplitude", c.forcing_amplitude);
    c.forcing_decay = kv.get_double("forcing_decay", c.forcing_decay);
    c.level_r = kv.get_double("level_r", c.level_r);
    c.track_passive_scalar = kv.get_bool("passive_scalar", c.track_passive_scalar);
    c.cadence = static_cast<int>(kv.get_int("cadence", c.cadence));
    c.p_exponent = kv.get_double("p", c.p_exponent);
    c.gamma_exponent = kv.get_double("gamma", c.gamma_exponent);
    c.cfl_advisory = kv.get_double("cfl_advisory", c.cfl_advisory);
    c.cfl_error = kv.get_double("cfl_error", c.cfl_error);
    return c;
}

} // namespace gsqg
