#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace sheetcli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& raw) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(raw);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

double parse_double(const std::string& where, const std::string& raw) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(raw, &used);
    } catch (const std::exception&) {
        throw ConfigError(where + ": cannot parse '" + raw + "' as a number");
    }
    if (used != raw.size()) throw ConfigError(where + ": trailing junk in '" + raw + "'");
    return value;
}

std::uint64_t parse_u64(const std::string& where, const std::string& raw) {
    if (!raw.empty() && raw[0] == '-')
        throw ConfigError(where + ": '" + raw + "' must be non-negative");
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(raw, &used, 10);
    } catch (const std::exception&) {
        throw ConfigError(where + ": cannot parse '" + raw + "' as an integer");
    }
    if (used != raw.size()) throw ConfigError(where + ": trailing junk in '" + raw + "'");
    return value;
}

}  // namespace

IniConfig IniConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

IniConfig IniConfig::parse_text(const std::string& text) {
    IniConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError("line " + std::to_string(lineno) + ": empty section name");
            cfg.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key '" + key +
                              "' appears before any [section]");
        cfg.sections_[section][key] = value;
    }
    return cfg;
}

bool IniConfig::has(const std::string& section, const std::string& key) const {
    const auto sec = sections_.find(section);
    return sec != sections_.end() && sec->second.count(key) > 0;
}

std::string IniConfig::get_string(const std::string& section, const std::string& key,
                                  const std::string& fallback) const {
    const auto sec = sections_.find(section);
    if (sec == sections_.end()) return fallback;
    const auto it = sec->second.find(key);
    return it == sec->second.end() ? fallback : it->second;
}

double IniConfig::get_double(const std::string& section, const std::string& key,
                             double fallback) const {
    if (!has(section, key)) return fallback;
    return parse_double(section + "." + key, get_string(section, key, ""));
}

std::uint64_t IniConfig::get_u64(const std::string& section, const std::string& key,
                                 std::uint64_t fallback) const {
    if (!has(section, key)) return fallback;
    return parse_u64(section + "." + key, get_string(section, key, ""));
}

unsigned IniConfig::get_unsigned(const std::string& section, const std::string& key,
                                 unsigned fallback) const {
    const std::uint64_t wide = get_u64(section, key, fallback);
    if (wide > 0xffffffffull)
        throw ConfigError(section + "." + key + ": value too large");
    return static_cast<unsigned>(wide);
}

std::vector<double> IniConfig::get_double_list(const std::string& section, const std::string& key,
                                               std::vector<double> fallback) const {
    if (!has(section, key)) return fallback;
    const std::string where = section + "." + key;
    std::vector<double> out;
    for (const std::string& item : split_list(get_string(section, key, "")))
        out.push_back(parse_double(where, item));
    if (out.empty()) throw ConfigError(where + ": empty list");
    return out;
}

std::vector<unsigned> IniConfig::get_unsigned_list(const std::string& section,
                                                   const std::string& key,
                                                   std::vector<unsigned> fallback) const {
    if (!has(section, key)) return fallback;
    const std::string where = section + "." + key;
    std::vector<unsigned> out;
    for (const std::string& item : split_list(get_string(section, key, ""))) {
        const std::uint64_t wide = parse_u64(where, item);
        if (wide > 0xffffffffull) throw ConfigError(where + ": value too large");
        out.push_back(static_cast<unsigned>(wide));
    }
    if (out.empty()) throw ConfigError(where + ": empty list");
    return out;
}

void IniConfig::validate_schema(
    const std::map<std::string, std::vector<std::string>>& schema) const {
    for (const auto& [section, entries] : sections_) {
        const auto allowed = schema.find(section);
        if (allowed == schema.end())
            throw ConfigError("unknown config section [" + section + "]");
        for (const auto& [key, value] : entries) {
            (void)value;
            if (std::find(allowed->second.begin(), allowed->second.end(), key) ==
                allowed->second.end())
                throw ConfigError("unknown config key '" + key + "' in section [" + section + "]");
        }
    }
}

}  // namespace sheetcli
