#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sheetcli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimal INI reader: `[section]` headers, `key = value` pairs, `#`/`;`
/// comments, surrounding whitespace ignored. Later duplicates override.
class IniConfig {
public:
    static IniConfig parse_file(const std::string& path);
    static IniConfig parse_text(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    std::uint64_t get_u64(const std::string& section, const std::string& key,
                          std::uint64_t fallback) const;
    unsigned get_unsigned(const std::string& section, const std::string& key,
                          unsigned fallback) const;
    std::vector<double> get_double_list(const std::string& section, const std::string& key,
                                        std::vector<double> fallback) const;
    std::vector<unsigned> get_unsigned_list(const std::string& section, const std::string& key,
                                            std::vector<unsigned> fallback) const;

    /// Rejects any section or key outside the schema, naming the offender.
    void validate_schema(
        const std::map<std::string, std::vector<std::string>>& schema) const;

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace sheetcli
