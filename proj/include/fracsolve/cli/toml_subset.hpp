#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fracsolve {

/// A TOML value restricted to what run configs need: booleans, numbers,
/// strings and (possibly nested) arrays. Inline tables, dates and dotted keys
/// are rejected.
struct TomlValue {
    using Array = std::vector<TomlValue>;
    std::variant<bool, double, std::string, Array> data;
    bool integer = false;  ///< number written without fraction or exponent

    bool is_bool() const { return std::holds_alternative<bool>(data); }
    bool is_number() const { return std::holds_alternative<double>(data); }
    bool is_string() const { return std::holds_alternative<std::string>(data); }
    bool is_array() const { return std::holds_alternative<Array>(data); }
};

struct TomlEntry {
    TomlValue value;
    int line = 0;
};

/// Flat view of a document: keys are "section.key" (top-level keys have no
/// prefix). Throws ConfigError with the offending line on malformed input,
/// duplicate keys or repeated sections.
class TomlDocument {
public:
    static TomlDocument parse(std::string_view text);

    const TomlEntry* find(const std::string& key) const;
    bool has_section(const std::string& name) const { return sections_.count(name) != 0; }
    int section_line(const std::string& name) const;

    const std::map<std::string, TomlEntry>& entries() const noexcept { return entries_; }

private:
    std::map<std::string, TomlEntry> entries_;
    std::set<std::string> sections_;
    std::map<std::string, int> section_lines_;
};

}  // namespace fracsolve
