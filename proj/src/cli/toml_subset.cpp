#include "fracsolve/cli/toml_subset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "fracsolve/error.hpp"

namespace fracsolve {

namespace {

bool is_bare_key_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Cursor over the value text of one key, which may span several physical lines.
class ValueParser {
public:
    ValueParser(std::string_view text, int line, std::string key) : text_(text), line_(line), key_(std::move(key)) {}

    TomlValue parse_document_value() {
        TomlValue v = parse_value();
        skip_space_and_comments();
        if (pos_ != text_.size()) fail("unexpected text after value");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ConfigError(msg, line_, key_); }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    TomlValue parse_value() {
        skip_space_and_comments();
        if (pos_ >= text_.size()) fail("missing value");
        const char c = text_[pos_];
        if (c == '"') return {parse_basic_string()};
        if (c == '\'') return {parse_literal_string()};
        if (c == '[') return parse_array();
        if (c == '{') fail("inline tables are not supported");
        return parse_scalar();
    }

    std::string parse_basic_string() {
        ++pos_;
        std::string out;
        while (pos_ < text_.size()) {
            const char c = text_[pos_++];
            if (c == '"') return out;
            if (c == '\n') break;
            if (c != '\\') {
                out += c;
                continue;
            }
            if (pos_ >= text_.size()) break;
            switch (const char e = text_[pos_++]) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                default: fail(std::string("unsupported escape \\") + e);
            }
        }
        fail("unterminated string");
    }

    std::string parse_literal_string() {
        ++pos_;
        const auto end = text_.find_first_of("'\n", pos_);
        if (end == std::string_view::npos || text_[end] != '\'') fail("unterminated string");
        std::string out(text_.substr(pos_, end - pos_));
        pos_ = end + 1;
        return out;
    }

    TomlValue parse_array() {
        ++pos_;
        TomlValue::Array items;
        skip_space_and_comments();
        if (pos_ < text_.size() && text_[pos_] == ']') {
            ++pos_;
            return {items};
        }
        while (true) {
            items.push_back(parse_value());
            skip_space_and_comments();
            if (pos_ >= text_.size()) fail("unterminated array");
            if (text_[pos_] == ']') {
                ++pos_;
                return {items};
            }
            if (text_[pos_] != ',') fail("expected ',' or ']' in array");
            ++pos_;
            skip_space_and_comments();
            if (pos_ < text_.size() && text_[pos_] == ']') {  // trailing comma
                ++pos_;
                return {items};
            }
        }
    }

    TomlValue parse_scalar() {
        const auto start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '#' &&
               text_[pos_] != '\n' && text_[pos_] != ' ' && text_[pos_] != '\t' && text_[pos_] != '\r')
            ++pos_;
        std::string_view tok = text_.substr(start, pos_ - start);
        if (tok == "true") return {true};
        if (tok == "false") return {false};

        TomlValue v;
        std::string_view num = tok;
        double sign = 1.0;
        if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
            if (num.front() == '-') sign = -1.0;
            num.remove_prefix(1);
        }
        if (num == "inf") {
            v.data = sign * std::numeric_limits<double>::infinity();
            return v;
        }
        if (num == "nan") {
            v.data = std::numeric_limits<double>::quiet_NaN();
            return v;
        }
        double value = 0.0;
        const auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
        if (num.empty() || ec != std::errc() || end != num.data() + num.size() || num.front() == '.' ||
            num.back() == '.')
            fail("invalid value '" + std::string(tok) + "'");
        v.data = sign * value;
        v.integer = num.find_first_of(".eE") == std::string_view::npos;
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    std::string key_;
};

// Bracket depth outside strings and comments, used to join multi-line arrays.
int bracket_balance(std::string_view line) {
    int depth = 0;
    char quote = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quote) {
            if (c == '\\' && quote == '"') ++i;
            else if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '#') {
            break;
        } else if (c == '[') {
            ++depth;
        } else if (c == ']') {
            --depth;
        }
    }
    return depth;
}

}  // namespace

TomlDocument TomlDocument::parse(std::string_view text) {
    TomlDocument doc;
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        const auto nl = text.find('\n', start);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        lines.push_back(text.substr(start, end - start));
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }

    std::string section;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string_view line = trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;

        if (line.front() == '[') {
            const auto close = line.find(']');
            if (close == std::string_view::npos) throw ConfigError("unterminated section header", line_no);
            const std::string_view rest = trim(line.substr(close + 1));
            if (!rest.empty() && rest.front() != '#') throw ConfigError("unexpected text after section header", line_no);
            const std::string_view name = trim(line.substr(1, close - 1));
            if (name.empty() || name.front() == '[') throw ConfigError("unsupported section header", line_no);
            for (char c : name)
                if (!is_bare_key_char(c)) throw ConfigError("invalid section name", line_no, std::string(name));
            section = std::string(name);
            if (!doc.sections_.insert(section).second) throw ConfigError("section repeated", line_no, section);
            doc.section_lines_[section] = line_no;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
        std::string_view bare = trim(line.substr(0, eq));
        if (bare.size() >= 2 && bare.front() == '"' && bare.back() == '"') bare = bare.substr(1, bare.size() - 2);
        if (bare.empty()) throw ConfigError("empty key", line_no);
        for (char c : bare)
            if (!is_bare_key_char(c)) throw ConfigError("invalid key (dotted keys are not supported)", line_no, std::string(bare));
        const std::string key = section.empty() ? std::string(bare) : section + "." + std::string(bare);

        std::string value_text(line.substr(eq + 1));
        int depth = bracket_balance(value_text);
        while (depth > 0 && i + 1 < lines.size()) {
            ++i;
            value_text += '\n';
            value_text += lines[i];
            depth += bracket_balance(lines[i]);
        }

        TomlValue value = ValueParser(value_text, line_no, key).parse_document_value();
        if (!doc.entries_.emplace(key, TomlEntry{std::move(value), line_no}).second)
            throw ConfigError("duplicate key", line_no, key);
    }
    return doc;
}

const TomlEntry* TomlDocument::find(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

int TomlDocument::section_line(const std::string& name) const {
    const auto it = section_lines_.find(name);
    return it == section_lines_.end() ? 0 : it->second;
}

}  // namespace fracsolve
