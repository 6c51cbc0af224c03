#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hexmagic {

/// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

struct SourceLine {
    std::size_t number;
    std::string text;
};

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

/// Non-blank, non-comment lines with their numbers.
inline std::vector<SourceLine> content_lines(std::string_view text) {
    std::vector<SourceLine> out;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        std::string_view t = trim(raw);
        if (!t.empty() && t.front() != '#') out.push_back({number, std::string(t)});
        if (nl == std::string_view::npos) break;
    }
    return out;
}

/// Splits "key: rest" and returns rest, or throws when the key differs.
inline std::string_view expect_key(const SourceLine& line, std::string_view key) {
    std::string_view t = line.text;
    if (t.size() < key.size() + 1 || t.substr(0, key.size()) != key || t[key.size()] != ':')
        throw ParseError("expected '" + std::string(key) + ":'", line.number);
    return trim(t.substr(key.size() + 1));
}

inline bool has_key(const SourceLine& line, std::string_view key) {
    std::string_view t = line.text;
    return t.size() > key.size() && t.substr(0, key.size()) == key && t[key.size()] == ':';
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline int parse_order(const SourceLine& line) {
    std::string_view v = expect_key(line, "order");
    int n = 0;
    for (char c : v) {
        if (c < '0' || c > '9' || n > 100000) throw ParseError("malformed order", line.number);
        n = n * 10 + (c - '0');
    }
    if (v.empty() || n < 1) throw ParseError("order must be a positive integer", line.number);
    return n;
}

}  // namespace detail

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace hexmagic
