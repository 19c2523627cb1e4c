#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace fadespec::cli {

/// Shortest decimal representation that parses back to the same double.
inline std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

inline void append_csv_row(std::string& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const std::string& cell : cells) {
        if (!first) out += ',';
        out += cell;
        first = false;
    }
    out += '\n';
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

/// Write to `path`, or to standard output when path is "-". File output goes
/// through a temporary sibling and a rename, so a failed run leaves no
/// partial file behind.
inline void write_output(const std::string& content, const std::string& path) {
    if (path == "-") {
        std::cout.write(content.data(), static_cast<std::streamsize>(content.size()));
        std::cout.flush();
        if (!std::cout) {
            throw std::runtime_error("write_output: failed writing to standard output");
        }
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path temp(path);
    temp += ".tmp";
    {
        std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
        if (!stream) {
            throw std::runtime_error("write_output: cannot open '" + temp.string() +
                                     "' for writing");
        }
        stream.write(content.data(), static_cast<std::streamsize>(content.size()));
        stream.flush();
        if (!stream) {
            std::error_code ignored;
            fs::remove(temp, ignored);
            throw std::runtime_error("write_output: failed writing '" + temp.string() + "'");
        }
    }
    std::error_code rename_error;
    fs::rename(temp, target, rename_error);
    if (rename_error) {
        std::error_code ignored;
        fs::remove(temp, ignored);
        throw std::runtime_error("write_output: cannot rename '" + temp.string() +
                                 "' to '" + target.string() + "': " + rename_error.message());
    }
}

}  // namespace fadespec::cli
