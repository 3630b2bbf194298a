#pragma once

// Line-based code files:
//
//   ccc q=<q> n=<n> d=<d> comp=<w1>,<w2>,...
//   <one codeword per line, symbols 0-9a-z, no separators>
//
// Lines starting with '#' are comments. The file must end with a newline.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "ccc/code.hpp"
#include "ccc/errors.hpp"

namespace ccc {

namespace detail {

inline int parse_header_int(const std::string& token, const std::string& key, std::size_t line) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) throw format_error("expected '" + prefix + "...' in header", line);
    auto digits = token.substr(prefix.size());
    if (digits.empty() || digits.size() > 9 ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
        throw format_error("bad value for '" + key + "'", line);
    }
    return std::stoi(digits);
}

}  // namespace detail

inline std::string write_code_string(const Code& code) {
    std::string out = "ccc q=" + std::to_string(code.params.q) + " n=" + std::to_string(code.params.n) +
                      " d=" + std::to_string(code.params.d) + " comp=" + code.params.comp.to_list() + "\n";
    for (const auto& word : code.words) {
        out += word.to_string();
        out += '\n';
    }
    return out;
}

inline Code read_code_string(const std::string& text) {
    if (text.empty()) throw format_error("empty code file", 1);
    if (text.back() != '\n') {
        auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
        throw format_error("missing trailing newline", lines);
    }

    std::optional<Code> code;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;

        if (!code) {
            std::istringstream in(line);
            std::string magic, qs, ns, ds, cs, extra;
            in >> magic >> qs >> ns >> ds >> cs;
            if (magic != "ccc" || cs.empty() || (in >> extra)) throw format_error("malformed header", line_no);
            if (line != magic + " " + qs + " " + ns + " " + ds + " " + cs) {
                throw format_error("header fields must be separated by single spaces", line_no);
            }
            int q = detail::parse_header_int(qs, "q", line_no);
            int n = detail::parse_header_int(ns, "n", line_no);
            int d = detail::parse_header_int(ds, "d", line_no);
            if (cs.rfind("comp=", 0) != 0) throw format_error("expected 'comp=...' in header", line_no);
            try {
                code.emplace(CodeParams(q, n, d, Composition::parse(cs.substr(5))));
            } catch (const std::invalid_argument& e) {
                throw format_error(e.what(), line_no);
            }
            continue;
        }

        if (line.size() != static_cast<std::size_t>(code->params.n)) {
            throw format_error("codeword has length " + std::to_string(line.size()) + ", expected " +
                                   std::to_string(code->params.n),
                               line_no);
        }
        std::vector<std::uint8_t> symbols;
        symbols.reserve(line.size());
        for (char c : line) {
            int v = symbol_value(c);
            if (v < 0 || v >= code->params.q) throw format_error(std::string("bad symbol '") + c + "'", line_no);
            symbols.push_back(static_cast<std::uint8_t>(v));
        }
        code->words.emplace_back(std::move(symbols));
    }
    if (!code) throw format_error("no header line", line_no);
    return std::move(*code);
}

inline Code read_code_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return read_code_string(text);
    } catch (const format_error& e) {
        throw format_error(path.string(), e);
    }
}

inline void write_code_file(const std::filesystem::path& path, const Code& code) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw format_error("cannot write " + path.string());
    out << write_code_string(code);
    if (!out) throw format_error("write failed for " + path.string());
}

}  // namespace ccc
