#pragma once

// Constant-composition codes: compositions, parameters, codewords and the
// verification of a code against its parameters.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccc/report.hpp"

namespace ccc {

/// Largest alphabet size; symbols are written as the characters 0-9a-z.
inline constexpr int max_alphabet = 36;

inline char symbol_char(int s) {
    return static_cast<char>(s < 10 ? '0' + s : 'a' + (s - 10));
}

/// Returns -1 for characters outside 0-9a-z.
inline int symbol_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

/// Counts of the nonzero symbols, kept sorted non-increasing with zeros
/// dropped. A code of composition [w1,...,wk] has exactly wi copies of
/// symbol i in every word.
class Composition {
public:
    explicit Composition(std::vector<int> counts) : counts_(std::move(counts)) {
        for (int c : counts_) {
            if (c < 0) throw std::invalid_argument("composition counts must be non-negative");
        }
        std::erase(counts_, 0);
        if (counts_.empty()) throw std::invalid_argument("composition must have positive weight");
        std::sort(counts_.begin(), counts_.end(), std::greater<>());
    }

    Composition(std::initializer_list<int> counts) : Composition(std::vector<int>(counts)) {}

    const std::vector<int>& counts() const noexcept { return counts_; }
    std::size_t parts() const noexcept { return counts_.size(); }
    int operator[](std::size_t i) const { return counts_[i]; }
    int largest() const noexcept { return counts_.front(); }
    int weight() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0); }

    /// "2,1,1" -- the form used by file headers and the CLI.
    std::string to_list() const {
        std::string out;
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(counts_[i]);
        }
        return out;
    }

    std::string to_string() const { return "[" + to_list() + "]"; }

    /// Parses "2,1,1"; the list must already be normalized.
    static Composition parse(std::string_view text) {
        std::vector<int> counts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            auto item = text.substr(pos, comma - pos);
            if (item.empty() || item.size() > 4 ||
                !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw std::invalid_argument("bad composition list '" + std::string(text) + "'");
            }
            counts.push_back(std::stoi(std::string(item)));
            pos = comma + 1;
        }
        if (std::find(counts.begin(), counts.end(), 0) != counts.end() ||
            !std::is_sorted(counts.begin(), counts.end(), std::greater<>())) {
            throw std::invalid_argument("composition '" + std::string(text) +
                                        "' must be positive and non-increasing");
        }
        return Composition(std::move(counts));
    }

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> counts_;
};

/// (n, d, comp)_q. A distance above 2w is accepted but forces a one-word code.
struct CodeParams {
    int q;
    int n;
    int d;
    Composition comp;

    CodeParams(int q_, int n_, int d_, Composition comp_)
        : q(q_), n(n_), d(d_), comp(std::move(comp_)) {
        if (q < 2 || q > max_alphabet) throw std::invalid_argument("alphabet size must be in [2, 36]");
        if (n < 1) throw std::invalid_argument("length must be positive");
        if (d < 1) throw std::invalid_argument("distance must be positive");
        if (static_cast<int>(comp.parts()) > q - 1) {
            throw std::invalid_argument("composition " + comp.to_string() + " needs more than q-1 symbols");
        }
        if (comp.weight() > n) throw std::invalid_argument("weight exceeds length");
    }

    int weight() const noexcept { return comp.weight(); }
    bool forces_single_word() const noexcept { return d > 2 * weight(); }

    std::string to_string() const {
        return "(" + std::to_string(n) + "," + std::to_string(d) + "," + comp.to_string() + ")_" +
               std::to_string(q);
    }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

class Codeword {
public:
    Codeword() = default;
    explicit Codeword(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {}
    Codeword(std::initializer_list<int> symbols) {
        symbols_.reserve(symbols.size());
        for (int s : symbols) {
            if (s < 0 || s >= max_alphabet) throw std::invalid_argument("symbol out of range");
            symbols_.push_back(static_cast<std::uint8_t>(s));
        }
    }

    /// "1122000000" style text; throws on characters outside 0-9a-z.
    static Codeword parse(std::string_view text) {
        std::vector<std::uint8_t> symbols;
        symbols.reserve(text.size());
        for (char c : text) {
            int v = symbol_value(c);
            if (v < 0) throw std::invalid_argument(std::string("bad symbol character '") + c + "'");
            symbols.push_back(static_cast<std::uint8_t>(v));
        }
        return Codeword(std::move(symbols));
    }

    std::size_t length() const noexcept { return symbols_.size(); }
    int operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<std::uint8_t>& symbols() const noexcept { return symbols_; }
    std::vector<std::uint8_t>& symbols() noexcept { return symbols_; }

    int support_size() const noexcept {
        return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(), [](auto s) { return s != 0; }));
    }

    std::string to_string() const {
        std::string out;
        out.reserve(symbols_.size());
        for (auto s : symbols_) out += symbol_char(s);
        return out;
    }

    friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
    std::vector<std::uint8_t> symbols_;
};

/// A code together with the parameters it claims. Words are kept in a vector
/// so that duplicates can be reported by verification rather than hidden.
struct Code {
    CodeParams params;
    std::vector<Codeword> words;

    explicit Code(CodeParams p, std::vector<Codeword> w = {}) : params(std::move(p)), words(std::move(w)) {}

    std::size_t size() const noexcept { return words.size(); }
    bool empty() const noexcept { return words.empty(); }

    /// Sorts the words into canonical (lexicographic) order.
    Code& canonicalize() {
        std::sort(words.begin(), words.end());
        return *this;
    }
};

inline int hamming_distance(const Codeword& u, const Codeword& v) {
    if (u.length() != v.length()) throw std::invalid_argument("codewords have different lengths");
    int dist = 0;
    for (std::size_t i = 0; i < u.length(); ++i) dist += u[i] != v[i] ? 1 : 0;
    return dist;
}

/// Occurrences of symbols 1..q-1, in symbol order (not normalized).
inline std::vector<int> symbol_counts(const Codeword& u, int q) {
    std::vector<int> counts(static_cast<std::size_t>(q > 1 ? q - 1 : 0), 0);
    for (std::size_t i = 0; i < u.length(); ++i) {
        int s = u[i];
        if (s >= q) throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                                std::to_string(q));
        if (s != 0) ++counts[static_cast<std::size_t>(s - 1)];
    }
    return counts;
}

inline Composition composition_of(const Codeword& u, int q) {
    return Composition(symbol_counts(u, q));
}

inline int min_distance(const Code& c) {
    if (c.size() < 2) throw std::invalid_argument("minimum distance needs at least two words");
    int best = static_cast<int>(c.params.n) + 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) best = std::min(best, hamming_distance(c.words[i], c.words[j]));
    }
    return best;
}

/// Checks lengths, symbols, the exact per-symbol composition, duplicates and
/// pairwise distances. Violations come out in word / pair order.
inline VerifyReport verify_code(const Code& c) {
    VerifyReport report;
    const auto& p = c.params;
    const auto n = static_cast<std::size_t>(p.n);

    std::vector<int> expected(static_cast<std::size_t>(p.q - 1), 0);
    std::copy(p.comp.counts().begin(), p.comp.counts().end(), expected.begin());

    std::vector<bool> usable(c.size(), true);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& u = c.words[i];
        const auto idx = static_cast<std::int64_t>(i);
        if (u.length() != n) {
            report.violations.push_back({ViolationKind::length, {idx}, static_cast<std::int64_t>(u.length())});
            usable[i] = false;
            continue;
        }
        auto bad = std::find_if(u.symbols().begin(), u.symbols().end(), [&](auto s) { return s >= p.q; });
        if (bad != u.symbols().end()) {
            report.violations.push_back({ViolationKind::symbol, {idx}, *bad});
            usable[i] = false;
            continue;
        }
        if (symbol_counts(u, p.q) != expected) {
            report.violations.push_back({ViolationKind::composition, {idx}, u.support_size()});
        }
    }

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (usable[i]) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return c.words[a] < c.words[b]; });
    std::vector<bool> duplicate(c.size(), false);
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (c.words[order[k]] == c.words[order[k - 1]]) {
            auto a = std::min(order[k], order[k - 1]);
            auto b = std::max(order[k], order[k - 1]);
            report.violations.push_back(
                {ViolationKind::duplicate, {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)}, 0});
            duplicate[order[k]] = true;
        }
    }

    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!usable[i] || duplicate[i]) continue;
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            if (!usable[j] || duplicate[j]) continue;
            int dist = hamming_distance(c.words[i], c.words[j]);
            if (dist < p.d) {
                report.violations.push_back(
                    {ViolationKind::distance, {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)}, dist});
            }
        }
    }
    return report;
}

}  // namespace ccc
