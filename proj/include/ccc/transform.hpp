#pragma once

// Code-to-code transformations: composition refinement, shortening, and the
// cyclic distance-5 family of weight-three quaternary codes.

#include <optional>
#include <stdexcept>
#include <vector>

#include "ccc/code.hpp"

namespace ccc {

/// Part j lists (0-based, ascending) the indices of the finer composition
/// whose counts sum to entry j of the coarser one.
using RefinementPartition = std::vector<std::vector<int>>;

namespace detail {

inline bool refine_search(const std::vector<int>& fine, const std::vector<int>& coarse, std::size_t part,
                          std::vector<bool>& used, RefinementPartition& out) {
    if (part == coarse.size()) return std::find(used.begin(), used.end(), false) == used.end();

    // Subsets of the unused indices in lexicographic order of their sorted
    // index lists: a prefix is tried before any of its extensions.
    std::vector<int>& current = out[part];
    auto extend = [&](auto&& self, int start, int sum) -> bool {
        for (int i = start; i < static_cast<int>(fine.size()); ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            int next = sum + fine[static_cast<std::size_t>(i)];
            if (next > coarse[part]) continue;
            used[static_cast<std::size_t>(i)] = true;
            current.push_back(i);
            if (next == coarse[part] && refine_search(fine, coarse, part + 1, used, out)) return true;
            if (next < coarse[part] && self(self, i + 1, next)) return true;
            current.pop_back();
            used[static_cast<std::size_t>(i)] = false;
        }
        return false;
    };
    return extend(extend, 0, 0);
}

}  // namespace detail

/// Finds the lexicographically smallest partition showing that `fine` refines
/// `coarse`, or nothing when no partition exists.
inline std::optional<RefinementPartition> is_refinement(const Composition& fine, const Composition& coarse) {
    if (fine.weight() != coarse.weight() || fine.parts() < coarse.parts()) return std::nullopt;
    RefinementPartition out(coarse.parts());
    std::vector<bool> used(fine.parts(), false);
    if (!detail::refine_search(fine.counts(), coarse.counts(), 0, used, out)) return std::nullopt;
    return out;
}

/// Relabels a code of composition `c.params.comp` into one of composition
/// `fine`: the occurrences of symbol j+1, scanned left to right, become the
/// symbols of part j with the multiplicities given by `fine`.
inline Code refine_code(const Code& c, const Composition& fine, const RefinementPartition& partition, int q_new) {
    const auto& coarse = c.params.comp;
    if (partition.size() != coarse.parts()) throw std::invalid_argument("partition has the wrong number of parts");
    std::vector<int> seen(fine.parts(), 0);
    for (std::size_t j = 0; j < partition.size(); ++j) {
        int sum = 0;
        for (int i : partition[j]) {
            if (i < 0 || i >= static_cast<int>(fine.parts())) throw std::invalid_argument("partition index out of range");
            ++seen[static_cast<std::size_t>(i)];
            sum += fine[static_cast<std::size_t>(i)];
        }
        if (sum != coarse[j]) throw std::invalid_argument("partition part sums do not match the coarse composition");
    }
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
        throw std::invalid_argument("partition does not cover every index exactly once");
    }
    if (q_new <= static_cast<int>(fine.parts())) throw std::invalid_argument("alphabet too small for refined composition");

    // relabel[j] is the sequence of new symbols assigned to successive
    // occurrences of old symbol j+1.
    std::vector<std::vector<std::uint8_t>> relabel(coarse.parts());
    for (std::size_t j = 0; j < partition.size(); ++j) {
        auto part = partition[j];
        std::sort(part.begin(), part.end());
        for (int i : part) relabel[j].insert(relabel[j].end(), static_cast<std::size_t>(fine[static_cast<std::size_t>(i)]),
                                              static_cast<std::uint8_t>(i + 1));
    }

    Code out(CodeParams(q_new, c.params.n, c.params.d, fine));
    out.words.reserve(c.size());
    std::vector<int> expected(static_cast<std::size_t>(c.params.q - 1), 0);
    std::copy(coarse.counts().begin(), coarse.counts().end(), expected.begin());
    for (const auto& word : c.words) {
        if (symbol_counts(word, c.params.q) != expected) {
            throw std::invalid_argument("word " + word.to_string() + " does not have the code's composition");
        }
        std::vector<std::size_t> next(coarse.parts(), 0);
        auto symbols = word.symbols();
        for (auto& s : symbols) {
            if (s == 0) continue;
            auto j = static_cast<std::size_t>(s - 1);
            s = relabel[j][next[j]++];
        }
        out.words.emplace_back(std::move(symbols));
    }
    return out;
}

/// Keeps the words that are zero at `position` and deletes that coordinate.
inline Code shorten_code(const Code& c, int position) {
    if (position < 0 || position >= c.params.n) throw std::out_of_range("shortening position out of range");
    Code out(CodeParams(c.params.q, c.params.n - 1, c.params.d, c.params.comp));
    for (const auto& word : c.words) {
        if (word[static_cast<std::size_t>(position)] != 0) continue;
        auto symbols = word.symbols();
        symbols.erase(symbols.begin() + position);
        out.words.emplace_back(std::move(symbols));
    }
    return out;
}

/// The n cyclic shifts of 1,2,0,3,0,...,0: an (n, 5, [1,1,1])_4 code of size n.
inline Code cyclic_distance5_code(int n) {
    if (n < 7) throw std::invalid_argument("the cyclic distance-5 construction needs n >= 7");
    std::vector<std::uint8_t> base(static_cast<std::size_t>(n), 0);
    base[0] = 1;
    base[1] = 2;
    base[3] = 3;
    Code out(CodeParams(4, n, 5, Composition{1, 1, 1}));
    for (int shift = 0; shift < n; ++shift) {
        std::vector<std::uint8_t> word(base.size());
        for (int i = 0; i < n; ++i) word[static_cast<std::size_t>((i + shift) % n)] = base[static_cast<std::size_t>(i)];
        out.words.emplace_back(std::move(word));
    }
    return out.canonicalize();
}

}  // namespace ccc
