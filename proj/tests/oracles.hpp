#pragma once

// Test-side reference computations. Deliberately naive and independent of
// the library internals: plain vectors, direct loops, no bitsets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline int distance(const Word& a, const Word& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

/// Every word of length n with counts[i] copies of symbol i+1, by
/// recursive placement (no permutation library).
inline std::vector<Word> all_words(int n, const std::vector<int>& counts) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(n), 0);
    std::vector<int> left = counts;
    auto place = [&](auto&& self, std::size_t pos) -> void {
        if (pos == w.size()) {
            if (std::all_of(left.begin(), left.end(), [](int c) { return c == 0; })) out.push_back(w);
            return;
        }
        int remaining = static_cast<int>(w.size() - pos);
        int needed = 0;
        for (int c : left) needed += c;
        if (needed < remaining) {
            w[pos] = 0;
            self(self, pos + 1);
        }
        for (std::size_t s = 0; s < left.size(); ++s) {
            if (left[s] == 0) continue;
            --left[s];
            w[pos] = static_cast<int>(s) + 1;
            self(self, pos + 1);
            ++left[s];
        }
        w[pos] = 0;
    };
    place(place, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// n! / (prod w_i! (n-w)!) by exact factorials (small n only).
inline std::int64_t multinomial(int n, const std::vector<int>& counts) {
    auto fact = [](int k) {
        std::int64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    std::int64_t out = fact(n);
    int w = 0;
    for (int c : counts) {
        out /= fact(c);
        w += c;
    }
    return out / fact(n - w);
}

/// Largest subset of `words` with pairwise distance >= d, by include /
/// exclude recursion over the still-compatible candidates.
inline std::size_t max_code_size(const std::vector<Word>& words, int d) {
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::size_t taken, const std::vector<std::size_t>& candidates) -> void {
        if (candidates.empty()) {
            best = std::max(best, taken);
            return;
        }
        if (taken + candidates.size() <= best) return;
        const std::size_t first = candidates.front();
        std::vector<std::size_t> compatible;
        for (std::size_t k = 1; k < candidates.size(); ++k) {
            if (distance(words[first], words[candidates[k]]) >= d) compatible.push_back(candidates[k]);
        }
        self(self, taken + 1, compatible);
        self(self, taken, std::vector<std::size_t>(candidates.begin() + 1, candidates.end()));
    };
    std::vector<std::size_t> all(words.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    rec(rec, 0, all);
    return best;
}

/// Largest total weight of a pairwise compatible subset, by subset recursion.
inline std::int64_t max_weight_clique(const std::vector<std::vector<bool>>& adjacent, const std::vector<std::int64_t>& weight) {
    std::int64_t best = 0;
    std::vector<std::size_t> chosen;
    std::int64_t total = 0;
    std::int64_t rest = 0;
    for (auto w : weight) rest += w;
    auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
        if (total + remaining <= best) return;
        if (i == weight.size()) {
            best = std::max(best, total);
            return;
        }
        bool fits = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) { return adjacent[i][j]; });
        if (fits) {
            chosen.push_back(i);
            total += weight[i];
            self(self, i + 1, remaining - weight[i]);
            total -= weight[i];
            chosen.pop_back();
        }
        self(self, i + 1, remaining - weight[i]);
    };
    rec(rec, 0, rest);
    return best;
}

/// Pair multiplicities over blocks, keyed by ordered (x < y).
inline std::map<std::pair<int, int>, int> pair_counts(const std::vector<std::vector<int>>& blocks) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) ++out[{std::min(b[i], b[j]), std::max(b[i], b[j])}];
        }
    }
    return out;
}

/// True iff every pair of points 0..n-1 lies in exactly one block.
inline bool is_pbd(int n, const std::vector<std::vector<int>>& blocks) {
    auto counts = pair_counts(blocks);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            auto it = counts.find({x, y});
            if (it == counts.end() || it->second != 1) return false;
        }
    }
    return counts.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// True iff groups partition 0..n-1, pairs inside a group are never covered,
/// and every other pair is covered exactly once.
inline bool is_gdd(int n, const std::vector<std::vector<int>>& groups, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> group_of(static_cast<std::size_t>(n), -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (int x : groups[g]) {
            if (x < 0 || x >= n || group_of[static_cast<std::size_t>(x)] != -1) return false;
            group_of[static_cast<std::size_t>(x)] = static_cast<int>(g);
        }
    }
    if (std::find(group_of.begin(), group_of.end(), -1) != group_of.end()) return false;
    auto counts = pair_counts(blocks);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            auto it = counts.find({x, y});
            int c = it == counts.end() ? 0 : it->second;
            bool same = group_of[static_cast<std::size_t>(x)] == group_of[static_cast<std::size_t>(y)];
            if (c != (same ? 0 : 1)) return false;
        }
    }
    return true;
}

/// GF(4) as {0, 1, a, a+1} encoded 0..3; addition is XOR.
inline int gf4_mul(int x, int y) {
    static const int table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return table[x][y];
}

/// Lines of the affine plane over GF(4): 16 points (x, y) -> 4x + y,
/// 20 lines of size 4.
inline std::vector<std::vector<int>> affine_plane_gf4() {
    std::vector<std::vector<int>> lines;
    for (int m = 0; m < 4; ++m) {
        for (int b = 0; b < 4; ++b) {
            std::vector<int> line;
            for (int x = 0; x < 4; ++x) line.push_back(4 * x + (gf4_mul(m, x) ^ b));
            std::sort(line.begin(), line.end());
            lines.push_back(line);
        }
    }
    for (int c = 0; c < 4; ++c) {
        std::vector<int> line;
        for (int y = 0; y < 4; ++y) line.push_back(4 * c + y);
        lines.push_back(line);
    }
    return lines;
}

}  // namespace oracle
