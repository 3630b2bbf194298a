#pragma once

// Short-code searches: exhaustive maximum clique over all words of a
// composition, best cyclic code from shift orbits, and stochastic local
// search. Words are packed into one 64-bit mask per symbol, so n <= 64.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccc/bounds.hpp"
#include "ccc/clique.hpp"
#include "ccc/code.hpp"

namespace ccc {

inline constexpr int max_search_length = 64;

struct SearchBudget {
    std::uint64_t seed = 1;
    std::uint64_t max_iterations = 1'000'000;
    int restarts = 10;
    std::optional<double> time_limit = std::nullopt;  // seconds
};

enum class SearchStatus { proven_optimal, complete, incomplete };

inline std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::proven_optimal: return "proven-optimal";
        case SearchStatus::complete: return "complete";
        case SearchStatus::incomplete: return "incomplete";
    }
    return "?";
}

struct SearchResult {
    Code code;
    SearchStatus status;
    std::uint64_t nodes = 0;
};

/// Thrown when an exact search runs out of budget before proving optimality;
/// carries the best code found so far.
class search_incomplete : public std::runtime_error {
public:
    search_incomplete(const std::string& what, Code best) : std::runtime_error(what), best_(std::move(best)) {}
    const Code& best() const noexcept { return best_; }

private:
    Code best_;
};

/// All words of length n and composition comp over [0, q), in lexicographic
/// order.
inline std::vector<Codeword> enumerate_words(int q, int n, const Composition& comp) {
    if (comp.weight() > n) throw std::invalid_argument("enumerate_words: weight exceeds length");
    if (static_cast<int>(comp.parts()) > q - 1) throw std::invalid_argument("enumerate_words: too many symbols");
    std::vector<std::uint8_t> word(static_cast<std::size_t>(n - comp.weight()), 0);
    for (std::size_t s = 0; s < comp.parts(); ++s) word.insert(word.end(), static_cast<std::size_t>(comp[s]), static_cast<std::uint8_t>(s + 1));
    std::vector<Codeword> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

inline std::vector<Codeword> enumerate_words(const CodeParams& p) { return enumerate_words(p.q, p.n, p.comp); }

/// Per-symbol position masks; distance is |supp u ∪ supp v| minus the
/// positions where both carry the same nonzero symbol.
class PackedWord {
public:
    PackedWord(const Codeword& word, int q) : masks_(static_cast<std::size_t>(q - 1), 0) {
        if (word.length() > static_cast<std::size_t>(max_search_length)) {
            throw std::invalid_argument("packed words need length <= 64");
        }
        for (std::size_t i = 0; i < word.length(); ++i) {
            if (word[i] == 0) continue;
            std::uint64_t bit = std::uint64_t{1} << i;
            support_ |= bit;
            masks_[static_cast<std::size_t>(word[i] - 1)] |= bit;
        }
    }

    friend int distance(const PackedWord& u, const PackedWord& v) {
        int agree = 0;
        for (std::size_t s = 0; s < u.masks_.size(); ++s) agree += std::popcount(u.masks_[s] & v.masks_[s]);
        return std::popcount(u.support_ | v.support_) - agree;
    }

private:
    std::uint64_t support_ = 0;
    std::vector<std::uint64_t> masks_;
};

namespace detail {

inline std::vector<PackedWord> pack_all(const std::vector<Codeword>& words, int q) {
    std::vector<PackedWord> out;
    out.reserve(words.size());
    for (const auto& w : words) out.emplace_back(w, q);
    return out;
}

/// Edges join words at distance >= d.
inline ConflictGraph compatibility_graph(const std::vector<Codeword>& words, int q, int d) {
    auto packed = pack_all(words, q);
    ConflictGraph g(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (distance(packed[i], packed[j]) >= d) g.add_edge(i, j);
        }
    }
    return g;
}

inline Code code_from(const CodeParams& p, const std::vector<Codeword>& universe, const std::vector<int>& clique) {
    Code c(p);
    for (int v : clique) c.words.push_back(universe[static_cast<std::size_t>(v)]);
    c.canonicalize();
    return c;
}

/// Orbit key of u under the position permutations fixing v0: for each
/// symbol class of v0, how many of its positions carry each symbol in u.
inline std::vector<int> stabiliser_signature(const Codeword& v0, const Codeword& u, int q) {
    std::vector<int> key(static_cast<std::size_t>(q * q), 0);
    for (std::size_t i = 0; i < u.length(); ++i) ++key[static_cast<std::size_t>(v0[i] * q + u[i])];
    return key;
}

inline void check_searchable(const CodeParams& p) {
    if (p.n > max_search_length) throw std::invalid_argument("search needs n <= 64");
}

/// Maximum clique size of g over `universe`, exploiting that position
/// permutations act transitively on the words: some maximum clique contains
/// word 0, and the neighbourhood of word 0 splits into orbits of its
/// stabiliser, each explored once with earlier orbits excluded.
inline CliqueResult symmetric_max_clique(const ConflictGraph& g, const std::vector<Codeword>& universe, int q,
                                         std::int64_t stop_at, NodeBudget& budget) {
    const Codeword& v0 = universe.front();
    const VertexSet& around = g.neighbours(0);

    std::map<std::vector<int>, std::vector<int>> orbits;
    for (std::size_t v = around.first(); v < around.universe(); v = around.next(v)) {
        orbits[stabiliser_signature(v0, universe[v], q)].push_back(static_cast<int>(v));
    }
    std::vector<std::vector<int>> ordered;
    for (auto& [key, members] : orbits) ordered.push_back(std::move(members));
    // Large orbits first: they are excluded from every later branch.
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

    CliqueResult best;
    best.clique = {0};
    best.value = 1;
    best.complete = true;
    VertexSet remaining = around;
    for (const auto& orbit : ordered) {
        if (best.value >= stop_at) break;
        const auto rep = static_cast<std::size_t>(orbit.front());
        VertexSet branch = remaining & g.neighbours(rep);
        const std::int64_t lower = std::max<std::int64_t>(best.value - 2, 0);
        CliqueResult sub = max_clique(g, branch, budget, lower, stop_at - 2);
        // An empty answer with lower 0 means the branch itself was empty.
        const std::int64_t total = sub.clique.empty() ? (lower == 0 ? 2 : 0) : sub.value + 2;
        if (total > best.value) {
            best.clique = sub.clique;
            best.clique.push_back(0);
            best.clique.push_back(static_cast<int>(rep));
            std::sort(best.clique.begin(), best.clique.end());
            best.value = total;
        }
        if (!sub.complete) {
            best.complete = false;
            break;
        }
        for (int v : orbit) remaining.erase(static_cast<std::size_t>(v));
    }
    if (best.value >= stop_at) best.complete = true;
    return best;
}

inline constexpr std::uint64_t tie_break_min_nodes = 1'000'000;

inline Code exact_search(const CodeParams& p, const std::vector<Codeword>& universe, bool symmetric,
                         const SearchBudget& budget) {
    if (universe.empty()) return Code(p);
    const std::int64_t bound = upper_bound(p).value;
    ConflictGraph g = compatibility_graph(universe, p.q, p.d);
    NodeBudget nodes(budget.max_iterations, budget.time_limit);

    CliqueResult found = symmetric ? symmetric_max_clique(g, universe, p.q, bound, nodes)
                                   : max_clique(g, VertexSet::full(universe.size()), nodes, 0, bound);
    if (!found.complete) {
        throw search_incomplete("exact search budget exhausted with best size " + std::to_string(found.value),
                                code_from(p, universe, found.clique));
    }
    // Second pass: the lexicographically first clique of the optimal size.
    // Word 0 lies in some maximum clique under the symmetric universe. The
    // pass gets its own node allowance; when that runs out the first pass's
    // clique (equally deterministic) is kept.
    const auto size = static_cast<std::size_t>(found.value);
    std::vector<int> seed;
    if (symmetric) seed.push_back(0);
    const std::uint64_t spent = nodes.nodes();
    const std::uint64_t left = budget.max_iterations > spent ? budget.max_iterations - spent : 0;
    NodeBudget tie_break(std::min<std::uint64_t>(left, std::max<std::uint64_t>(tie_break_min_nodes, 4 * spent)));
    auto first = lex_first_clique(g, seed, VertexSet::full(universe.size()), size, tie_break);
    if (!first) {
        if (tie_break.exhausted()) return code_from(p, universe, found.clique);
        throw std::logic_error("exact search: optimum not reproducible in second pass");
    }
    return code_from(p, universe, *first);
}

}  // namespace detail

/// A maximum code, proven optimal. Among maximum codes the lexicographically
/// smallest word list is returned when that tie-break fits in its node
/// allowance; otherwise the first maximum code found. Both are deterministic.
/// Throws search_incomplete when the node budget (max_iterations) or time
/// limit runs out before optimality is proven.
inline Code max_code_exact(const CodeParams& p, const SearchBudget& budget = {.max_iterations = 1'000'000'000},
                           std::size_t universe_limit = 2000) {
    detail::check_searchable(p);
    if (count_words(p.n, p.comp) > static_cast<std::int64_t>(universe_limit)) {
        throw std::invalid_argument("universe of " + p.to_string() + " exceeds the exact-search limit");
    }
    return detail::exact_search(p, enumerate_words(p), true, budget);
}

/// Exact search restricted to a given word list (no symmetry reduction).
inline Code max_code_exact(const CodeParams& p, std::vector<Codeword> universe, const SearchBudget& budget) {
    detail::check_searchable(p);
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    return detail::exact_search(p, universe, false, budget);
}

struct Orbit {
    Codeword representative;
    int size;

    friend bool operator==(const Orbit&, const Orbit&) = default;
};

inline Codeword cyclic_shift(const Codeword& u, int by) {
    const auto n = u.length();
    std::vector<std::uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[(i + static_cast<std::size_t>(by)) % n] = static_cast<std::uint8_t>(u[i]);
    return Codeword(std::move(out));
}

/// Smallest positive shift fixing u.
inline int cyclic_period(const Codeword& u) {
    const int n = static_cast<int>(u.length());
    for (int s = 1; s < n; ++s) {
        if (n % s == 0 && cyclic_shift(u, s) == u) return s;
    }
    return n;
}

/// Every cyclic-shift orbit of the words, ordered by representative.
inline std::vector<Orbit> all_orbits(const CodeParams& p) {
    std::vector<Orbit> out;
    for (const auto& u : enumerate_words(p)) {
        Codeword least = u;
        for (int s = 1; s < p.n; ++s) least = std::min(least, cyclic_shift(u, s));
        if (least == u) out.push_back({u, cyclic_period(u)});
    }
    return out;
}

/// Orbits whose words are pairwise at distance >= d.
inline std::vector<Orbit> orbit_decompose(const CodeParams& p) {
    std::vector<Orbit> out;
    for (auto& orbit : all_orbits(p)) {
        bool ok = true;
        for (int s = 1; s < orbit.size && ok; ++s) ok = hamming_distance(orbit.representative, cyclic_shift(orbit.representative, s)) >= p.d;
        if (ok) out.push_back(std::move(orbit));
    }
    return out;
}

/// Best cyclic code: a maximum weight clique of orbits. The result is a
/// lower bound on the optimum over all codes; status is complete when the
/// search finished (or hit the upper bound), incomplete otherwise.
inline SearchResult max_code_cyclic(const CodeParams& p, const SearchBudget& budget = {.max_iterations = 100'000'000}) {
    detail::check_searchable(p);
    const auto orbits = orbit_decompose(p);
    if (orbits.empty()) return {Code(p), SearchStatus::complete, 0};

    std::vector<std::vector<PackedWord>> shifts;
    for (const auto& o : orbits) {
        std::vector<PackedWord> packed;
        for (int s = 0; s < o.size; ++s) packed.emplace_back(cyclic_shift(o.representative, s), p.q);
        shifts.push_back(std::move(packed));
    }
    ConflictGraph g(orbits.size());
    for (std::size_t a = 0; a < orbits.size(); ++a) {
        g.set_weight(a, orbits[a].size);
        for (std::size_t b = a + 1; b < orbits.size(); ++b) {
            bool ok = std::all_of(shifts[b].begin(), shifts[b].end(),
                                  [&](const PackedWord& w) { return distance(shifts[a].front(), w) >= p.d; });
            if (ok) g.add_edge(a, b);
        }
    }

    const std::int64_t bound = upper_bound(p).value;
    NodeBudget nodes(budget.max_iterations, budget.time_limit);
    CliqueResult best = max_weight_clique(g, VertexSet::full(orbits.size()), nodes, 0, bound);

    Code code(p);
    for (int v : best.clique) {
        const auto& o = orbits[static_cast<std::size_t>(v)];
        for (int s = 0; s < o.size; ++s) code.words.push_back(cyclic_shift(o.representative, s));
    }
    code.canonicalize();
    SearchStatus status = !best.complete ? SearchStatus::incomplete
                          : best.value >= bound ? SearchStatus::proven_optimal
                                                : SearchStatus::complete;
    return {std::move(code), status, nodes.nodes()};
}

namespace detail {

/// State of one local-search trajectory: `target` distinct words and, for
/// each slot, how many other slots it conflicts with.
class LocalSearchState {
public:
    LocalSearchState(const CodeParams& p, std::size_t target, std::mt19937_64& rng)
        : p_(p), rng_(rng), base_(base_word(p)) {
        while (words_.size() < target) {
            Codeword w = random_word();
            if (members_.insert(w).second) {
                packed_.emplace_back(w, p_.q);
                words_.push_back(std::move(w));
            }
        }
        conflicts_.assign(words_.size(), 0);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (std::size_t j = i + 1; j < words_.size(); ++j) {
                if (distance(packed_[i], packed_[j]) < p_.d) {
                    ++conflicts_[i];
                    ++conflicts_[j];
                    ++total_;
                }
            }
        }
    }

    std::size_t total_conflicts() const noexcept { return total_; }

    /// One move; returns false when no replacement word was available.
    bool step(std::size_t universe_size) {
        std::vector<std::size_t> conflicted;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (conflicts_[i] > 0) conflicted.push_back(i);
        }
        if (conflicted.empty()) return true;
        if (members_.size() >= universe_size) return false;
        std::size_t slot = conflicted[std::uniform_int_distribution<std::size_t>(0, conflicted.size() - 1)(rng_)];

        Codeword candidate = random_word();
        while (members_.count(candidate) != 0) candidate = random_word();
        PackedWord packed(candidate, p_.q);

        std::vector<std::size_t> clashes;
        for (std::size_t j = 0; j < words_.size(); ++j) {
            if (j != slot && distance(packed, packed_[j]) < p_.d) clashes.push_back(j);
        }
        if (clashes.size() > conflicts_[slot]) return true;

        for (std::size_t j = 0; j < words_.size(); ++j) {
            if (j != slot && distance(packed_[slot], packed_[j]) < p_.d) --conflicts_[j];
        }
        for (auto j : clashes) ++conflicts_[j];
        total_ = total_ - conflicts_[slot] + clashes.size();
        conflicts_[slot] = clashes.size();
        members_.erase(words_[slot]);
        members_.insert(candidate);
        words_[slot] = std::move(candidate);
        packed_[slot] = std::move(packed);
        return true;
    }

    /// Drops the most conflicted word until no conflicts remain.
    std::vector<Codeword> conflict_free_subset() const {
        std::vector<std::size_t> counts = conflicts_;
        std::vector<bool> alive(words_.size(), true);
        while (true) {
            auto worst = std::max_element(counts.begin(), counts.end());
            if (worst == counts.end() || *worst == 0) break;
            auto slot = static_cast<std::size_t>(worst - counts.begin());
            alive[slot] = false;
            counts[slot] = 0;
            for (std::size_t j = 0; j < words_.size(); ++j) {
                if (alive[j] && j != slot && counts[j] > 0 && distance(packed_[slot], packed_[j]) < p_.d) --counts[j];
            }
        }
        std::vector<Codeword> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (alive[i]) out.push_back(words_[i]);
        }
        return out;
    }

private:
    static std::vector<std::uint8_t> base_word(const CodeParams& p) {
        std::vector<std::uint8_t> word(static_cast<std::size_t>(p.n - p.weight()), 0);
        for (std::size_t s = 0; s < p.comp.parts(); ++s) word.insert(word.end(), static_cast<std::size_t>(p.comp[s]), static_cast<std::uint8_t>(s + 1));
        return word;
    }

    Codeword random_word() {
        std::vector<std::uint8_t> w = base_;
        std::shuffle(w.begin(), w.end(), rng_);
        return Codeword(std::move(w));
    }

    const CodeParams& p_;
    std::mt19937_64& rng_;
    std::vector<std::uint8_t> base_;
    std::vector<Codeword> words_;
    std::vector<PackedWord> packed_;
    std::set<Codeword> members_;
    std::vector<std::size_t> conflicts_;
    std::size_t total_ = 0;
};

}  // namespace detail

/// Stochastic local search for a code of `target` words. max_iterations is
/// shared across `restarts` independent trajectories; the result is the
/// largest conflict-free subset seen, so it may fall short of the target.
/// Deterministic for a fixed seed.
inline Code local_search(const CodeParams& p, std::size_t target, const SearchBudget& budget = {}) {
    detail::check_searchable(p);
    if (static_cast<std::int64_t>(target) > upper_bound(p).value) {
        throw std::invalid_argument("local_search: target exceeds the upper bound " + std::to_string(upper_bound(p).value));
    }
    Code best(p);
    if (target == 0) return best;
    std::mt19937_64 rng(budget.seed);
    const auto universe_size = static_cast<std::size_t>(count_words(p.n, p.comp));
    const int restarts = std::max(budget.restarts, 1);
    const std::uint64_t per_restart = std::max<std::uint64_t>(budget.max_iterations / static_cast<std::uint64_t>(restarts), 1);
    const auto started = NodeBudget::clock::now();

    for (int r = 0; r < restarts; ++r) {
        detail::LocalSearchState state(p, target, rng);
        for (std::uint64_t it = 0; it < per_restart && state.total_conflicts() > 0; ++it) {
            if (!state.step(universe_size)) break;
        }
        auto subset = state.conflict_free_subset();
        if (subset.size() > best.size()) best.words = std::move(subset);
        if (best.size() >= target) break;
        if (budget.time_limit &&
            std::chrono::duration<double>(NodeBudget::clock::now() - started).count() > *budget.time_limit) {
            break;
        }
    }
    best.canonicalize();
    return best;
}

}  // namespace ccc
