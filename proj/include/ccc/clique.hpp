#pragma once

// Bitset graphs and branch-and-bound clique solvers with greedy-colouring
// bounds: plain maximum clique, maximum weight clique, and a search for the
// lexicographically first clique of a given size.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ccc {

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : size_(universe), bits_((universe + 63) / 64, 0) {}

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    std::size_t universe() const noexcept { return size_; }
    void insert(std::size_t v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(std::size_t v) { bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(std::size_t v) const { return (bits_[v >> 6] >> (v & 63)) & 1U; }

    bool empty() const {
        return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
    }

    std::size_t count() const {
        std::size_t total = 0;
        for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    /// Lowest member, or universe() when empty.
    std::size_t first() const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(bits_[i]));
        }
        return size_;
    }

    /// Lowest member greater than v, or universe().
    std::size_t next(std::size_t v) const {
        std::size_t from = v + 1;
        if (from >= size_) return size_;
        std::size_t i = from >> 6;
        std::uint64_t w = bits_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++i == bits_.size()) return size_;
            w = bits_[i];
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::size_t v = first(); v < size_; v = next(v)) out.push_back(static_cast<int>(v));
        return out;
    }

    VertexSet& operator&=(const VertexSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
        return *this;
    }

    /// Removes every member <= v.
    void erase_through(std::size_t v) {
        std::size_t full_words = (v + 1) >> 6;
        for (std::size_t i = 0; i < full_words && i < bits_.size(); ++i) bits_[i] = 0;
        if (full_words < bits_.size()) bits_[full_words] &= ~std::uint64_t{0} << ((v + 1) & 63);
    }

    VertexSet& subtract(const VertexSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~other.bits_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Undirected graph without loops; an edge joins two compatible vertices.
/// Weights are used only by the weighted solver.
class ConflictGraph {
public:
    explicit ConflictGraph(std::size_t n) : adjacency_(n, VertexSet(n)), weights_(n, 1) {}

    std::size_t size() const noexcept { return adjacency_.size(); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) throw std::invalid_argument("ConflictGraph: self-loop");
        adjacency_[u].insert(v);
        adjacency_[v].insert(u);
    }

    bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].contains(v); }
    const VertexSet& neighbours(std::size_t v) const { return adjacency_[v]; }
    std::int64_t weight(std::size_t v) const { return weights_[v]; }
    void set_weight(std::size_t v, std::int64_t w) { weights_[v] = w; }

    /// Subgraph on `keep`, vertices renumbered in the order given.
    ConflictGraph induced(const std::vector<int>& keep) const {
        ConflictGraph out(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) {
            out.weights_[i] = weights_[static_cast<std::size_t>(keep[i])];
            for (std::size_t j = i + 1; j < keep.size(); ++j) {
                if (adjacent(static_cast<std::size_t>(keep[i]), static_cast<std::size_t>(keep[j]))) out.add_edge(i, j);
            }
        }
        return out;
    }

private:
    std::vector<VertexSet> adjacency_;
    std::vector<std::int64_t> weights_;
};

/// Node and wall-clock allowance shared by consecutive solver calls.
class NodeBudget {
public:
    using clock = std::chrono::steady_clock;

    explicit NodeBudget(std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max(),
                        std::optional<double> seconds = std::nullopt)
        : node_limit_(node_limit) {
        if (seconds) deadline_ = clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(*seconds));
    }

    /// Counts one node; false once the allowance is spent.
    bool tick() {
        if (exhausted_) return false;
        if (++nodes_ > node_limit_) exhausted_ = true;
        if (deadline_ && (nodes_ & 1023U) == 0 && clock::now() > *deadline_) exhausted_ = true;
        return !exhausted_;
    }

    bool exhausted() const noexcept { return exhausted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    std::optional<clock::time_point> deadline_;
    bool exhausted_ = false;
};

struct CliqueResult {
    std::vector<int> clique;  // sorted vertex indices of the input graph
    std::int64_t value = 0;   // size, or total weight for the weighted solver
    bool complete = false;    // search finished or reached stop_at
};

namespace detail {

/// Greedy sequential colouring of `p` in vertex order. Vertices come back
/// grouped by colour, ascending; colour[i] belongs to order[i].
inline void colour_sort(const ConflictGraph& g, const VertexSet& p, std::vector<int>& order, std::vector<int>& colour) {
    order.clear();
    colour.clear();
    VertexSet uncoloured = p;
    int k = 0;
    while (!uncoloured.empty()) {
        ++k;
        VertexSet q = uncoloured;
        for (std::size_t v = q.first(); v < q.universe(); v = q.first()) {
            uncoloured.erase(v);
            q.erase(v);
            q.subtract(g.neighbours(v));
            order.push_back(static_cast<int>(v));
            colour.push_back(k);
        }
    }
}

/// Vertices sorted by degree (descending), ties by index.
inline std::vector<int> degree_order(const ConflictGraph& g, const std::vector<int>& vertices) {
    std::vector<std::pair<std::size_t, int>> keyed;
    VertexSet within(g.size());
    for (int v : vertices) within.insert(static_cast<std::size_t>(v));
    for (int v : vertices) keyed.emplace_back((g.neighbours(static_cast<std::size_t>(v)) & within).count(), v);
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<int> out;
    for (auto [deg, v] : keyed) out.push_back(v);
    return out;
}

class MaxCliqueSolver {
public:
    MaxCliqueSolver(const ConflictGraph& g, std::int64_t lower, std::int64_t stop_at, NodeBudget& budget, bool weighted)
        : g_(g), best_value_(lower), stop_at_(stop_at), budget_(budget), weighted_(weighted) {}

    void run(const VertexSet& p) {
        std::vector<int> current;
        expand(current, 0, p);
    }

    bool stopped() const noexcept { return stopped_; }
    std::int64_t best_value() const noexcept { return best_value_; }
    const std::vector<int>& best() const noexcept { return best_; }

private:
    void expand(std::vector<int>& current, std::int64_t value, VertexSet p) {
        if (stopped_) return;
        if (!budget_.tick()) {
            stopped_ = true;
            return;
        }
        std::vector<int> order;
        std::vector<int> colour;
        colour_sort(g_, p, order, colour);

        // Bound for the vertices of colours 1..c.
        std::vector<std::int64_t> bound(colour.empty() ? 1 : static_cast<std::size_t>(colour.back()) + 1, 0);
        for (std::size_t i = 0; i < order.size(); ++i) {
            auto c = static_cast<std::size_t>(colour[i]);
            std::int64_t w = weighted_ ? g_.weight(static_cast<std::size_t>(order[i])) : 1;
            bound[c] = std::max(bound[c], w);
        }
        std::partial_sum(bound.begin(), bound.end(), bound.begin());

        for (std::size_t i = order.size(); i-- > 0;) {
            if (value + bound[static_cast<std::size_t>(colour[i])] <= best_value_) return;
            auto v = static_cast<std::size_t>(order[i]);
            std::int64_t next_value = value + (weighted_ ? g_.weight(v) : 1);
            current.push_back(order[i]);
            VertexSet next = p & g_.neighbours(v);
            if (next_value > best_value_) {
                best_value_ = next_value;
                best_ = current;
                if (best_value_ >= stop_at_) {
                    stopped_ = true;
                    return;
                }
            }
            if (!next.empty()) expand(current, next_value, std::move(next));
            if (stopped_) return;
            current.pop_back();
            p.erase(v);
        }
    }

    const ConflictGraph& g_;
    std::int64_t best_value_;
    std::int64_t stop_at_;
    NodeBudget& budget_;
    bool weighted_;
    bool stopped_ = false;
    std::vector<int> best_;
};

inline CliqueResult solve_clique(const ConflictGraph& g, const VertexSet& candidates, std::int64_t lower,
                                 std::int64_t stop_at, NodeBudget& budget, bool weighted) {
    std::vector<int> order = degree_order(g, candidates.members());
    ConflictGraph sub = g.induced(order);
    MaxCliqueSolver solver(sub, lower, stop_at, budget, weighted);
    solver.run(VertexSet::full(order.size()));

    CliqueResult result;
    for (int v : solver.best()) result.clique.push_back(order[static_cast<std::size_t>(v)]);
    std::sort(result.clique.begin(), result.clique.end());
    result.value = result.clique.empty() ? lower : solver.best_value();
    result.complete = !budget.exhausted() || solver.best_value() >= stop_at;
    return result;
}

}  // namespace detail

/// Largest clique inside `candidates` with more than `lower` vertices; an
/// empty clique in the result means none exists (when complete). Stops as
/// soon as a clique of `stop_at` vertices is found.
inline CliqueResult max_clique(const ConflictGraph& g, const VertexSet& candidates, NodeBudget& budget,
                               std::int64_t lower = 0,
                               std::int64_t stop_at = std::numeric_limits<std::int64_t>::max()) {
    return detail::solve_clique(g, candidates, lower, stop_at, budget, false);
}

/// Same contract with vertex weights; `value` is the clique weight.
inline CliqueResult max_weight_clique(const ConflictGraph& g, const VertexSet& candidates, NodeBudget& budget,
                                      std::int64_t lower = 0,
                                      std::int64_t stop_at = std::numeric_limits<std::int64_t>::max()) {
    return detail::solve_clique(g, candidates, lower, stop_at, budget, true);
}

namespace detail {

class LexFirstSolver {
public:
    LexFirstSolver(const ConflictGraph& g, std::size_t target, NodeBudget& budget)
        : g_(g), target_(target), budget_(budget) {}

    bool run(std::vector<int>& clique, const VertexSet& p) { return extend(clique, p); }

private:
    bool extend(std::vector<int>& clique, VertexSet p) {
        if (clique.size() >= target_) return true;
        if (!budget_.tick()) return false;
        std::vector<int> order;
        std::vector<int> colour;
        colour_sort(g_, p, order, colour);
        if (clique.size() + static_cast<std::size_t>(colour.empty() ? 0 : colour.back()) < target_) return false;

        for (std::size_t v = p.first(); v < p.universe(); v = p.next(v)) {
            VertexSet next = p & g_.neighbours(v);
            next.erase_through(v);
            clique.push_back(static_cast<int>(v));
            if (extend(clique, std::move(next))) return true;
            clique.pop_back();
            if (budget_.exhausted()) return false;
            VertexSet rest = p;
            rest.erase_through(v);
            if (clique.size() + rest.count() < target_) return false;
        }
        return false;
    }

    const ConflictGraph& g_;
    std::size_t target_;
    NodeBudget& budget_;
};

}  // namespace detail

/// Extends `seed` (a clique, sorted) by vertices from `candidates` that are
/// larger than every seed vertex, returning the lexicographically first
/// sorted clique of exactly `target` vertices. nullopt if none exists or the
/// budget runs out (check budget.exhausted()).
inline std::optional<std::vector<int>> lex_first_clique(const ConflictGraph& g, std::vector<int> seed,
                                                        const VertexSet& candidates, std::size_t target,
                                                        NodeBudget& budget) {
    VertexSet p = candidates;
    for (int s : seed) p &= g.neighbours(static_cast<std::size_t>(s));
    if (!seed.empty()) {
        p.erase_through(static_cast<std::size_t>(*std::max_element(seed.begin(), seed.end())));
    }
    std::sort(seed.begin(), seed.end());
    detail::LexFirstSolver solver(g, target, budget);
    if (solver.run(seed, p)) return seed;
    return std::nullopt;
}

}  // namespace ccc
