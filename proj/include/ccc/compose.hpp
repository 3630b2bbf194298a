#pragma once

// Weaving short codes through a PBD or GDD. Each block (and, for a GDD, each
// group) carries a copy of an ingredient code of matching length; since two
// blocks share at most one point, words from different blocks are at
// distance >= 2w - 2, so the result keeps distance d whenever d <= 2w - 2.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "ccc/code.hpp"
#include "ccc/design.hpp"
#include "ccc/errors.hpp"

namespace ccc {

/// Ingredient codes keyed by length.
using IngredientMap = std::map<int, Code>;

struct Rational {
    std::int64_t num;
    std::int64_t den = 1;
};

namespace detail {

inline void check_composable(const CodeParams& target) {
    if (target.d > 2 * target.weight() - 2) {
        throw construction_error("composition through a design needs d <= 2w - 2, got " + target.to_string());
    }
}

inline void check_ingredient(const Code& code, int length, const CodeParams& target) {
    const auto& p = code.params;
    if (p.n != length) {
        throw construction_error("ingredient keyed by " + std::to_string(length) + " has length " + std::to_string(p.n));
    }
    if (p.comp != target.comp || p.d < target.d || p.q > target.q) {
        throw construction_error("ingredient " + p.to_string() + " does not fit target " + target.to_string());
    }
    if (!verify_code(code).ok()) {
        throw construction_error("ingredient of length " + std::to_string(length) + " fails verification");
    }
}

/// The ingredient for a point set of the given size; sets smaller than the
/// weight carry no word, so a missing ingredient is read as empty there.
inline const Code* ingredient_for(const IngredientMap& ingredients, std::size_t size, const CodeParams& target) {
    auto found = ingredients.find(static_cast<int>(size));
    if (found != ingredients.end()) return &found->second;
    if (static_cast<int>(size) < target.weight()) return nullptr;
    throw construction_error("no ingredient code of length " + std::to_string(size));
}

inline void embed(const Code& ingredient, const Block& positions, int n, std::vector<Codeword>& out) {
    for (const auto& word : ingredient.words) {
        std::vector<std::uint8_t> symbols(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < positions.size(); ++i) {
            symbols[static_cast<std::size_t>(positions[i])] = static_cast<std::uint8_t>(word[i]);
        }
        out.emplace_back(std::move(symbols));
    }
}

inline void finish(Code& code) {
    code.canonicalize();
    if (std::adjacent_find(code.words.begin(), code.words.end()) != code.words.end()) {
        throw std::logic_error("composed code contains a repeated word");
    }
}

inline std::vector<int> sorted_points(const Block& b) {
    std::vector<int> out = b;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Builds an (n, d, comp)_q code from a PBD of order n: ingredient word
/// coordinate i goes to the i-th smallest point of the block.
inline Code pbd_compose(const SetSystem& pbd, const IngredientMap& ingredients, const CodeParams& target) {
    detail::check_composable(target);
    if (target.n != pbd.point_count) throw construction_error("target length must equal the design order");
    if (!verify_pbd(pbd).ok()) throw design_error("pbd_compose: design is not a PBD");
    for (const auto& [k, code] : ingredients) detail::check_ingredient(code, k, target);

    Code out(target);
    for (const auto& block : pbd.blocks) {
        if (const Code* ingredient = detail::ingredient_for(ingredients, block.size(), target)) {
            detail::embed(*ingredient, detail::sorted_points(block), target.n, out.words);
        }
    }
    detail::finish(out);
    return out;
}

/// GDD version: blocks carry `block_ingredients`, groups carry
/// `group_ingredients`.
inline Code gdd_compose(const GroupDivisibleDesign& gdd, const IngredientMap& block_ingredients,
                        const IngredientMap& group_ingredients, const CodeParams& target) {
    detail::check_composable(target);
    if (target.n != gdd.point_count()) throw construction_error("target length must equal the design order");
    if (!verify_gdd(gdd).ok()) throw design_error("gdd_compose: design is not a GDD");
    for (const auto& [k, code] : block_ingredients) detail::check_ingredient(code, k, target);
    for (const auto& [k, code] : group_ingredients) detail::check_ingredient(code, k, target);

    Code out(target);
    for (const auto& block : gdd.blocks()) {
        if (const Code* ingredient = detail::ingredient_for(block_ingredients, block.size(), target)) {
            detail::embed(*ingredient, detail::sorted_points(block), target.n, out.words);
        }
    }
    for (const auto& group : gdd.groups) {
        if (const Code* ingredient = detail::ingredient_for(group_ingredients, group.size(), target)) {
            detail::embed(*ingredient, detail::sorted_points(group), target.n, out.words);
        }
    }
    detail::finish(out);
    return out;
}

/// sum_k b_k |C_k| over the blocks, without building the code. Sizes with no
/// ingredient count as zero.
inline std::int64_t predicted_size(const SetSystem& pbd, const std::map<int, std::int64_t>& sizes) {
    std::int64_t total = 0;
    for (const auto& block : pbd.blocks) {
        auto found = sizes.find(static_cast<int>(block.size()));
        if (found != sizes.end()) total += found->second;
    }
    return total;
}

/// sum_k b_k |C_k| + sum_i t_i |C_{g_i}|.
inline std::int64_t predicted_size(const GroupDivisibleDesign& gdd, const std::map<int, std::int64_t>& block_sizes,
                                   const std::map<int, std::int64_t>& group_sizes) {
    std::int64_t total = predicted_size(gdd.base, block_sizes);
    for (const auto& group : gdd.groups) {
        auto found = group_sizes.find(static_cast<int>(group.size()));
        if (found != group_sizes.end()) total += found->second;
    }
    return total;
}

inline std::map<int, std::int64_t> ingredient_sizes(const IngredientMap& ingredients) {
    std::map<int, std::int64_t> out;
    for (const auto& [k, code] : ingredients) out[k] = static_cast<std::int64_t>(code.size());
    return out;
}

inline std::int64_t predicted_size(const SetSystem& pbd, const IngredientMap& ingredients) {
    return predicted_size(pbd, ingredient_sizes(ingredients));
}

inline std::int64_t predicted_size(const GroupDivisibleDesign& gdd, const IngredientMap& block_ingredients,
                                   const IngredientMap& group_ingredients) {
    return predicted_size(gdd, ingredient_sizes(block_ingredients), ingredient_sizes(group_ingredients));
}

/// True iff every k in K has a code of size >= c k (k-1), compared exactly.
/// Composition through any PBD(n, K) then gives at least c n (n-1) words.
inline bool closure_check(Rational c, const std::set<int>& block_sizes, const std::map<int, std::int64_t>& sizes) {
    if (c.den <= 0) throw std::invalid_argument("closure_check: denominator must be positive");
    for (int k : block_sizes) {
        auto found = sizes.find(k);
        if (found == sizes.end()) return false;
        __int128 lhs = static_cast<__int128>(found->second) * c.den;
        __int128 rhs = static_cast<__int128>(c.num) * k * (k - 1);
        if (lhs < rhs) return false;
    }
    return true;
}

/// c n (n-1) - size, as a rational; positive when a code falls short of the
/// c n (n-1) target.
inline Rational closure_shortfall(Rational c, std::int64_t n, std::int64_t size) {
    return {c.num * n * (n - 1) - size * c.den, c.den};
}

}  // namespace ccc
