#pragma once

// Upper bounds on the size of constant-composition codes, and the congruence
// conditions under which a pairwise balanced design can exist.
//
// All arithmetic is exact; products are formed in 128-bit integers so that
// lengths up to 10^6 never overflow.

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccc/code.hpp"

namespace ccc {

enum class BoundRule {
    johnson_step,
    johnson_distance_2w_minus_2,
    johnson_distance_2w_minus_3,
    svanstrom_odd,
    weight_four_five_table,
    quaternary_weight_three_table,
    trivial,
};

inline std::string_view to_string(BoundRule rule) {
    switch (rule) {
        case BoundRule::johnson_step: return "johnson-step";
        case BoundRule::johnson_distance_2w_minus_2: return "johnson-d=2w-2";
        case BoundRule::johnson_distance_2w_minus_3: return "johnson-d=2w-3";
        case BoundRule::svanstrom_odd: return "svanstrom-odd";
        case BoundRule::weight_four_five_table: return "weight-4-5-table";
        case BoundRule::quaternary_weight_three_table: return "quaternary-weight-3-table";
        case BoundRule::trivial: return "trivial";
    }
    return "unknown";
}

struct BoundResult {
    std::int64_t value;
    BoundRule rule;
    std::string citation;
};

using wide_int = __int128;

/// The correction term of the odd-length ternary weight-three bound.
inline std::int64_t odd_length_deficit(std::int64_t n) {
    if (n % 2 == 0) throw std::invalid_argument("odd_length_deficit needs odd n");
    if (n < 0) throw std::invalid_argument("odd_length_deficit needs positive n");
    if (n % 4 == 1) return 0;
    switch (n % 12) {
        case 3: return n;
        case 7: return n + 2;
        default: return n + 4;  // n = 11 (mod 12)
    }
}

/// A_3(n, 4, [2,1]) <= n(n-1)/4 - deficit(n)/6 for odd n.
inline BoundResult bound_svanstrom(std::int64_t n) {
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("the odd-length ternary bound needs odd n >= 3");
    wide_int twelve_times = wide_int(3) * n * (n - 1) - wide_int(2) * odd_length_deficit(n);
    if (twelve_times % 12 != 0) throw std::logic_error("odd-length ternary bound is not an integer");
    return {static_cast<std::int64_t>(twelve_times / 12), BoundRule::svanstrom_odd,
            "Svanstrom (IEEE Trans. Inf. Theory 46, 2000): ternary weight-three distance-four bound, odd n"};
}

/// One application of the Johnson-type recursion: floor((n / w1) * inner),
/// where `inner` bounds the code obtained by dropping one copy of symbol 1.
inline std::int64_t johnson_step(std::int64_t n, std::int64_t w1, std::int64_t inner) {
    if (n < 1 || w1 < 1 || inner < 0) throw std::invalid_argument("johnson_step needs n >= 1, w1 >= 1, inner >= 0");
    return static_cast<std::int64_t>(wide_int(n) * inner / w1);
}

/// d = 2w - 2: floor((n / w1) * floor((n - 1) / (w - 1))).
inline BoundResult bound_johnson_2w_minus_2(const CodeParams& p) {
    const std::int64_t w = p.weight();
    if (p.d != 2 * w - 2 || w < 2) throw std::invalid_argument("closed-form Johnson bound needs d = 2w - 2");
    const std::int64_t n = p.n;
    return {johnson_step(n, p.comp.largest(), (n - 1) / (w - 1)), BoundRule::johnson_distance_2w_minus_2,
            "Johnson-type bound (Svanstrom, Ostergard, Bogdanova 2002) with disjoint-support inner codes"};
}

/// d = 2w - 3 and w1 >= 2: floor((n / w1) * floor((n - 1) / (w1 - 1))).
inline BoundResult bound_johnson_2w_minus_3(const CodeParams& p) {
    const std::int64_t w = p.weight();
    const std::int64_t w1 = p.comp.largest();
    if (p.d != 2 * w - 3 || w1 < 2) throw std::invalid_argument("closed-form Johnson bound needs d = 2w - 3, w1 >= 2");
    const std::int64_t n = p.n;
    return {johnson_step(n, w1, (n - 1) / (w1 - 1)), BoundRule::johnson_distance_2w_minus_3,
            "Johnson-type bound (Svanstrom, Ostergard, Bogdanova 2002) applied twice"};
}

namespace detail {

inline std::optional<std::int64_t> weight_four_five_divisor(const CodeParams& p) {
    const auto& c = p.comp;
    if ((p.d == 5 && c == Composition{3, 1}) || (p.d == 6 && c == Composition{2, 2}) ||
        (p.d == 6 && c == Composition{2, 1, 1})) {
        return 6;
    }
    if (p.d == 6 && c == Composition{3, 1}) return 9;
    if (p.d == 7 && c == Composition{4, 1}) return 12;
    return std::nullopt;
}

}  // namespace detail

/// Tabulated n(n-1)/c bounds for weight four and five.
inline BoundResult bound_weight_four_five(const CodeParams& p) {
    auto divisor = detail::weight_four_five_divisor(p);
    if (!divisor) throw std::invalid_argument("no tabulated weight-four/five bound for " + p.to_string());
    const std::int64_t n = p.n;
    return {static_cast<std::int64_t>(wide_int(n) * (n - 1) / *divisor), BoundRule::weight_four_five_table,
            "n(n-1)/" + std::to_string(*divisor) + " consequence of the Johnson-type bound"};
}

/// A_q(n, d, [1,1,1]) for d in {3, 4, 5}.
inline BoundResult bound_quaternary_weight_three(std::int64_t n, int d) {
    wide_int value;
    switch (d) {
        case 3: value = wide_int(n) * (n - 1); break;
        case 4: value = wide_int(n) * ((n - 1) / 2); break;
        case 5: value = n; break;
        default: throw std::invalid_argument("quaternary weight-three table covers d in {3,4,5}");
    }
    return {static_cast<std::int64_t>(value), BoundRule::quaternary_weight_three_table,
            "Johnson-type bound for weight-three quaternary codes, d=" + std::to_string(d)};
}

/// Number of words of the given length and composition, saturating at
/// INT64_MAX.
inline std::int64_t count_words(int n, const Composition& comp) {
    // Multiply binomials C(remaining, w_i) one at a time.
    wide_int total = 1;
    const wide_int cap = INT64_MAX;
    int remaining = n;
    for (int w : comp.counts()) {
        wide_int binom = 1;
        for (int i = 1; i <= w; ++i) {
            binom = binom * (remaining - w + i) / i;
            if (binom > cap) return INT64_MAX;
        }
        total *= binom;
        if (total > cap) return INT64_MAX;
        remaining -= w;
    }
    return static_cast<std::int64_t>(total);
}

/// Bounds that need nothing beyond the parameters: no second word when
/// d > 2w, disjoint supports when d = 2w, otherwise every word of the right
/// composition.
inline BoundResult bound_trivial(const CodeParams& p) {
    const int w = p.weight();
    if (p.d > 2 * w) return {1, BoundRule::trivial, "two distinct words differ in at most 2w positions"};
    if (p.d == 2 * w) return {p.n / w, BoundRule::trivial, "distance 2w forces disjoint supports"};
    return {count_words(p.n, p.comp), BoundRule::trivial, "number of words of this composition"};
}

/// Smallest applicable bound; ties go to the rule listed first in BoundRule.
inline BoundResult upper_bound(const CodeParams& p) {
    std::vector<BoundResult> candidates;
    const int w = p.weight();
    if (p.d == 2 * w - 2 && w >= 2) candidates.push_back(bound_johnson_2w_minus_2(p));
    if (p.d == 2 * w - 3 && p.comp.largest() >= 2) candidates.push_back(bound_johnson_2w_minus_3(p));
    if (p.d == 4 && p.comp == Composition{2, 1} && p.n % 2 == 1 && p.n >= 3) candidates.push_back(bound_svanstrom(p.n));
    if (detail::weight_four_five_divisor(p)) candidates.push_back(bound_weight_four_five(p));
    if (p.comp == Composition{1, 1, 1} && p.d >= 3 && p.d <= 5) candidates.push_back(bound_quaternary_weight_three(p.n, p.d));
    candidates.push_back(bound_trivial(p));

    const BoundResult* best = &candidates.front();
    for (const auto& c : candidates) {
        if (c.value < best->value || (c.value == best->value && c.rule < best->rule)) best = &c;
    }
    return *best;
}

struct CongruenceProfile {
    std::int64_t alpha;
    std::int64_t beta;
    std::set<std::int64_t> block_sizes;
};

inline CongruenceProfile congruence_profile(const std::set<std::int64_t>& block_sizes) {
    if (block_sizes.empty()) throw std::invalid_argument("congruence profile needs at least one block size");
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    for (auto k : block_sizes) {
        if (k < 2) throw std::invalid_argument("block sizes must be at least 2");
        alpha = std::gcd(alpha, k - 1);
        beta = std::gcd(beta, k * (k - 1));
    }
    return {alpha, beta, block_sizes};
}

/// The necessary congruences for a PBD(n, K); they are also sufficient for
/// all large n, but nothing here claims existence at a particular n.
inline bool pbd_admissible(std::int64_t n, const std::set<std::int64_t>& block_sizes) {
    if (n < 1) throw std::invalid_argument("pbd_admissible needs n >= 1");
    auto profile = congruence_profile(block_sizes);
    return (n - 1) % profile.alpha == 0 && static_cast<std::int64_t>(wide_int(n) * (n - 1) % profile.beta) == 0;
}

}  // namespace ccc
