#pragma once

// Existence criteria for uniform GDDs with block sizes four and five, and the
// published exception sets for the PBD closures used with weight-three
// quaternary codes. The tables are literature data, transcribed as-is.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace ccc {

/// {4}-GDD of type g^4 m^1 (m > 0): exists iff g = m = 0 (mod 3) and m <= 3g/2
/// (Ge and Rees, 2002).
inline bool gdd4_g4m1_admissible(std::int64_t g, std::int64_t m) {
    if (g < 0 || m < 0) return false;
    return g % 3 == 0 && m % 3 == 0 && m > 0 && 2 * m <= 3 * g;
}

enum class Existence { exists, does_not_exist, unknown };

inline std::string_view to_string(Existence e) {
    switch (e) {
        case Existence::exists: return "exists";
        case Existence::does_not_exist: return "does-not-exist";
        case Existence::unknown: return "unknown";
    }
    return "?";
}

namespace detail {

/// Necessary condition on u for a {5}-GDD of type g^u, by g mod 20.
inline bool gdd5_necessary(std::int64_t g, std::int64_t u) {
    switch (g % 20) {
        case 0: return u >= 5;
        case 1: case 3: case 7: case 9: case 11: case 13: case 17: case 19: return u % 20 == 1 || u % 20 == 5;
        case 2: case 6: case 14: case 18: return u % 10 == 1 || u % 10 == 5;
        case 4: case 8: case 12: case 16: return u % 5 == 0 || u % 5 == 1;
        case 5: case 15: return u % 4 == 1;
        case 10: return u % 2 == 1 && u >= 5;
    }
    return false;
}

inline bool in(std::int64_t x, std::initializer_list<std::int64_t> values) {
    for (auto v : values) {
        if (v == x) return true;
    }
    return false;
}

/// Types g^u whose existence is open.
inline bool gdd5_possible_exception(std::int64_t g, std::int64_t u) {
    if (g == 3 && in(u, {45, 65})) return true;
    if (g == 2 && in(u, {15, 35, 71, 75, 95, 111, 115, 195, 215})) return true;
    if (g == 6 && in(u, {15, 35, 75, 95})) return true;
    if (g == 18 && in(u, {11, 15, 71, 111, 115})) return true;
    if (in(g, {14, 22, 26, 34, 38, 46, 58, 62}) && in(u, {11, 15, 71, 75, 111, 115})) return true;
    if (u == 15) {
        if (in(g, {42, 54})) return true;
        if (g % 2 == 0) {
            std::int64_t a = g / 2;
            if (in(a % 10, {1, 3, 7, 9}) && a >= 33 && a <= 2443) return true;
        }
    }
    if (g == 10 && in(u, {5, 7, 15, 23, 27, 33, 35, 39, 47})) return true;
    if (g == 30 && in(u, {9, 15})) return true;
    if (g == 50 && in(u, {15, 23, 27})) return true;
    if (g == 90 && u == 23) return true;
    if (g % 10 == 0) {
        std::int64_t a = g / 10;
        if (in(u, {15, 23})) {
            if (a % 6 == 1 && a >= 7 && a <= 319) return true;
            if (a % 6 == 5 && a >= 11 && a <= 443) return true;
        }
        if (u == 15) {
            if (a % 6 == 1 && a >= 325 && a <= 487) return true;
            if (a % 6 == 5 && a >= 449 && a <= 485) return true;
        }
    }
    return false;
}

}  // namespace detail

/// {5}-GDD of type g^u: the congruence conditions are sufficient apart from
/// the definite exceptions 2^5, 2^11, 3^5, 6^5 and a list of open cases.
inline Existence gdd5_gu_admissible(std::int64_t g, std::int64_t u) {
    if (g < 1 || u < 1) return Existence::does_not_exist;
    if (!detail::gdd5_necessary(g, u)) return Existence::does_not_exist;
    if ((g == 2 && (u == 5 || u == 11)) || (g == 3 && u == 5) || (g == 6 && u == 5)) return Existence::does_not_exist;
    if (detail::gdd5_possible_exception(g, u)) return Existence::unknown;
    return Existence::exists;
}

/// Lengths not in (or not known to be in) the PBD closure of {4,7,8,9}.
inline const std::set<int>& pbd_4789_exceptions() {
    static const std::set<int> values{5,   6,   10,  11,  12,  14,  15,  17,  18,  19,  20,  21,  23,  24,  26,
                                      27,  30,  35,  38,  39,  41,  42,  44,  47,  48,  51,  54,  59,  62,  110,
                                      143, 146, 147, 150, 158, 159, 161, 162, 164, 167, 170, 171, 173, 174};
    return values;
}

/// Lengths n >= 8 not in (or not known to be in) the PBD closure of {8,9,10}.
/// Stored as inclusive ranges.
inline const std::vector<std::pair<int, int>>& pbd_8910_exception_ranges() {
    static const std::vector<std::pair<int, int>> ranges{
        {11, 56},   {58, 63},   {66, 71},   {75, 79},   {101, 109}, {111, 113}, {115, 119}, {126, 127},
        {133, 135}, {155, 160}, {166, 167}, {173, 231}, {239, 239}, {247, 287}, {290, 295}, {299, 343},
        {346, 351}, {355, 399}, {403, 407}, {411, 423}, {426, 431}, {435, 439}, {443, 448}, {452, 455},
        {472, 497}, {499, 503}, {507, 511}, {580, 582}};
    return ranges;
}

inline std::set<int> pbd_8910_exceptions() {
    std::set<int> out;
    for (auto [lo, hi] : pbd_8910_exception_ranges()) {
        for (int v = lo; v <= hi; ++v) out.insert(v);
    }
    return out;
}

/// Lengths n >= 4 for which A_4(n, 3, [1,1,1]) = n(n-1) is still open.
inline const std::set<int>& quaternary_distance3_open_lengths() {
    static const std::set<int> values{44, 47, 51, 54, 59, 62, 158, 167, 173};
    return values;
}

}  // namespace ccc
