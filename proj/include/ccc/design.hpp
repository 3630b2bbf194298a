#pragma once

// Incidence structures: set systems, pairwise balanced designs (PBDs) and
// group divisible designs (GDDs), with their verification and block census.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccc/errors.hpp"
#include "ccc/report.hpp"

namespace ccc {

using Block = std::vector<int>;

/// Points are 0..point_count-1; blocks are sorted, duplicate-free point lists.
struct SetSystem {
    int point_count = 0;
    std::vector<Block> blocks;

    /// Sorts each block and then the block list.
    SetSystem& canonicalize() {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
        return *this;
    }

    friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

/// A PBD is the special case where every group is a singleton.
struct GroupDivisibleDesign {
    SetSystem base;
    std::vector<Block> groups;

    int point_count() const noexcept { return base.point_count; }
    const std::vector<Block>& blocks() const noexcept { return base.blocks; }

    static GroupDivisibleDesign from_pbd(SetSystem pbd) {
        GroupDivisibleDesign g{std::move(pbd), {}};
        for (int x = 0; x < g.base.point_count; ++x) g.groups.push_back({x});
        return g;
    }

    bool all_groups_singletons() const {
        return std::all_of(groups.begin(), groups.end(), [](const Block& g) { return g.size() == 1; });
    }

    GroupDivisibleDesign& canonicalize() {
        base.canonicalize();
        for (auto& g : groups) std::sort(g.begin(), g.end());
        std::sort(groups.begin(), groups.end());
        return *this;
    }

    friend bool operator==(const GroupDivisibleDesign&, const GroupDivisibleDesign&) = default;
};

/// Multiset of group sizes, rendered in exponential notation with sizes
/// ascending, e.g. "1^28 9^1".
struct GddType {
    std::map<int, int> multiplicity;

    int point_count() const {
        int total = 0;
        for (auto [size, count] : multiplicity) total += size * count;
        return total;
    }

    std::string to_string() const {
        std::string out;
        for (auto [size, count] : multiplicity) {
            if (!out.empty()) out += ' ';
            out += std::to_string(size) + "^" + std::to_string(count);
        }
        return out;
    }

    friend bool operator==(const GddType&, const GddType&) = default;
};

inline GddType gdd_type(const GroupDivisibleDesign& g) {
    GddType type;
    for (const auto& group : g.groups) ++type.multiplicity[static_cast<int>(group.size())];
    return type;
}

namespace detail {

inline std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

/// Range, order and duplicate checks shared by both verifiers.
inline void check_blocks(const SetSystem& s, VerifyReport& report) {
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
        const auto& block = s.blocks[b];
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (block[i] < 0 || block[i] >= s.point_count) {
                report.violations.push_back(
                    {ViolationKind::point_range, {static_cast<std::int64_t>(b), block[i]}, s.point_count});
            }
            if (i > 0 && block[i] <= block[i - 1]) {
                report.violations.push_back(
                    {ViolationKind::block_order, {static_cast<std::int64_t>(b), static_cast<std::int64_t>(i)}, block[i]});
            }
        }
    }
}

/// Upper-triangular pair coverage counts.
class PairCounter {
public:
    explicit PairCounter(int n) : n_(n), counts_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    void add(const Block& block) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) ++at(block[i], block[j]);
        }
    }

    std::uint32_t count(int x, int y) const {
        return counts_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
    }

private:
    std::uint32_t& at(int x, int y) {
        return counts_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
    }

    int n_;
    std::vector<std::uint32_t> counts_;
};

inline void report_pair(VerifyReport& report, int x, int y, std::uint32_t count) {
    if (count == 0) {
        report.violations.push_back({ViolationKind::uncovered_pair, {x, y}, 0});
    } else if (count > 1) {
        report.violations.push_back({ViolationKind::repeated_pair, {x, y}, count});
    }
}

}  // namespace detail

/// Every pair of points must lie in exactly one block.
inline VerifyReport verify_pbd(const SetSystem& s) {
    VerifyReport report;
    if (s.point_count < 0) {
        report.violations.push_back({ViolationKind::point_range, {}, s.point_count});
        return report;
    }
    detail::check_blocks(s, report);
    if (!report.ok()) return report;

    detail::PairCounter pairs(s.point_count);
    for (const auto& b : s.blocks) pairs.add(b);
    for (int x = 0; x < s.point_count; ++x) {
        for (int y = x + 1; y < s.point_count; ++y) detail::report_pair(report, x, y, pairs.count(x, y));
    }
    return report;
}

/// Groups must partition the points, blocks must meet each group at most
/// once, and every pair from different groups must lie in exactly one block.
inline VerifyReport verify_gdd(const GroupDivisibleDesign& g) {
    VerifyReport report;
    const int n = g.point_count();
    if (n < 0) {
        report.violations.push_back({ViolationKind::point_range, {}, n});
        return report;
    }
    detail::check_blocks(g.base, report);

    std::vector<int> group_of(static_cast<std::size_t>(n), -1);
    std::vector<int> memberships(static_cast<std::size_t>(n), 0);
    for (std::size_t gi = 0; gi < g.groups.size(); ++gi) {
        const auto& group = g.groups[gi];
        if (group.empty()) {
            report.violations.push_back({ViolationKind::group_partition, {static_cast<std::int64_t>(gi)}, 0});
        }
        for (std::size_t i = 0; i < group.size(); ++i) {
            int x = group[i];
            if (x < 0 || x >= n) {
                report.violations.push_back({ViolationKind::point_range, {-1, x}, n});
                continue;
            }
            if (i > 0 && x <= group[i - 1]) {
                report.violations.push_back({ViolationKind::block_order, {-1, static_cast<std::int64_t>(i)}, x});
            }
            ++memberships[static_cast<std::size_t>(x)];
            group_of[static_cast<std::size_t>(x)] = static_cast<int>(gi);
        }
    }
    for (int x = 0; x < n; ++x) {
        if (memberships[static_cast<std::size_t>(x)] != 1) {
            report.violations.push_back({ViolationKind::group_partition, {x}, memberships[static_cast<std::size_t>(x)]});
        }
    }
    if (!report.ok()) return report;

    for (std::size_t b = 0; b < g.blocks().size(); ++b) {
        std::map<int, int> hits;
        for (int x : g.blocks()[b]) ++hits[group_of[static_cast<std::size_t>(x)]];
        for (auto [gi, count] : hits) {
            if (count > 1) {
                report.violations.push_back({ViolationKind::block_meets_group, {static_cast<std::int64_t>(b), gi}, count});
            }
        }
    }

    detail::PairCounter pairs(n);
    for (const auto& b : g.blocks()) pairs.add(b);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (group_of[static_cast<std::size_t>(x)] == group_of[static_cast<std::size_t>(y)]) continue;
            detail::report_pair(report, x, y, pairs.count(x, y));
        }
    }
    return report;
}

/// Block counts by size, with the pair-counting identity checked:
/// sum_k b_k C(k,2) must equal the number of pairs the design has to cover.
struct BlockCensus {
    std::map<int, std::int64_t> counts;
    std::int64_t covered_pairs = 0;
    std::int64_t required_pairs = 0;

    std::int64_t operator[](int k) const {
        auto it = counts.find(k);
        return it == counts.end() ? 0 : it->second;
    }
};

namespace detail {

inline BlockCensus census_of(const SetSystem& s, std::int64_t required) {
    BlockCensus census;
    for (const auto& b : s.blocks) ++census.counts[static_cast<int>(b.size())];
    for (auto [k, count] : census.counts) census.covered_pairs += count * choose2(k);
    census.required_pairs = required;
    if (census.covered_pairs != census.required_pairs) {
        throw design_error("block census covers " + std::to_string(census.covered_pairs) + " pairs, expected " +
                           std::to_string(census.required_pairs));
    }
    return census;
}

}  // namespace detail

inline BlockCensus block_census(const SetSystem& pbd) {
    return detail::census_of(pbd, detail::choose2(pbd.point_count));
}

inline BlockCensus block_census(const GroupDivisibleDesign& g) {
    std::int64_t within = 0;
    for (const auto& group : g.groups) within += detail::choose2(static_cast<std::int64_t>(group.size()));
    return detail::census_of(g.base, detail::choose2(g.point_count()) - within);
}

/// Treats the groups of size two or more as extra blocks.
inline SetSystem pbd_from_gdd(const GroupDivisibleDesign& g) {
    SetSystem out = g.base;
    for (const auto& group : g.groups) {
        if (group.size() >= 2) out.blocks.push_back(group);
    }
    return out.canonicalize();
}

}  // namespace ccc
