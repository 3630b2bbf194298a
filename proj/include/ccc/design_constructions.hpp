#pragma once

// Design generators (transversal designs, affine and projective planes over
// prime fields) and the recursive techniques: point deletion, Wilson's
// Fundamental Construction, and adjoining ideal points then filling groups.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ccc/design.hpp"

namespace ccc {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int f = 2; f * f <= p; ++f) {
        if (p % f == 0) return false;
    }
    return true;
}

/// TD(k, p) over Z_p: point (x, j) is j*p + x, group j is {j} x Z_p, and each
/// (a, b) gives the block {(a*j + b, j)}. For k = p + 1 the extra group
/// records the slope a.
inline GroupDivisibleDesign transversal_design(int k, int p) {
    if (!is_prime(p)) throw std::invalid_argument("transversal_design needs a prime group size");
    if (k < 2 || k > p + 1) throw std::invalid_argument("transversal_design needs 2 <= k <= p + 1");
    GroupDivisibleDesign td;
    td.base.point_count = k * p;
    for (int j = 0; j < k; ++j) {
        Block group(static_cast<std::size_t>(p));
        std::iota(group.begin(), group.end(), j * p);
        td.groups.push_back(std::move(group));
    }
    for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
            Block block;
            for (int j = 0; j < k; ++j) {
                int x = j < p ? (a * j + b) % p : a;
                block.push_back(j * p + x);
            }
            td.base.blocks.push_back(std::move(block));
        }
    }
    td.canonicalize();
    return td;
}

/// Lines of AG(2, p): point (x, y) is x*p + y.
inline SetSystem affine_plane(int p) {
    if (!is_prime(p)) throw std::invalid_argument("affine_plane needs a prime order");
    SetSystem plane{p * p, {}};
    for (int m = 0; m < p; ++m) {
        for (int b = 0; b < p; ++b) {
            Block line;
            for (int x = 0; x < p; ++x) line.push_back(x * p + (m * x + b) % p);
            plane.blocks.push_back(std::move(line));
        }
    }
    for (int c = 0; c < p; ++c) {
        Block line;
        for (int y = 0; y < p; ++y) line.push_back(c * p + y);
        plane.blocks.push_back(std::move(line));
    }
    return plane.canonicalize();
}

/// PG(2, p): the affine plane plus one point per parallel class (p*p + m for
/// slope m, p*p + p for vertical lines) and the line at infinity.
inline SetSystem projective_plane(int p) {
    if (!is_prime(p)) throw std::invalid_argument("projective_plane needs a prime order");
    const int affine_points = p * p;
    SetSystem plane{affine_points + p + 1, {}};
    for (int m = 0; m < p; ++m) {
        for (int b = 0; b < p; ++b) {
            Block line;
            for (int x = 0; x < p; ++x) line.push_back(x * p + (m * x + b) % p);
            line.push_back(affine_points + m);
            plane.blocks.push_back(std::move(line));
        }
    }
    for (int c = 0; c < p; ++c) {
        Block line;
        for (int y = 0; y < p; ++y) line.push_back(c * p + y);
        line.push_back(affine_points + p);
        plane.blocks.push_back(std::move(line));
    }
    Block at_infinity(static_cast<std::size_t>(p + 1));
    std::iota(at_infinity.begin(), at_infinity.end(), affine_points);
    plane.blocks.push_back(std::move(at_infinity));
    return plane.canonicalize();
}

/// Removes point x from a PBD. The blocks through x, punctured, become the
/// groups; the other blocks stay. Points above x are renumbered down by one.
inline GroupDivisibleDesign delete_point(const SetSystem& pbd, int x) {
    if (x < 0 || x >= pbd.point_count) throw std::out_of_range("delete_point: point out of range");
    auto relabel = [x](int y) { return y > x ? y - 1 : y; };
    GroupDivisibleDesign out;
    out.base.point_count = pbd.point_count - 1;
    std::vector<int> covered(static_cast<std::size_t>(out.base.point_count), 0);
    for (const auto& block : pbd.blocks) {
        bool through = std::find(block.begin(), block.end(), x) != block.end();
        Block mapped;
        for (int y : block) {
            if (y != x) mapped.push_back(relabel(y));
        }
        if (through) {
            for (int y : mapped) ++covered[static_cast<std::size_t>(y)];
            if (!mapped.empty()) out.groups.push_back(std::move(mapped));
        } else {
            out.base.blocks.push_back(std::move(mapped));
        }
    }
    if (std::any_of(covered.begin(), covered.end(), [](int c) { return c != 1; })) {
        throw design_error("delete_point: the blocks through the point do not partition the others");
    }
    out.canonicalize();
    return out;
}

/// GDD version: x must sit in a singleton group. Groups of size two or more
/// become blocks, then the point is deleted as from a PBD.
inline GroupDivisibleDesign delete_point(const GroupDivisibleDesign& g, int x) {
    auto it = std::find_if(g.groups.begin(), g.groups.end(),
                           [x](const Block& group) { return std::find(group.begin(), group.end(), x) != group.end(); });
    if (it == g.groups.end()) throw design_error("delete_point: point is in no group");
    if (it->size() != 1) throw design_error("delete_point: the deleted point must form a singleton group");
    return delete_point(pbd_from_gdd(g), x);
}

using WeightFunction = std::vector<int>;

/// Wilson's Fundamental Construction. Point x of the master is inflated to
/// `weights[x]` copies; master block i (in canonical block order) is replaced
/// by ingredients.at(i), a GDD whose points are the inflated block points in
/// block order and whose groups are the copies of each block point.
inline GroupDivisibleDesign wfc(const GroupDivisibleDesign& master, const WeightFunction& weights,
                                const std::map<std::size_t, GroupDivisibleDesign>& ingredients) {
    const int n = master.point_count();
    if (static_cast<int>(weights.size()) != n) throw std::invalid_argument("wfc: one weight per master point required");
    std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int x = 0; x < n; ++x) {
        if (weights[static_cast<std::size_t>(x)] < 0) throw std::invalid_argument("wfc: weights must be non-negative");
        offset[static_cast<std::size_t>(x) + 1] = offset[static_cast<std::size_t>(x)] + weights[static_cast<std::size_t>(x)];
    }

    GroupDivisibleDesign out;
    out.base.point_count = offset.back();
    for (const auto& group : master.groups) {
        Block expanded;
        for (int x : group) {
            for (int c = offset[static_cast<std::size_t>(x)]; c < offset[static_cast<std::size_t>(x) + 1]; ++c) {
                expanded.push_back(c);
            }
        }
        if (!expanded.empty()) out.groups.push_back(std::move(expanded));
    }

    for (std::size_t bi = 0; bi < master.blocks().size(); ++bi) {
        const auto& block = master.blocks()[bi];
        auto found = ingredients.find(bi);
        if (found == ingredients.end()) throw construction_error("wfc: no ingredient for block " + std::to_string(bi));
        const auto& ingredient = found->second;

        std::vector<int> local_to_global;
        std::vector<Block> expected_groups;
        for (int x : block) {
            Block group;
            for (int c = offset[static_cast<std::size_t>(x)]; c < offset[static_cast<std::size_t>(x) + 1]; ++c) {
                group.push_back(static_cast<int>(local_to_global.size()));
                local_to_global.push_back(c);
            }
            if (!group.empty()) expected_groups.push_back(std::move(group));
        }
        if (ingredient.point_count() != static_cast<int>(local_to_global.size())) {
            throw construction_error("wfc: ingredient for block " + std::to_string(bi) + " has " +
                                     std::to_string(ingredient.point_count()) + " points, expected " +
                                     std::to_string(local_to_global.size()));
        }
        auto groups = ingredient.groups;
        for (auto& g : groups) std::sort(g.begin(), g.end());
        std::sort(groups.begin(), groups.end());
        std::sort(expected_groups.begin(), expected_groups.end());
        if (groups != expected_groups) {
            throw construction_error("wfc: ingredient for block " + std::to_string(bi) + " has the wrong group type");
        }
        for (const auto& b : ingredient.blocks()) {
            Block mapped;
            for (int y : b) {
                if (y < 0 || y >= static_cast<int>(local_to_global.size())) {
                    throw construction_error("wfc: ingredient block point out of range");
                }
                mapped.push_back(local_to_global[static_cast<std::size_t>(y)]);
            }
            out.base.blocks.push_back(std::move(mapped));
        }
    }
    out.canonicalize();
    return out;
}

/// Marks the one group that absorbs the ideal points instead of being filled.
struct AlignIdeal {
    friend bool operator==(const AlignIdeal&, const AlignIdeal&) = default;
};

/// A filler for group G is a GDD on |G| + ideal points: local points
/// 0..|G|-1 are G's points in order, the last `ideal` are the ideal points.
using Filler = std::variant<GroupDivisibleDesign, AlignIdeal>;

/// Adds `ideal` new points (numbered after the existing ones) and fills
/// groups by index. Groups without a filler stay groups; the aligned group
/// gains the ideal points. Filler groups made of group points become output
/// groups; a filler group equal to the ideal set makes the ideal points one
/// output group. When every output group is a singleton the result is a PBD.
inline GroupDivisibleDesign adjoin_and_fill(const GroupDivisibleDesign& g, int ideal,
                                            const std::map<std::size_t, Filler>& fillers) {
    if (ideal < 0) throw std::invalid_argument("adjoin_and_fill: ideal point count must be non-negative");
    const int n = g.point_count();
    Block ideal_points(static_cast<std::size_t>(ideal));
    std::iota(ideal_points.begin(), ideal_points.end(), n);

    GroupDivisibleDesign out;
    out.base.point_count = n + ideal;
    out.base.blocks = g.blocks();

    std::optional<std::size_t> aligned;
    bool ideal_as_group = false;
    bool ideal_as_block = false;
    for (const auto& [gi, filler] : fillers) {
        if (gi >= g.groups.size()) throw std::out_of_range("adjoin_and_fill: filler for unknown group");
        if (std::holds_alternative<AlignIdeal>(filler)) {
            if (aligned) throw construction_error("adjoin_and_fill: more than one aligned group");
            aligned = gi;
        }
    }

    std::set<Block> ideal_blocks;
    for (std::size_t gi = 0; gi < g.groups.size(); ++gi) {
        const auto& group = g.groups[gi];
        auto found = fillers.find(gi);
        if (found == fillers.end()) {
            out.groups.push_back(group);
            continue;
        }
        if (std::holds_alternative<AlignIdeal>(found->second)) {
            Block merged = group;
            merged.insert(merged.end(), ideal_points.begin(), ideal_points.end());
            out.groups.push_back(std::move(merged));
            continue;
        }
        const auto& filler = std::get<GroupDivisibleDesign>(found->second);
        const int local_n = static_cast<int>(group.size()) + ideal;
        if (filler.point_count() != local_n) {
            throw construction_error("adjoin_and_fill: filler for group " + std::to_string(gi) + " has " +
                                     std::to_string(filler.point_count()) + " points, expected " +
                                     std::to_string(local_n));
        }
        auto to_global = [&](int y) {
            if (y < 0 || y >= local_n) throw construction_error("adjoin_and_fill: filler point out of range");
            return y < static_cast<int>(group.size()) ? group[static_cast<std::size_t>(y)]
                                                      : n + (y - static_cast<int>(group.size()));
        };
        auto is_ideal = [n](int y) { return y >= n; };

        for (const auto& b : filler.blocks()) {
            Block mapped;
            for (int y : b) mapped.push_back(to_global(y));
            std::sort(mapped.begin(), mapped.end());
            if (std::all_of(mapped.begin(), mapped.end(), is_ideal)) {
                if (mapped.size() >= 2) ideal_as_block = true;
                ideal_blocks.insert(std::move(mapped));
            } else {
                out.base.blocks.push_back(std::move(mapped));
            }
        }
        for (const auto& fg : filler.groups) {
            Block mapped;
            for (int y : fg) mapped.push_back(to_global(y));
            std::sort(mapped.begin(), mapped.end());
            auto ideal_count = std::count_if(mapped.begin(), mapped.end(), is_ideal);
            if (ideal_count == 0) {
                out.groups.push_back(std::move(mapped));
            } else if (mapped == ideal_points) {
                if (ideal >= 2) ideal_as_group = true;
            } else if (ideal_count == static_cast<long>(mapped.size()) && ideal >= 2) {
                throw construction_error("adjoin_and_fill: filler splits the ideal points across groups");
            } else if (ideal_count != static_cast<long>(mapped.size())) {
                throw construction_error("adjoin_and_fill: filler group mixes ideal and group points");
            }
        }
    }

    if (ideal_as_group && ideal_as_block) {
        throw construction_error("adjoin_and_fill: fillers disagree on whether the ideal points form a block or a group");
    }
    if (aligned && ideal_as_block) {
        throw construction_error("adjoin_and_fill: aligned ideal points cannot also form a block");
    }
    for (const auto& b : ideal_blocks) {
        if (b.size() >= 2) out.base.blocks.push_back(b);
    }
    if (!aligned) {
        if (ideal_as_group) {
            out.groups.push_back(ideal_points);
        } else {
            for (int y : ideal_points) out.groups.push_back({y});
        }
    }
    out.canonicalize();
    return out;
}

}  // namespace ccc
