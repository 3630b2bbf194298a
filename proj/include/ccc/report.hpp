#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ccc {

enum class ViolationKind {
    // codes
    length,
    symbol,
    composition,
    duplicate,
    distance,
    // designs
    point_range,
    block_order,
    group_partition,
    uncovered_pair,
    repeated_pair,
    block_meets_group,
};

inline std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::length: return "length";
        case ViolationKind::symbol: return "symbol";
        case ViolationKind::composition: return "composition";
        case ViolationKind::duplicate: return "duplicate";
        case ViolationKind::distance: return "distance";
        case ViolationKind::point_range: return "point-range";
        case ViolationKind::block_order: return "block-order";
        case ViolationKind::group_partition: return "group-partition";
        case ViolationKind::uncovered_pair: return "uncovered-pair";
        case ViolationKind::repeated_pair: return "repeated-pair";
        case ViolationKind::block_meets_group: return "block-meets-group";
    }
    return "unknown";
}

/// One failed invariant. `subjects` holds word indices for codes and point
/// (or block, group) indices for designs; `measured` is the offending value
/// (a distance, a weight, a coverage count).
struct Violation {
    ViolationKind kind;
    std::vector<std::int64_t> subjects;
    std::int64_t measured = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }

    std::size_t count(ViolationKind kind) const {
        std::size_t total = 0;
        for (const auto& v : violations) total += v.kind == kind ? 1 : 0;
        return total;
    }
};

inline std::string describe(const Violation& v) {
    std::string out(to_string(v.kind));
    out += " [";
    for (std::size_t i = 0; i < v.subjects.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v.subjects[i]);
    }
    out += "] measured=" + std::to_string(v.measured);
    return out;
}

}  // namespace ccc
