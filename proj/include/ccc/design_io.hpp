#pragma once

// Design files are JSON documents:
//
//   {"points": 12, "groups": [[0,1,2], ...], "blocks": [[0,3,6,9], ...]}
//
// "groups" is optional; without it the document describes a PBD. Indices are
// 0-based. Output is canonical: groups and blocks sorted lexicographically.

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <nlohmann/json.hpp>

#include "ccc/design.hpp"
#include "ccc/errors.hpp"

namespace ccc {

/// A parsed design file; `groups_present` distinguishes a PBD document from a
/// GDD whose groups happen to be singletons.
struct DesignDocument {
    GroupDivisibleDesign design;
    bool groups_present = false;
};

namespace detail {

inline std::vector<Block> parse_block_list(const nlohmann::json& value, const char* field) {
    if (!value.is_array()) throw format_error(std::string("'") + field + "' must be a list of integer lists");
    std::vector<Block> out;
    for (const auto& item : value) {
        if (!item.is_array()) throw format_error(std::string("'") + field + "' entries must be integer lists");
        Block block;
        for (const auto& x : item) {
            if (!x.is_number_integer()) throw format_error(std::string("'") + field + "' entries must be integers");
            block.push_back(x.get<int>());
        }
        out.push_back(std::move(block));
    }
    return out;
}

}  // namespace detail

inline DesignDocument parse_design(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw format_error(std::string("design document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw format_error("design document must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "points" && key != "groups" && key != "blocks") throw format_error("unknown design field '" + key + "'");
    }
    if (!doc.contains("points") || !doc["points"].is_number_integer() || doc["points"].get<long long>() < 0) {
        throw format_error("'points' must be a non-negative integer");
    }
    if (!doc.contains("blocks")) throw format_error("missing 'blocks'");

    DesignDocument out;
    out.design.base.point_count = doc["points"].get<int>();
    out.design.base.blocks = detail::parse_block_list(doc["blocks"], "blocks");
    if (doc.contains("groups")) {
        out.groups_present = true;
        out.design.groups = detail::parse_block_list(doc["groups"], "groups");
    } else {
        for (int x = 0; x < out.design.point_count(); ++x) out.design.groups.push_back({x});
    }
    return out;
}

inline std::string design_to_string(const SetSystem& s) {
    SetSystem c = s;
    c.canonicalize();
    nlohmann::json doc;
    doc["points"] = c.point_count;
    doc["blocks"] = c.blocks;
    return doc.dump() + "\n";
}

inline std::string design_to_string(const GroupDivisibleDesign& g) {
    GroupDivisibleDesign c = g;
    c.canonicalize();
    nlohmann::json doc;
    doc["points"] = c.point_count();
    doc["groups"] = c.groups;
    doc["blocks"] = c.blocks();
    return doc.dump() + "\n";
}

inline DesignDocument read_design_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return parse_design(text);
    } catch (const format_error& e) {
        throw format_error(path.string(), e);
    }
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw format_error("cannot write " + path.string());
    out << text;
    if (!out) throw format_error("write failed for " + path.string());
}

}  // namespace ccc
