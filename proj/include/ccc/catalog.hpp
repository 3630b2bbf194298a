#pragma once

// Known values of A_q(n, d, comp), closed-form values for large n, and a
// directory-backed store of witness codes.
//
// Catalog directory layout:
//   index      one line per stored entry:
//              q n d comp lower upper status provenance... witness-path
//   *.ccc      witness code files, named by parameters
//
// Values depend on (n, d, comp) only: symbols beyond the composition are
// never used, so q plays no role once it is large enough.

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ccc/bounds.hpp"
#include "ccc/code.hpp"
#include "ccc/code_io.hpp"
#include "ccc/design_existence.hpp"
#include "ccc/errors.hpp"

namespace ccc {

enum class CatalogStatus { exact, open, asymptotic_formula };

inline std::string_view to_string(CatalogStatus s) {
    switch (s) {
        case CatalogStatus::exact: return "exact";
        case CatalogStatus::open: return "open";
        case CatalogStatus::asymptotic_formula: return "asymptotic";
    }
    return "?";
}

inline CatalogStatus parse_catalog_status(std::string_view text) {
    if (text == "exact") return CatalogStatus::exact;
    if (text == "open") return CatalogStatus::open;
    if (text == "asymptotic") return CatalogStatus::asymptotic_formula;
    throw format_error("unknown catalog status '" + std::string(text) + "'");
}

struct CatalogEntry {
    CodeParams params;
    std::int64_t lower;
    std::int64_t upper;
    CatalogStatus status;
    std::string provenance;
    std::string upper_citation;
    std::optional<std::filesystem::path> witness;  // relative to the catalog directory
};

struct ExceptionTable {
    std::string name;
    std::set<int> values;
};

/// The exception sets used by the catalog, with Table IV style ranges
/// already expanded.
inline std::vector<ExceptionTable> exception_tables() {
    return {
        {"pbd-closure-4-7-8-9", pbd_4789_exceptions()},
        {"pbd-closure-8-9-10", pbd_8910_exceptions()},
        {"quaternary-distance-3-open", quaternary_distance3_open_lengths()},
    };
}

namespace detail {

struct SeededValue {
    std::int64_t value;
    std::string provenance;
    std::string upper_citation;  // empty: use the upper_bound citation
};

inline bool one_of(std::int64_t n, std::initializer_list<std::int64_t> values) {
    return std::find(values.begin(), values.end(), n) != values.end();
}

/// Published exact values. Upper bounds come from the bounds module unless
/// the optimum is below every closed-form bound (exhaustive search results).
inline std::optional<SeededValue> seeded_value(std::int64_t n, int d, const Composition& comp) {
    if (comp == Composition{2, 1} && d == 4) {
        if (n % 2 == 0) return SeededValue{n * (n - 2) / 4, "even length, ternary weight three (Svanstrom)", {}};
        if (n % 4 == 1 && n >= 5) return SeededValue{n * (n - 1) / 4, "PBD closure of {5,9,13} with optimal short codes", {}};
        if (one_of(n, {7, 11})) return SeededValue{bound_svanstrom(n).value, "odd length 7 and 11 (Svanstrom)", {}};
        if (one_of(n, {15, 19, 23, 27, 31})) return SeededValue{bound_svanstrom(n).value, "published optimal code meeting the odd-length bound", {}};
    }
    if (comp == Composition{1, 1, 1} && d == 3 && n >= 4) {
        if (n == 5) return SeededValue{18, "exhaustive search", "exhaustive search"};
        if (n == 6) return SeededValue{28, "exhaustive search", "exhaustive search"};
        if (quaternary_distance3_open_lengths().count(static_cast<int>(n)) == 0) {
            return SeededValue{n * (n - 1), "PBD closures of {4,7,8,9} and {8,9,10} with short codes", {}};
        }
    }
    if (comp == Composition{1, 1, 1} && d == 4 &&
        one_of(n, {4, 10, 11, 14, 16, 18, 19, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34})) {
        return SeededValue{n * ((n - 1) / 2), "published optimal code meeting the distance-4 bound", {}};
    }
    if (comp == Composition{1, 1, 1} && d == 5 && n >= 3) {
        if (n <= 4) return SeededValue{1, "direct verification", "two supports of size 3 in 4 positions meet twice"};
        if (n == 5) return SeededValue{2, "direct verification", "direct verification"};
        if (n == 6) return SeededValue{4, "direct verification", "direct verification"};
        return SeededValue{n, "cyclic shifts of 12030...0", {}};
    }
    if (comp == Composition{3, 1} && d == 5 && one_of(n, {7, 13, 15, 19})) {
        return SeededValue{n * (n - 1) / 6, "published optimal code meeting the weight-four bound", {}};
    }
    if (comp == Composition{4, 1} && d == 7 && one_of(n, {13, 16})) {
        return SeededValue{n * (n - 1) / 12, "published optimal code meeting the weight-five bound", {}};
    }
    if (n == 10 && d == 6) {
        if (comp == Composition{3, 1}) return SeededValue{10, "published optimal code (Svanstrom et al.)", {}};
        if (comp == Composition{2, 2}) return SeededValue{15, "published optimal code (Svanstrom et al.)", {}};
        if (comp == Composition{2, 1, 1}) return SeededValue{15, "refinement of an optimal [2,2] code", {}};
    }
    return std::nullopt;
}

}  // namespace detail

/// Seeded value if one is known, otherwise Open between 1 and upper_bound.
/// Seeded values are claims to reproduce: they carry no witness until one
/// is stored.
inline CatalogEntry catalog_lookup(const CodeParams& p) {
    const BoundResult bound = upper_bound(p);
    if (auto seed = detail::seeded_value(p.n, p.d, p.comp)) {
        const bool own_upper = !seed->upper_citation.empty();
        const std::int64_t upper = own_upper ? seed->value : bound.value;
        if (seed->value > upper) throw std::logic_error("seeded value exceeds its upper bound for " + p.to_string());
        return {p, seed->value, upper, seed->value == upper ? CatalogStatus::exact : CatalogStatus::open,
                seed->provenance, own_upper ? seed->upper_citation : bound.citation, std::nullopt};
    }
    if (bound.value == 1) return {p, 1, 1, CatalogStatus::exact, "a single word", bound.citation, std::nullopt};
    return {p, 1, bound.value, CatalogStatus::open, "trivial", bound.citation, std::nullopt};
}

struct AsymptoticValue {
    std::int64_t value;
    std::string formula;
    std::string caveat = "valid for sufficiently large n, threshold unknown";
};

/// Closed-form values known to hold for all sufficiently large n in the
/// given congruence class.
inline std::optional<AsymptoticValue> asymptotic_value(const CodeParams& p) {
    const std::int64_t n = p.n;
    const int d = p.d;
    const auto& comp = p.comp;
    if (comp == Composition{2, 1} && d == 4) {
        if (n % 4 == 3) return AsymptoticValue{(n - 1) * (n - 1) / 4 + (n - 3) / 12, "(n-1)^2/4 + floor((n-3)/12)"};
        return AsymptoticValue{n * ((n - 1) / 2) / 2, "floor(n/2 * floor((n-1)/2))"};
    }
    if (comp == Composition{1, 1, 1}) {
        if (d == 3) return AsymptoticValue{n * (n - 1), "n(n-1)"};
        if (d == 4) return AsymptoticValue{n * ((n - 1) / 2), "n floor((n-1)/2)"};
        if (d == 5) return AsymptoticValue{n, "n"};
    }
    if (d == 6 && (n % 45 == 1 || n % 45 == 10)) {
        if (comp == Composition{3, 1}) return AsymptoticValue{n * (n - 1) / 9, "n(n-1)/9"};
        if (comp == Composition{2, 2} || comp == Composition{2, 1, 1}) return AsymptoticValue{n * (n - 1) / 6, "n(n-1)/6"};
    }
    if (comp == Composition{3, 1} && d == 5 && (n % 6 == 1 || n % 6 == 3)) {
        return AsymptoticValue{n * (n - 1) / 6, "n(n-1)/6"};
    }
    if (comp == Composition{4, 1} && d == 7 && (n % 12 == 1 || n % 12 == 4)) {
        return AsymptoticValue{n * (n - 1) / 12, "n(n-1)/12"};
    }
    return std::nullopt;
}

/// Raised when another writer holds the catalog lock.
class catalog_busy : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a store is refused: failed verification or a smaller code
/// than the recorded lower bound.
class catalog_refused : public std::runtime_error {
public:
    catalog_refused(const std::string& what, VerifyReport report = {})
        : std::runtime_error(what), report_(std::move(report)) {}
    const VerifyReport& report() const noexcept { return report_; }

private:
    VerifyReport report_;
};

namespace detail {

/// Exclusive lock file; creation fails if another writer holds it.
class LockFile {
public:
    explicit LockFile(std::filesystem::path path) : path_(std::move(path)) {
        int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd < 0) {
            if (errno == EEXIST) throw catalog_busy("catalog is locked by another writer: " + path_.string());
            throw format_error("cannot create lock " + path_.string() + ": " + std::strerror(errno));
        }
        ::close(fd);
    }
    LockFile(const LockFile&) = delete;
    LockFile& operator=(const LockFile&) = delete;
    ~LockFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }

private:
    std::filesystem::path path_;
};

using CatalogKey = std::tuple<int, int, std::vector<int>>;

inline CatalogKey key_of(const CodeParams& p) { return {p.n, p.d, p.comp.counts()}; }

inline std::string index_line(const CatalogEntry& e) {
    std::string witness = e.witness ? e.witness->string() : "-";
    return std::to_string(e.params.q) + " " + std::to_string(e.params.n) + " " + std::to_string(e.params.d) + " " +
           e.params.comp.to_list() + " " + std::to_string(e.lower) + " " + std::to_string(e.upper) + " " +
           std::string(to_string(e.status)) + " " + e.provenance + " " + witness + "\n";
}

inline std::int64_t parse_count(const std::string& token, std::size_t line) {
    if (token.empty() || token.size() > 18 || token.find_first_not_of("0123456789") != std::string::npos) {
        throw format_error("bad count '" + token + "'", line);
    }
    return std::stoll(token);
}

inline CatalogEntry parse_index_line(const std::string& text, std::size_t line) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.size() < 9) throw format_error("index line needs at least 9 fields", line);
    try {
        CodeParams params(static_cast<int>(parse_count(tokens[0], line)), static_cast<int>(parse_count(tokens[1], line)),
                          static_cast<int>(parse_count(tokens[2], line)), Composition::parse(tokens[3]));
        CatalogEntry e{std::move(params), parse_count(tokens[4], line), parse_count(tokens[5], line),
                       parse_catalog_status(tokens[6]), {}, {}, std::nullopt};
        for (std::size_t i = 7; i + 1 < tokens.size(); ++i) {
            if (!e.provenance.empty()) e.provenance += ' ';
            e.provenance += tokens[i];
        }
        if (tokens.back() != "-") e.witness = tokens.back();
        if (e.lower > e.upper) throw format_error("lower exceeds upper", line);
        if (e.status == CatalogStatus::exact && e.lower != e.upper) throw format_error("exact entry with lower != upper", line);
        return e;
    } catch (const std::invalid_argument& err) {
        throw format_error(err.what(), line);
    } catch (const format_error& err) {
        if (err.line() != 0) throw;
        throw format_error(err.what(), line);
    }
}

inline std::string witness_name(const CodeParams& p) {
    std::string comp = p.comp.to_list();
    std::replace(comp.begin(), comp.end(), ',', '-');
    return "q" + std::to_string(p.q) + "_n" + std::to_string(p.n) + "_d" + std::to_string(p.d) + "_c" + comp + ".ccc";
}

}  // namespace detail

/// A catalog directory. Reads take no lock; stores hold an exclusive lock
/// file for their whole read-modify-write cycle and replace the index
/// atomically.
class Catalog {
public:
    explicit Catalog(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& directory() const noexcept { return dir_; }
    std::filesystem::path index_path() const { return dir_ / "index"; }

    /// Stored entries in index order; empty when no index exists yet.
    std::vector<CatalogEntry> entries() const {
        std::vector<CatalogEntry> out;
        std::ifstream in(index_path());
        if (!in) return out;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            out.push_back(detail::parse_index_line(line, line_no));
        }
        return out;
    }

    /// Stored entry if present, else the seeded lookup. In strict mode an
    /// exact entry without a witness is reported as open from 1.
    CatalogEntry lookup(const CodeParams& p, bool strict = false) const {
        CatalogEntry e = catalog_lookup(p);
        for (auto& stored : entries()) {
            if (detail::key_of(stored.params) == detail::key_of(p)) {
                e = std::move(stored);
                e.params = p;
                break;
            }
        }
        if (strict && e.status == CatalogStatus::exact && !e.witness && e.upper > 1) {
            e.status = CatalogStatus::open;
            e.lower = 1;
        }
        return e;
    }

    /// Verifies `code`, refuses a size below the current lower bound, writes
    /// the witness file and records the new lower bound.
    CatalogEntry store(const Code& code) {
        VerifyReport report = verify_code(code);
        if (!report.ok()) throw catalog_refused("code fails verification", std::move(report));

        std::filesystem::create_directories(dir_);
        detail::LockFile lock(dir_ / "index.lock");

        const CodeParams& p = code.params;
        CatalogEntry current = lookup(p);
        const auto size = static_cast<std::int64_t>(code.size());
        if (size < current.lower) {
            throw catalog_refused("size " + std::to_string(size) + " is below the recorded lower bound " +
                                  std::to_string(current.lower));
        }
        if (size > current.upper) {
            throw std::logic_error("verified code of size " + std::to_string(size) + " exceeds the upper bound " +
                                   std::to_string(current.upper) + " (" + current.upper_citation + ")");
        }

        CatalogEntry updated = current;
        updated.params = p;
        updated.lower = size;
        updated.status = size == updated.upper ? CatalogStatus::exact : CatalogStatus::open;
        if (current.lower < size || current.provenance == "trivial") updated.provenance = "stored search result";
        updated.witness = detail::witness_name(p);

        write_atomically(dir_ / *updated.witness, write_code_string(code));
        std::string index;
        bool replaced = false;
        for (const auto& e : entries()) {
            if (detail::key_of(e.params) == detail::key_of(p)) {
                index += detail::index_line(updated);
                replaced = true;
            } else {
                index += detail::index_line(e);
            }
        }
        if (!replaced) index += detail::index_line(updated);
        write_atomically(index_path(), index);
        return updated;
    }

    /// Re-reads every witness and confirms it verifies and matches its entry.
    /// Returns one message per problem.
    std::vector<std::string> check() const {
        std::vector<std::string> problems;
        for (const auto& e : entries()) {
            const std::string name = e.params.to_string();
            if (!e.witness) {
                if (e.status == CatalogStatus::exact && e.upper > 1) problems.push_back(name + ": exact entry without witness");
                continue;
            }
            try {
                Code code = read_code_file(dir_ / *e.witness);
                if (detail::key_of(code.params) != detail::key_of(e.params)) {
                    problems.push_back(name + ": witness has parameters " + code.params.to_string());
                }
                if (!verify_code(code).ok()) problems.push_back(name + ": witness fails verification");
                if (static_cast<std::int64_t>(code.size()) != e.lower) {
                    problems.push_back(name + ": witness size " + std::to_string(code.size()) + " != lower " +
                                       std::to_string(e.lower));
                }
            } catch (const format_error& err) {
                problems.push_back(name + ": " + err.what());
            }
        }
        return problems;
    }

private:
    static void write_atomically(const std::filesystem::path& path, const std::string& text) {
        std::filesystem::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw format_error("cannot write " + tmp.string());
            out << text;
            out.flush();
            if (!out) throw format_error("write failed for " + tmp.string());
        }
        std::filesystem::rename(tmp, path);
    }

    std::filesystem::path dir_;
};

}  // namespace ccc
