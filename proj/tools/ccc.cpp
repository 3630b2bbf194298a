// ccc: bounds, searches, design constructions and the code catalog from the
// command line. Exit status: 0 success, 1 verification or validation
// failure, 2 incomplete search, 3 I/O or format error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "ccc/ccc.hpp"

namespace fs = std::filesystem;
using namespace ccc;

namespace {

enum Exit { ok = 0, invalid = 1, incomplete = 2, io_error = 3 };

struct Globals {
    std::uint64_t seed = 1;
    bool quiet = false;
    bool strict = false;
};

struct ParamArgs {
    int q = 0;
    int n = 0;
    int d = 0;
    std::string comp;

    void add_to(CLI::App* cmd) {
        cmd->add_option("-q", q, "alphabet size")->required();
        cmd->add_option("-n", n, "length")->required();
        cmd->add_option("-d", d, "minimum distance")->required();
        cmd->add_option("-w", comp, "composition, e.g. 2,1")->required();
    }

    CodeParams params() const { return CodeParams(q, n, d, Composition::parse(comp)); }
};

void print_violations(const VerifyReport& report, std::ostream& out) {
    for (const auto& v : report.violations) out << "violation " << describe(v) << "\n";
}

/// Output goes to `path`, or stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

/// Files named k<length>.ccc in `dir`, keyed by length.
IngredientMap read_ingredients(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw format_error("not a directory: " + dir.string());
    static const std::regex name(R"(k([0-9]+)\.ccc)");
    IngredientMap out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::smatch m;
        std::string file = entry.path().filename().string();
        if (!std::regex_match(file, m, name)) continue;
        out.emplace(std::stoi(m[1].str()), read_code_file(entry.path()));
    }
    return out;
}

std::vector<int> read_weights(const fs::path& path, int points) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path.string());
    std::vector<int> weights;
    std::string token;
    while (in >> token) {
        if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 6) {
            throw format_error(path.string() + ": bad weight '" + token + "'");
        }
        weights.push_back(std::stoi(token));
    }
    if (weights.size() == 1) weights.assign(static_cast<std::size_t>(points), weights.front());
    if (static_cast<int>(weights.size()) != points) {
        throw format_error(path.string() + ": expected one weight or " + std::to_string(points) + " weights");
    }
    return weights;
}

/// WFC ingredients: DIR/<block index>.json, falling back to DIR/default.json.
std::map<std::size_t, GroupDivisibleDesign> read_wfc_ingredients(const fs::path& dir, std::size_t blocks) {
    if (!fs::is_directory(dir)) throw format_error("not a directory: " + dir.string());
    std::optional<GroupDivisibleDesign> fallback;
    if (fs::exists(dir / "default.json")) fallback = read_design_file(dir / "default.json").design;
    std::map<std::size_t, GroupDivisibleDesign> out;
    for (std::size_t b = 0; b < blocks; ++b) {
        fs::path specific = dir / (std::to_string(b) + ".json");
        if (fs::exists(specific)) {
            out.emplace(b, read_design_file(specific).design);
        } else if (fallback) {
            out.emplace(b, *fallback);
        }
    }
    return out;
}

/// Target parameters of a composition: the common composition, the largest
/// alphabet and the smallest distance among the ingredients.
CodeParams composed_params(int n, const IngredientMap& a, const IngredientMap& b, std::optional<int> d) {
    std::optional<CodeParams> first;
    int q = 0;
    int dist = std::numeric_limits<int>::max();
    for (const auto* m : {&a, &b}) {
        for (const auto& [k, code] : *m) {
            if (!first) first = code.params;
            if (code.params.comp != first->comp) throw construction_error("ingredients disagree on the composition");
            q = std::max(q, code.params.q);
            dist = std::min(dist, code.params.d);
        }
    }
    if (!first) throw construction_error("no ingredient codes found");
    return CodeParams(q, n, d.value_or(dist), first->comp);
}

void print_entry(const CatalogEntry& e, std::ostream& out) {
    out << "params " << e.params.to_string() << "\n"
        << "lower " << e.lower << "\n"
        << "upper " << e.upper << "\n"
        << "status " << to_string(e.status) << "\n"
        << "provenance " << e.provenance << "\n"
        << "upper-citation " << e.upper_citation << "\n"
        << "witness " << (e.witness ? e.witness->string() : "-") << "\n";
}

int run_bound(const ParamArgs& args) {
    auto b = upper_bound(args.params());
    std::cout << b.value << "\n" << to_string(b.rule) << "\n" << b.citation << "\n";
    return ok;
}

struct SearchArgs {
    ParamArgs params;
    std::string mode = "exact";
    std::optional<std::size_t> target;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> budget;
    std::optional<double> time_limit;
    std::string output;
};

int run_search(const SearchArgs& args, const Globals& g) {
    const CodeParams p = args.params.params();
    const auto bound = upper_bound(p);
    SearchBudget budget;
    budget.seed = args.seed.value_or(g.seed);
    budget.time_limit = args.time_limit;

    Code code(p);
    bool proven = false;
    bool finished = true;
    if (args.mode == "exact") {
        budget.max_iterations = args.budget.value_or(1'000'000'000);
        try {
            code = max_code_exact(p, budget);
            proven = true;
        } catch (const search_incomplete& e) {
            code = e.best();
            finished = false;
        }
    } else if (args.mode == "cyclic") {
        budget.max_iterations = args.budget.value_or(100'000'000);
        auto r = max_code_cyclic(p, budget);
        code = std::move(r.code);
        finished = r.status != SearchStatus::incomplete;
    } else {
        budget.max_iterations = args.budget.value_or(1'000'000);
        std::size_t target = args.target.value_or(static_cast<std::size_t>(std::min<std::int64_t>(bound.value, 1'000'000)));
        code = local_search(p, target, budget);
    }
    const auto size = static_cast<std::int64_t>(code.size());
    if (size >= bound.value) proven = true;
    const bool reached = args.target ? size >= static_cast<std::int64_t>(*args.target) : proven;

    if (!args.output.empty()) write_code_file(args.output, code);
    auto report = verify_code(code);
    if (!g.quiet) {
        std::cout << "size " << size << "\n"
                  << "bound " << bound.value << " " << to_string(bound.rule) << "\n"
                  << "gap " << bound.value - size << "\n"
                  << "status " << (proven ? "proven-optimal" : finished ? "best-effort" : "incomplete") << "\n";
        if (args.mode == "sls") std::cout << "seed " << budget.seed << "\n";
        std::cout << "verify " << (report.ok() ? "ok" : "failed") << "\n";
    }
    if (!report.ok()) return invalid;
    if (!finished) return incomplete;
    if (args.mode == "exact") return ok;
    return reached ? ok : incomplete;
}

struct ConstructArgs {
    std::string design;
    std::string ingredients;
    std::string groups;
    std::optional<int> d;
    std::string output;
};

int run_construct(const ConstructArgs& args, const Globals& g) {
    auto doc = read_design_file(args.design);
    IngredientMap blocks = read_ingredients(args.ingredients);
    IngredientMap groups = args.groups.empty() ? IngredientMap{} : read_ingredients(args.groups);
    const CodeParams target = composed_params(doc.design.point_count(), blocks, groups, args.d);

    std::int64_t predicted = 0;
    Code code(target);
    if (doc.groups_present) {
        predicted = predicted_size(doc.design, blocks, groups);
        code = gdd_compose(doc.design, blocks, groups, target);
    } else {
        predicted = predicted_size(doc.design.base, blocks);
        code = pbd_compose(doc.design.base, blocks, target);
    }
    auto report = verify_code(code);
    if (!args.output.empty()) write_code_file(args.output, code);
    if (!g.quiet) {
        std::cout << "params " << target.to_string() << "\n"
                  << "predicted " << predicted << "\n"
                  << "actual " << code.size() << "\n"
                  << "verify " << (report.ok() ? "ok" : "failed") << "\n";
        print_violations(report, std::cout);
    }
    if (args.output.empty()) std::cout << write_code_string(code);
    return report.ok() && predicted == static_cast<std::int64_t>(code.size()) ? ok : invalid;
}

int run_verify_design(const std::string& path, const Globals& g) {
    auto doc = read_design_file(path);
    auto report = doc.groups_present ? verify_gdd(doc.design) : verify_pbd(doc.design.base);
    if (!g.quiet) {
        std::cout << (doc.groups_present ? "gdd" : "pbd") << " points " << doc.design.point_count() << " blocks "
                  << doc.design.blocks().size() << "\n";
        if (doc.groups_present) std::cout << "type " << gdd_type(doc.design).to_string() << "\n";
        if (report.ok()) {
            auto census = doc.groups_present ? block_census(doc.design) : block_census(doc.design.base);
            for (auto [k, count] : census.counts) std::cout << "blocks-of-size " << k << " " << count << "\n";
        }
        print_violations(report, std::cout);
    }
    std::cout << (report.ok() ? "ok" : "failed") << "\n";
    return report.ok() ? ok : invalid;
}

int run_verify_code(const std::string& path, const Globals& g) {
    Code code = read_code_file(path);
    auto report = verify_code(code);
    if (!g.quiet) {
        std::cout << "params " << code.params.to_string() << "\n" << "size " << code.size() << "\n";
        if (code.size() >= 2) std::cout << "min-distance " << min_distance(code) << "\n";
        print_violations(report, std::cout);
    }
    std::cout << (report.ok() ? "ok" : "failed") << "\n";
    return report.ok() ? ok : invalid;
}

int run_catalog_show(const fs::path& dir, const ParamArgs& args, const Globals& g) {
    const CodeParams p = args.params();
    Catalog cat(dir);
    print_entry(cat.lookup(p, g.strict), std::cout);
    if (auto a = asymptotic_value(p)) {
        std::cout << "asymptotic " << a->value << " " << a->formula << " (" << a->caveat << ")\n";
    }
    return ok;
}

int run_catalog_store(const fs::path& dir, const std::string& file, const Globals& g) {
    Catalog cat(dir);
    try {
        auto e = cat.store(read_code_file(file));
        if (!g.quiet) print_entry(e, std::cout);
        return ok;
    } catch (const catalog_refused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        print_violations(e.report(), std::cerr);
        return invalid;
    }
}

int run_catalog_check(const fs::path& dir, const Globals& g) {
    Catalog cat(dir);
    auto problems = cat.check();
    for (const auto& p : problems) std::cout << "problem " << p << "\n";
    if (!g.quiet) std::cout << cat.entries().size() << " entries, " << problems.size() << " problems\n";
    return problems.empty() ? ok : invalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant-composition codes: bounds, searches, designs and constructions"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "random seed for local search");
    app.add_flag("--quiet", g.quiet, "print only results");
    app.add_flag("--strict", g.strict, "report exact catalog entries without a witness as open");

    ParamArgs bound_args;
    auto* bound = app.add_subcommand("bound", "upper bound with rule and citation");
    bound_args.add_to(bound);

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "search for a large code");
    search_args.params.add_to(search);
    search->add_option("--mode", search_args.mode, "exact, cyclic or sls")
        ->check(CLI::IsMember({"exact", "cyclic", "sls"}));
    search->add_option("--target", search_args.target, "size to aim for");
    search->add_option("--seed", search_args.seed, "random seed (sls)");
    search->add_option("--budget", search_args.budget, "node or iteration budget");
    search->add_option("--time-limit", search_args.time_limit, "seconds");
    search->add_option("-o,--output", search_args.output, "code file to write");

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "compose ingredient codes through a design");
    construct->add_option("--design", construct_args.design, "design file")->required();
    construct->add_option("--ingredients", construct_args.ingredients, "directory of block ingredient codes")->required();
    construct->add_option("--groups", construct_args.groups, "directory of group ingredient codes");
    construct->add_option("-d", construct_args.d, "target distance (default: smallest ingredient distance)");
    construct->add_option("-o,--output", construct_args.output, "code file to write");

    auto* design = app.add_subcommand("design", "generate, transform and verify designs");
    design->require_subcommand(1);
    std::string design_out;
    int td_k = 0, td_g = 0, plane_p = 0;
    auto* td = design->add_subcommand("td", "transversal design TD(k, p)");
    td->add_option("-k", td_k)->required();
    td->add_option("-g", td_g, "prime group size")->required();
    td->add_option("-o,--output", design_out);
    auto* affine = design->add_subcommand("affine", "affine plane of prime order");
    affine->add_option("-p", plane_p)->required();
    affine->add_option("-o,--output", design_out);
    auto* projective = design->add_subcommand("projective", "projective plane of prime order");
    projective->add_option("-p", plane_p)->required();
    projective->add_option("-o,--output", design_out);
    std::string wfc_master, wfc_weights, wfc_ingredients;
    auto* wfc_cmd = design->add_subcommand("wfc", "Wilson's fundamental construction");
    wfc_cmd->add_option("--master", wfc_master)->required();
    wfc_cmd->add_option("--weights", wfc_weights, "one weight, or one per master point")->required();
    wfc_cmd->add_option("--ingredients", wfc_ingredients, "directory of <block>.json or default.json")->required();
    wfc_cmd->add_option("-o,--output", design_out);
    std::string delete_file;
    int delete_x = 0;
    auto* del = design->add_subcommand("delete-point", "delete a point of a PBD");
    del->add_option("file", delete_file)->required();
    del->add_option("point", delete_x)->required();
    del->add_option("-o,--output", design_out);
    std::string verify_design_file;
    auto* dverify = design->add_subcommand("verify", "verify a PBD or GDD file");
    dverify->add_option("file", verify_design_file)->required();

    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "verify a code file");
    verify->add_option("file", verify_file)->required();

    auto* catalog = app.add_subcommand("catalog", "known values and stored witnesses");
    catalog->require_subcommand(1);
    std::string catalog_dir = "catalog";
    catalog->add_option("--catalog", catalog_dir, "catalog directory");
    ParamArgs show_args;
    auto* show = catalog->add_subcommand("show", "look up a parameter set");
    show_args.add_to(show);
    std::string store_file;
    auto* store = catalog->add_subcommand("store", "store a verified code");
    store->add_option("file", store_file)->required();
    auto* check = catalog->add_subcommand("check", "re-verify every stored witness");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return io_error;
    }

    try {
        if (*bound) return run_bound(bound_args);
        if (*search) return run_search(search_args, g);
        if (*construct) return run_construct(construct_args, g);
        if (*td) {
            emit(design_out, design_to_string(transversal_design(td_k, td_g)));
            return ok;
        }
        if (*affine) {
            emit(design_out, design_to_string(affine_plane(plane_p)));
            return ok;
        }
        if (*projective) {
            emit(design_out, design_to_string(projective_plane(plane_p)));
            return ok;
        }
        if (*wfc_cmd) {
            auto master = read_design_file(wfc_master).design;
            auto weights = read_weights(wfc_weights, master.point_count());
            auto ingredients = read_wfc_ingredients(wfc_ingredients, master.blocks().size());
            emit(design_out, design_to_string(wfc(master, weights, ingredients)));
            return ok;
        }
        if (*del) {
            auto doc = read_design_file(delete_file);
            auto out = doc.groups_present ? delete_point(doc.design, delete_x) : delete_point(doc.design.base, delete_x);
            emit(design_out, design_to_string(out));
            return ok;
        }
        if (*dverify) return run_verify_design(verify_design_file, g);
        if (*verify) return run_verify_code(verify_file, g);
        if (*show) return run_catalog_show(catalog_dir, show_args, g);
        if (*store) return run_catalog_store(catalog_dir, store_file, g);
        if (*check) return run_catalog_check(catalog_dir, g);
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const catalog_busy& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    }
    return invalid;
}
