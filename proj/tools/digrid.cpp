// Command-line front end: exact Wiener indices of grid orientations,
// closed-form evaluation and cross-checking, comparison tables, and
// maximum-orientation search with export to JSON/DOT.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "digrid/digrid.hpp"

namespace {

using nlohmann::json;

struct SourceArgs {
    std::string orient;
    int m = 0;
    int n = 0;
    std::string file;
};

digrid::Orientation resolve_source(const SourceArgs& s) {
    if (!s.file.empty()) return digrid::read_orientation_file(s.file);
    if (s.orient.empty())
        throw std::invalid_argument("pick an orientation with --orient or --file");
    if (s.orient == "ladder") {
        if (s.m != 0 && s.m != 2)
            throw std::invalid_argument("the ladder orientation has m = 2; drop --m or pass 2");
        return digrid::ladder_orientation(s.n);
    }
    const digrid::GridDims d{s.m, s.n};
    if (s.orient == "comb") return digrid::comb_orientation(d);
    if (s.orient == "conj") return digrid::conjectured_orientation(d);
    if (s.orient == "snake") return digrid::snake_hampath_orientation(d);
    throw std::invalid_argument("unknown orientation name: " + s.orient +
                                " (expected comb|conj|ladder|snake)");
}

std::optional<digrid::int128> applicable_closed_form(const std::string& orient,
                                                     digrid::GridDims d) {
    if (orient == "conj" || orient == "ladder") return digrid::conj_closed_form(d.m, d.n);
    if (orient == "comb" && d.m >= 4 && d.n >= 4 && d.n % 2 == 0)
        return digrid::comb_closed_form(d.m, d.n);
    if (orient == "snake" && (d.m == 1 || d.n == 1))
        return digrid::path_wiener(d.vertex_count());
    return std::nullopt;
}

json ratio_json(const digrid::Rational& r) {
    return json{{"num", digrid::to_string(r.num)},
                {"den", digrid::to_string(r.den)},
                {"decimal", r.decimal(6)}};
}

int default_jobs() {
    if (const char* env = std::getenv("DIGRID_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range must look like A..B, got " + s);
    const int a = std::stoi(s.substr(0, dots));
    const int b = std::stoi(s.substr(dots + 2));
    if (a > b) throw std::invalid_argument("empty range " + s);
    return {a, b};
}

// ---------------------------------------------------------------- wiener --

int run_wiener(const SourceArgs& src, bool transmissions, const std::string& format) {
    const digrid::Orientation o = resolve_source(src);
    const digrid::Digraph d = digrid::materialize(o);
    const digrid::int128 w = digrid::wiener_index(d);
    const bool sc = digrid::is_strongly_connected(d);
    std::optional<digrid::int128> formula;
    if (src.file.empty()) formula = applicable_closed_form(src.orient, o.dims);
    const bool match = !formula || *formula == w;

    if (format == "json") {
        json j;
        j["m"] = o.dims.m;
        j["n"] = o.dims.n;
        if (!src.orient.empty()) j["orient"] = src.orient;
        if (!src.file.empty()) j["file"] = src.file;
        j["wiener"] = digrid::to_string(w);
        j["strongly_connected"] = sc;
        j["average_distance"] = d.q() >= 2 ? ratio_json(digrid::average_distance(d)) : json(nullptr);
        j["closed_form"] = formula ? json(digrid::to_string(*formula)) : json(nullptr);
        j["closed_form_matches"] = formula ? json(match) : json(nullptr);
        if (transmissions) {
            json ts = json::array();
            for (long long v = 0; v < d.q(); ++v) {
                const digrid::Vertex u = digrid::vertex_at(o.dims, v);
                ts.push_back({{"row", u.row},
                              {"col", u.col},
                              {"value", std::to_string(digrid::transmission(d, u).value)}});
            }
            j["transmissions"] = std::move(ts);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "grid: " << o.dims.m << "x" << o.dims.n;
        if (!src.orient.empty()) std::cout << " orientation: " << src.orient;
        if (!src.file.empty()) std::cout << " file: " << src.file;
        std::cout << "\n";
        std::cout << "W = " << digrid::to_string(w) << "\n";
        std::cout << "strongly connected: " << (sc ? "yes" : "no") << "\n";
        if (d.q() >= 2) {
            const digrid::Rational mu = digrid::average_distance(d);
            std::cout << "average distance = " << mu.str() << " (" << mu.decimal(6) << ")\n";
        }
        if (formula)
            std::cout << "closed form = " << digrid::to_string(*formula)
                      << (match ? " (match)" : " (MISMATCH)") << "\n";
        if (transmissions) {
            for (long long v = 0; v < d.q(); ++v) {
                const digrid::Vertex u = digrid::vertex_at(o.dims, v);
                std::cout << "  w(" << u.row << "," << u.col
                          << ") = " << digrid::transmission(d, u).value << "\n";
            }
        }
    }
    if (!match) {
        std::cerr << "error: closed form " << digrid::to_string(*formula)
                  << " disagrees with BFS value " << digrid::to_string(w) << "\n";
        return 1;
    }
    return 0;
}

// --------------------------------------------------------------- compare --

void print_comparison(const digrid::ComparisonReport& r, const std::string& format) {
    if (format == "json") {
        json j;
        j["m"] = r.dims.m;
        j["n"] = r.dims.n;
        j["lhs_label"] = r.lhs_label;
        j["rhs_label"] = r.rhs_label;
        j["lhs"] = digrid::to_string(r.lhs);
        j["rhs"] = digrid::to_string(r.rhs);
        j["lhs_route"] = r.lhs_route;
        j["rhs_route"] = r.rhs_route;
        j["gap"] = digrid::to_string(r.gap);
        j["holds"] = r.holds;
        j["lhs_ratio"] = ratio_json(r.lhs_ratio);
        j["rhs_ratio"] = ratio_json(r.rhs_ratio);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.lhs_label << " = " << digrid::to_string(r.lhs) << " [" << r.lhs_route
                  << "]\n";
        std::cout << r.rhs_label << " = " << digrid::to_string(r.rhs) << " [" << r.rhs_route
                  << "]\n";
        std::cout << "gap = " << digrid::to_string(r.gap) << "\n";
        std::cout << r.lhs_label << " > " << r.rhs_label << ": " << (r.holds ? "PASS" : "FAIL")
                  << "\n";
        std::cout << "ratio " << r.lhs_label << " = " << r.lhs_ratio.str() << " ("
                  << r.lhs_ratio.decimal(6) << ")\n";
        std::cout << "ratio " << r.rhs_label << " = " << r.rhs_ratio.str() << " ("
                  << r.rhs_ratio.decimal(6) << ")\n";
    }
}

int run_compare(int m, int n, bool transpose, const std::string& format) {
    const digrid::ComparisonReport r =
        transpose ? digrid::compare_comb_transpose(m, n) : digrid::compare_comb_vs_conj(m, n);
    print_comparison(r, format);
    return r.holds ? 0 : 1;
}

// ----------------------------------------------------------------- table --

struct TableRow {
    int m = 0, n = 0;
    std::optional<digrid::int128> w_comb;
    digrid::int128 w_conj = 0;
    std::optional<digrid::int128> gap;
    digrid::Rational ratio;  // W/(mn)^3 of the comb value when defined, else conj
    std::optional<bool> comb_gt_conj;
    std::optional<bool> comb_gt_transpose;
};

int run_table(const std::string& m_range, const std::string& n_range, const std::string& format) {
    const auto [m_lo, m_hi] = parse_range(m_range);
    const auto [n_lo, n_hi] = parse_range(n_range);
    std::vector<TableRow> rows;
    for (int m = std::max(2, m_lo); m <= m_hi; ++m) {
        for (int n = std::max(2, n_lo); n <= n_hi; ++n) {
            TableRow row;
            row.m = m;
            row.n = n;
            row.w_conj = digrid::conj_closed_form(m, n);
            if (n % 2 == 0) {
                row.w_comb = m >= 4 && n >= 4
                                 ? digrid::comb_closed_form(m, n)
                                 : digrid::wiener_index(
                                       digrid::materialize(digrid::comb_orientation({m, n})));
                row.gap = *row.w_comb - row.w_conj;
                if (m >= 3 && n >= 4) row.comb_gt_conj = *row.gap > 0;
            }
            if (m % 2 == 0 && n % 2 == 0 && m >= 4 && m < n)
                row.comb_gt_transpose =
                    digrid::comb_closed_form(m, n) > digrid::comb_closed_form(n, m);
            const digrid::int128 cube =
                digrid::int128{m} * n * (digrid::int128{m} * n) * (digrid::int128{m} * n);
            row.ratio = digrid::Rational(row.w_comb ? *row.w_comb : row.w_conj, cube);
            rows.push_back(row);
        }
    }
    if (rows.empty()) throw std::invalid_argument("empty range: no grids with m,n >= 2 selected");

    auto verdict = [](std::optional<bool> v) -> std::string {
        return v ? (*v ? "PASS" : "FAIL") : "";
    };
    auto opt = [](const std::optional<digrid::int128>& v) -> std::string {
        return v ? digrid::to_string(*v) : "";
    };

    if (format == "json") {
        json arr = json::array();
        for (const TableRow& r : rows) {
            json j;
            j["m"] = r.m;
            j["n"] = r.n;
            j["w_comb"] = r.w_comb ? json(digrid::to_string(*r.w_comb)) : json(nullptr);
            j["w_conj"] = digrid::to_string(r.w_conj);
            j["gap"] = r.gap ? json(digrid::to_string(*r.gap)) : json(nullptr);
            j["ratio"] = ratio_json(r.ratio);
            j["comb_gt_conj"] = r.comb_gt_conj ? json(*r.comb_gt_conj) : json(nullptr);
            j["comb_gt_transpose"] =
                r.comb_gt_transpose ? json(*r.comb_gt_transpose) : json(nullptr);
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    if (format == "md") {
        std::cout << "| m | n | W_comb | W_conj | gap | ratio | comb>conj | comb>transpose |\n";
        std::cout << "|---|---|--------|--------|-----|-------|-----------|----------------|\n";
        for (const TableRow& r : rows)
            std::cout << "| " << r.m << " | " << r.n << " | " << opt(r.w_comb) << " | "
                      << digrid::to_string(r.w_conj) << " | " << opt(r.gap) << " | "
                      << r.ratio.str() << " (" << r.ratio.decimal(6) << ") | "
                      << verdict(r.comb_gt_conj) << " | " << verdict(r.comb_gt_transpose)
                      << " |\n";
        return 0;
    }
    std::cout << "m,n,w_comb,w_conj,gap,ratio,ratio_decimal,comb_gt_conj,comb_gt_transpose\n";
    for (const TableRow& r : rows)
        std::cout << r.m << "," << r.n << "," << opt(r.w_comb) << ","
                  << digrid::to_string(r.w_conj) << "," << opt(r.gap) << "," << r.ratio.str()
                  << "," << r.ratio.decimal(6) << "," << verdict(r.comb_gt_conj) << ","
                  << verdict(r.comb_gt_transpose) << "\n";
    return 0;
}

// ---------------------------------------------------------------- search --

json search_report_json(const digrid::SearchReport& r) {
    json j;
    j["dims"] = {{"m", r.dims.m}, {"n", r.dims.n}};
    j["strategy"] = r.strategy;
    j["max_wiener"] = digrid::to_string(r.max_wiener);
    j["proven_maximum"] = r.proven_maximum;
    j["optima_orbit_count"] = r.optima_orbit_count;
    j["evaluated"] = r.evaluated_count;
    j["pruned"] = r.pruned_count;
    j["seed"] = r.seed;
    j["restarts"] = r.restarts;
    json wits = json::array();
    for (const digrid::SearchWitness& w : r.witnesses)
        wits.push_back({{"bits", digrid::bits_string(w.orientation)},
                        {"strongly_connected", w.strongly_connected}});
    j["witnesses"] = std::move(wits);
    j["wall_ms"] = r.wall_ms;
    return j;
}

int run_search(int m, int n, bool local, const digrid::SearchOptions& opts,
               const std::string& out_dir, const std::string& format) {
    const digrid::GridDims dims{m, n};
    require_valid(dims);
    if (!local && !opts.big && dims.edge_count() > 24)
        throw digrid::budget_error(
            "exhaustive search over " + std::to_string(dims.edge_count()) +
            " edges takes a while; pass --big to run it anyway");
    const digrid::SearchReport r =
        local ? digrid::local_search_max(dims, opts) : digrid::exhaustive_max(dims, opts);

    if (format == "json") {
        std::cout << search_report_json(r).dump(2) << "\n";
    } else {
        std::cout << "grid: " << r.dims.m << "x" << r.dims.n << "\n";
        std::cout << "strategy: " << r.strategy << "\n";
        std::cout << "max W = " << digrid::to_string(r.max_wiener)
                  << (r.proven_maximum ? " (proven maximum)" : " (lower bound)") << "\n";
        std::cout << "optima orbits: " << r.optima_orbit_count << "\n";
        for (const digrid::SearchWitness& w : r.witnesses)
            std::cout << "  witness " << digrid::bits_string(w.orientation)
                      << " strongly_connected=" << (w.strongly_connected ? "yes" : "no") << "\n";
        std::cout << "evaluated: " << r.evaluated_count << "  pruned: " << r.pruned_count << "\n";
        if (!r.proven_maximum)
            std::cout << "seed: " << r.seed << "  restarts: " << r.restarts << "\n";
        std::cout << "wall: " << r.wall_ms << " ms\n";
    }

    if (!out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) throw digrid::io_error("cannot create directory " + out_dir);
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
            std::ostringstream stem;
            stem << out_dir << "/witness_" << i;
            digrid::write_orientation_file(stem.str() + ".json", r.witnesses[i].orientation);
            digrid::write_dot_file(stem.str() + ".dot", r.witnesses[i].orientation);
        }
    }
    return 0;
}

// ---------------------------------------------------------------- export --

int run_export(const SourceArgs& src, const std::string& dot_path, const std::string& json_path,
               bool compact) {
    if (dot_path.empty() && json_path.empty())
        throw std::invalid_argument("pass --dot and/or --json to export");
    const digrid::Orientation o = resolve_source(src);
    if (!dot_path.empty()) digrid::write_dot_file(dot_path, o);
    if (!json_path.empty()) digrid::write_orientation_file(json_path, o, compact);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digrid: exact Wiener indices of oriented grid graphs"};
    app.require_subcommand(1);

    // wiener
    auto* wiener = app.add_subcommand("wiener", "Wiener index of one orientation");
    SourceArgs wsrc;
    bool wtrans = false;
    std::string wformat = "text";
    wiener->add_option("--orient", wsrc.orient, "comb|conj|ladder|snake");
    wiener->add_option("--m", wsrc.m, "rows");
    wiener->add_option("--n", wsrc.n, "columns");
    wiener->add_option("--file", wsrc.file, "orientation JSON file");
    wiener->add_flag("--transmissions", wtrans, "print per-vertex transmissions");
    wiener->add_option("--format", wformat, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // compare
    auto* compare = app.add_subcommand("compare", "comb vs conjectured (or vs transposed comb)");
    int cm = 0, cn = 0;
    bool ctranspose = false;
    std::string cformat = "text";
    compare->add_option("--m", cm, "rows")->required();
    compare->add_option("--n", cn, "columns")->required();
    compare->add_flag("--transpose", ctranspose, "compare comb(m,n) against comb(n,m)");
    compare->add_option("--format", cformat, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // table
    auto* table = app.add_subcommand("table", "comparison table over ranges of m and n");
    std::string m_range, n_range, tformat = "csv";
    table->add_option("--m-range", m_range, "A..B")->required();
    table->add_option("--n-range", n_range, "C..D")->required();
    table->add_option("--format", tformat, "csv|md|json")
        ->check(CLI::IsMember({"csv", "md", "json"}));

    // search
    auto* search = app.add_subcommand("search", "maximum-Wiener orientation search");
    int sm = 0, sn = 0;
    bool exhaustive = false, local = false, symmetry = false, big = false;
    digrid::SearchOptions sopts;
    sopts.worker_count = default_jobs();
    std::string checkpoint, out_dir, sformat = "text";
    search->add_option("--m", sm, "rows")->required();
    search->add_option("--n", sn, "columns")->required();
    search->add_flag("--exhaustive", exhaustive, "enumerate every orientation (default)");
    search->add_flag("--local", local, "hill climbing with random restarts");
    search->add_flag("--symmetry", symmetry, "evaluate one orientation per symmetry orbit");
    search->add_option("--jobs", sopts.worker_count, "worker threads (default $DIGRID_JOBS or 1)");
    search->add_option("--seed", sopts.seed, "PRNG seed for --local");
    search->add_option("--restarts", sopts.restarts, "restart count for --local");
    search->add_option("--plateau", sopts.max_plateau_moves,
                       "equal-value moves allowed per restart for --local");
    search->add_option("--checkpoint", checkpoint, "checkpoint file (resumes if it exists)");
    search->add_option("--checkpoint-interval", sopts.checkpoint_interval,
                       "extra checkpoint writes every N evaluations");
    search->add_flag("--big", big, "allow long exhaustive runs (up to 62 edges)");
    search->add_option("--out", out_dir, "write witness JSON+DOT files into this directory");
    search->add_option("--witness-cap", sopts.witness_cap, "max witnesses kept (default 64)");
    search->add_option("--format", sformat, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // export
    auto* exp = app.add_subcommand("export", "write an orientation as JSON and/or DOT");
    SourceArgs esrc;
    std::string dot_path, json_path;
    bool compact = false;
    exp->add_option("--orient", esrc.orient, "comb|conj|ladder|snake");
    exp->add_option("--m", esrc.m, "rows");
    exp->add_option("--n", esrc.n, "columns");
    exp->add_option("--file", esrc.file, "orientation JSON file");
    exp->add_option("--dot", dot_path, "DOT output path");
    exp->add_option("--json", json_path, "JSON output path");
    exp->add_flag("--compact", compact, "use the bits form instead of the arc list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (wiener->parsed()) return run_wiener(wsrc, wtrans, wformat);
        if (compare->parsed()) return run_compare(cm, cn, ctranspose, cformat);
        if (table->parsed()) return run_table(m_range, n_range, tformat);
        if (search->parsed()) {
            if (exhaustive && local)
                throw std::invalid_argument("--exhaustive and --local are mutually exclusive");
            sopts.use_symmetry = symmetry;
            sopts.big = big;
            sopts.checkpoint_path = checkpoint;
            return run_search(sm, sn, local, sopts, out_dir, sformat);
        }
        if (exp->parsed()) return run_export(esrc, dot_path, json_path, compact);
    } catch (const digrid::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
