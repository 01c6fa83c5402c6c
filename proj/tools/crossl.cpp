// crossl: bounds, exact oracles and fragment censuses for cross L-intersecting families.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crossl/bounds.hpp"
#include "crossl/family.hpp"
#include "crossl/fragments.hpp"
#include "crossl/report.hpp"
#include "crossl/search.hpp"

namespace fs = std::filesystem;
using namespace crossl;

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kInvalid = 2, kInfeasible = 3, kBudget = 4 };

struct Config {
    std::string mode = "cross2";
    int n = 0;
    int k = 0;
    int r = 2;
    std::string L;
    unsigned threads = 1;
    std::size_t budget = 200'000'000;
    std::string out;
    std::string cache_dir;
    std::uint64_t seed = 0;

    // bound
    std::string which;
    int a = 0;
    int b = 0;
    int t = 0;
    int l = 0;
    int s = 0;
    // search / verify
    bool no_witnesses = false;
    bool no_witness_check = false;
    std::string sweep;
    // fragments
    std::size_t size_cap = 0;
    std::string side = "X";
    // shadow
    std::string family;
    int i = -1;
    long long size = -1;
    // construct
    std::string seed_family;
};

struct Outcome {
    int code = kOk;
    std::string text;  // full report, newline-terminated
};

void add_common(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--mode", cfg.mode, "cross2, pairwise or rcross")->capture_default_str();
    cmd->add_option("--n", cfg.n, "ground set size");
    cmd->add_option("--k", cfg.k, "uniformity");
    cmd->add_option("--r", cfg.r, "number of families")->capture_default_str();
    cmd->add_option("--L", cfg.L, "allowed intersection sizes: \"0,2\", \"1..3\" or \"all\"");
    cmd->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
    cmd->add_option("--budget", cfg.budget, "search node budget")->capture_default_str();
    cmd->add_option("--out", cfg.out, "write the report here instead of stdout");
    cmd->add_option("--cache-dir", cfg.cache_dir, "content-addressed result cache");
    cmd->add_option("--seed", cfg.seed, "seed for random inputs")->capture_default_str();
}

LSpec lspec(const Config& cfg) {
    if (cfg.L.empty()) throw ParameterError("--L is required");
    return LSpec::parse(cfg.L, cfg.k);
}

SearchOptions search_options(const Config& cfg) {
    SearchOptions o;
    o.budget = cfg.budget;
    o.threads = cfg.threads;
    o.collect_witnesses = !cfg.no_witnesses;
    return o;
}

Json params(const std::string& command, const Config& cfg) {
    Json j;
    j["command"] = command;
    j["mode"] = cfg.mode;
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["r"] = cfg.r;
    j["L"] = cfg.L.empty() ? std::vector<int>{} : lspec(cfg).values();
    j["budget"] = cfg.budget;
    j["which"] = cfg.which;
    j["a"] = cfg.a;
    j["b"] = cfg.b;
    j["t"] = cfg.t;
    j["l"] = cfg.l;
    j["s"] = cfg.s;
    j["no_witnesses"] = cfg.no_witnesses;
    j["no_witness_check"] = cfg.no_witness_check;
    j["sweep"] = cfg.sweep;
    j["size_cap"] = cfg.size_cap;
    j["side"] = cfg.side;
    return j;
}

// -- bound -----------------------------------------------------------------

Outcome cmd_bound(const Config& cfg) {
    Json j;
    int code = kOk;
    const std::string which = cfg.which.empty() ? "mode" : cfg.which;
    if (which == "mode") {
        const BoundResult b = evaluate_bound(parse_mode(cfg.mode), cfg.n, cfg.k, cfg.r, lspec(cfg));
        j = to_json(b);
        if (b.infeasible()) code = kInfeasible;
    } else if (which == "ekr") {
        j["which"] = which;
        j["n"] = cfg.n;
        j["k"] = cfg.k;
        j["value"] = count_to_json(bound_ekr(cfg.n, cfg.k));
    } else if (which == "product") {
        const ProductBound p = bound_deza_erdos_frankl(cfg.n, cfg.k, lspec(cfg));
        j["which"] = which;
        j["n"] = cfg.n;
        j["k"] = cfg.k;
        j["L"] = lspec(cfg).values();
        j["value"] = p.value.str();
        j["floor"] = count_to_json(p.floor);
        j["in_stated_range"] = p.in_stated_range;
    } else if (which == "two-uniformities") {
        const WarnedCount w = bound_wang_zhang(cfg.n, cfg.a, cfg.b, cfg.t);
        j["which"] = which;
        j["n"] = cfg.n;
        j["a"] = cfg.a;
        j["b"] = cfg.b;
        j["t"] = cfg.t;
        j["value"] = count_to_json(w.value);
        j["warnings"] = w.warnings;
    } else if (which == "pairwise-intersecting" || which == "pairwise-t") {
        const BranchedCount c = which == "pairwise-t" ? bound_pairwise_t(cfg.n, cfg.k, cfg.t, cfg.r)
                                                      : bound_pairwise_cross_intersecting(cfg.n, cfg.k, cfg.r);
        j["which"] = which;
        j["n"] = cfg.n;
        j["k"] = cfg.k;
        j["r"] = cfg.r;
        if (which == "pairwise-t") j["t"] = cfg.t;
        j["value"] = count_to_json(c.value);
        j["hilton_milner_branch"] = count_to_json(c.hilton_milner_branch);
        j["star_branch"] = count_to_json(c.star_branch);
        j["winner"] = c.winner;
    } else if (which == "max-t-intersecting") {
        j["which"] = which;
        j["n"] = cfg.n;
        j["k"] = cfg.k;
        j["t"] = cfg.t;
        j["value"] = count_to_json(max_t_intersecting(cfg.n, cfg.k, cfg.t));
    } else if (which == "rcross-t") {
        const ArgmaxCount c = bound_rcross_t(cfg.n, cfg.k, cfg.t, cfg.r);
        j["which"] = which;
        j["n"] = cfg.n;
        j["k"] = cfg.k;
        j["r"] = cfg.r;
        j["t"] = cfg.t;
        j["value"] = count_to_json(c.value);
        j["argmax_m"] = c.argmax;
    } else if (which == "rcross-interval") {
        j["which"] = which;
        j["n"] = cfg.n;
        j["k"] = cfg.k;
        j["r"] = cfg.r;
        j["l"] = cfg.l;
        j["s"] = cfg.s;
        j["value"] = count_to_json(bound_rcross_interval(cfg.n, cfg.k, cfg.r, cfg.l, cfg.s));
        j["asymptotic"] = true;
    } else {
        throw ParameterError("unknown bound '" + which + "'");
    }
    return {code, dump_report(j)};
}

// -- search ----------------------------------------------------------------

Outcome cmd_search(const Config& cfg) {
    const SearchResult s = run_oracle(parse_mode(cfg.mode), cfg.n, cfg.k, cfg.r, lspec(cfg), search_options(cfg));
    int code = kOk;
    if (!s.complete)
        code = kBudget;
    else if (s.infeasible())
        code = kInfeasible;
    return {code, dump_report(to_json(s))};
}

// -- verify and sweep ------------------------------------------------------

struct Grid {
    std::vector<int> n;
    std::vector<int> k;
    std::vector<int> r{2};
    std::optional<std::vector<int>> L;  // empty: every nonempty L
};

std::vector<int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {std::stoi(text)};
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw ParameterError("empty range " + text);
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

// "n=4..8,k=2..3,L=all": comma-separated key=value; a token without '='
// continues the previous value, so "L=0,2" keeps its comma.
Grid parse_grid(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> fields;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            if (fields.empty()) throw ParameterError("malformed sweep spec '" + text + "'");
            fields.back().second += "," + token;
        } else {
            fields.emplace_back(token.substr(0, eq), token.substr(eq + 1));
        }
    }
    Grid g;
    std::string l_text = "all";
    try {
        for (const auto& [key, value] : fields) {
            if (key == "n")
                g.n = parse_range(value);
            else if (key == "k")
                g.k = parse_range(value);
            else if (key == "r")
                g.r = parse_range(value);
            else if (key == "L")
                l_text = value;
            else
                throw ParameterError("unknown sweep key '" + key + "'");
        }
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ParameterError*>(&e)) throw;
        throw ParameterError("malformed sweep spec '" + text + "'");
    }
    if (g.n.empty() || g.k.empty()) throw ParameterError("sweep spec needs n and k");
    if (l_text != "all") g.L = LSpec::parse(l_text, 63).values();
    return g;
}

struct SweepOutput {
    std::vector<SweepRow> rows;
    std::size_t skipped = 0;
};

SweepOutput run_sweep(Mode mode, const Grid& grid, const SearchOptions& opts) {
    SweepOutput out;
    const std::vector<int> rs = mode == Mode::Cross2 ? std::vector<int>{2} : grid.r;
    for (int k : grid.k)
        for (int r : rs)
            for (int n : grid.n) {
                if (n < k || k < 2) continue;
                std::vector<LSpec> specs;
                if (grid.L) {
                    if (*std::max_element(grid.L->begin(), grid.L->end()) > k) continue;
                    specs.push_back(LSpec::from_values(*grid.L, k));
                } else {
                    specs = all_lspecs(k);
                }
                for (const LSpec& L : specs) {
                    SweepRow row;
                    row.mode = mode;
                    row.n = n;
                    row.k = k;
                    row.r = r;
                    row.L = L.values();
                    const auto start = std::chrono::steady_clock::now();
                    try {
                        const BoundResult b = evaluate_bound(mode, n, k, row.r, L);
                        const SearchResult s = run_oracle(mode, n, k, row.r, L, opts);
                        row.bound = b.value;
                        row.oracle = s.max_sum;
                        row.oracle_complete = s.complete;
                        row.equal = s.complete && row.bound.has_value() == row.oracle.has_value() &&
                                    (!row.oracle || BigCount(*row.oracle) == *row.bound);
                    } catch (const ParameterError&) {
                        ++out.skipped;
                        continue;
                    }
                    row.runtime_ms =
                        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                    out.rows.push_back(std::move(row));
                }
            }
    return out;
}

Json threshold_table(const SweepOutput& sweep) {
    std::map<std::tuple<int, int, std::vector<int>>, std::vector<std::pair<int, bool>>> groups;
    for (const auto& row : sweep.rows)
        if (row.oracle_complete) groups[{row.k, row.r, row.L}].emplace_back(row.n, row.equal);
    Json out = Json::array();
    for (auto& [key, points] : groups) {
        std::sort(points.begin(), points.end());
        Json item;
        item["k"] = std::get<0>(key);
        item["r"] = std::get<1>(key);
        item["L"] = std::get<2>(key);
        const auto t = empirical_threshold(points);
        item["empirical_threshold"] = t ? Json(*t) : Json(nullptr);
        out.push_back(std::move(item));
    }
    return out;
}

Outcome verify_sweep(const Config& cfg) {
    const Mode mode = parse_mode(cfg.mode);
    SearchOptions opts = search_options(cfg);
    opts.collect_witnesses = false;
    const SweepOutput sweep = run_sweep(mode, parse_grid(cfg.sweep), opts);
    Json j;
    j["mode"] = to_string(mode);
    j["sweep"] = cfg.sweep;
    j["points"] = sweep.rows.size();
    j["skipped"] = sweep.skipped;
    bool all_equal = true;
    bool truncated = false;
    j["rows"] = Json::array();
    for (const auto& row : sweep.rows) {
        Json item;
        item["n"] = row.n;
        item["k"] = row.k;
        item["r"] = row.r;
        item["L"] = row.L;
        item["bound"] = row.bound ? count_to_json(*row.bound) : Json("INFEASIBLE");
        item["oracle"] = !row.oracle_complete ? Json("TRUNCATED") : row.oracle ? Json(*row.oracle) : Json("INFEASIBLE");
        item["equal"] = row.equal;
        j["rows"].push_back(std::move(item));
        all_equal = all_equal && row.equal;
        truncated = truncated || !row.oracle_complete;
    }
    j["all_equal"] = all_equal;
    if (mode != Mode::Cross2) j["empirical_thresholds"] = threshold_table(sweep);
    const int code = truncated ? kBudget : all_equal ? kOk : kMismatch;
    return {code, dump_report(j)};
}

Outcome cmd_verify(const Config& cfg) {
    if (!cfg.sweep.empty()) return verify_sweep(cfg);
    const Mode mode = parse_mode(cfg.mode);
    const LSpec L = lspec(cfg);
    const int r = mode == Mode::Cross2 ? 2 : cfg.r;
    const BoundResult b = evaluate_bound(mode, cfg.n, cfg.k, r, L);
    SearchOptions opts = search_options(cfg);
    opts.collect_witnesses = false;
    const SearchResult s = run_oracle(mode, cfg.n, cfg.k, r, L, opts);
    const bool equal =
        s.complete && b.value.has_value() == s.max_sum.has_value() && (!s.max_sum || BigCount(*s.max_sum) == *b.value);

    Json j;
    j["mode"] = to_string(mode);
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["r"] = r;
    j["L"] = L.values();
    j["regime"] = b.regime;
    j["asymptotic"] = b.asymptotic;
    j["bound"] = b.value ? count_to_json(*b.value) : Json("INFEASIBLE");
    j["oracle"] = !s.complete ? Json("TRUNCATED") : s.max_sum ? Json(*s.max_sum) : Json("INFEASIBLE");
    j["equal"] = equal;

    // A characterization exists for cross2 and for the pairwise k-in-L case.
    std::optional<CharacterizationReport> c;
    const bool has_characterization =
        (mode == Mode::Cross2 || (mode == Mode::Pairwise && b.regime == "PAIRWISE_IV")) &&
        cfg.n <= kMaxCanonicalDegree && binom_exact(cfg.n, cfg.k) <= 64;
    if (has_characterization && !cfg.no_witness_check) {
        c = mode == Mode::Cross2 ? verify_characterization(cfg.n, cfg.k, L, search_options(cfg))
                                 : verify_pairwise_characterization(cfg.n, cfg.k, r, L, search_options(cfg));
    }
    if (c)
        j["witness_match"] = c->status == WitnessMatch::Unknown ? Json("UNKNOWN") : Json(c->status == WitnessMatch::Match);
    else
        j["witness_match"] = has_characterization ? Json("UNKNOWN") : Json(nullptr);
    if (c) j["characterization"] = to_json(*c);

    int code = kOk;
    if (!s.complete)
        code = kBudget;
    else if (!equal || (c && c->status == WitnessMatch::Mismatch))
        code = kMismatch;
    else if (c && c->status == WitnessMatch::Unknown)
        code = kBudget;
    return {code, dump_report(j)};
}

Outcome cmd_sweep(const Config& cfg) {
    if (cfg.sweep.empty()) throw ParameterError("--grid is required");
    const SweepOutput sweep = run_sweep(parse_mode(cfg.mode), parse_grid(cfg.sweep), [&] {
        SearchOptions o = search_options(cfg);
        o.collect_witnesses = false;
        return o;
    }());
    std::string text = sweep_csv_header() + "\n";
    bool all_equal = true;
    bool truncated = false;
    for (const auto& row : sweep.rows) {
        text += sweep_csv_row(row) + "\n";
        all_equal = all_equal && row.equal;
        truncated = truncated || !row.oracle_complete;
    }
    return {truncated ? kBudget : all_equal ? kOk : kMismatch, text};
}

// -- fragments -------------------------------------------------------------

Outcome cmd_fragments(const Config& cfg) {
    const IntersectionGraph g(cfg.n, cfg.k, lspec(cfg));
    if (g.is_complete() || !alpha_nontrivial(g)) {
        Json j;
        j["n"] = cfg.n;
        j["k"] = cfg.k;
        j["L"] = lspec(cfg).values();
        j["alpha"] = "INFEASIBLE";
        return {kInfeasible, dump_report(j)};
    }
    FragmentOptions opts;
    opts.size_cap = cfg.size_cap;
    opts.node_budget = cfg.budget;
    const Side side = cfg.side == "Y" ? Side::Y : Side::X;
    if (cfg.side != "X" && cfg.side != "Y") throw ParameterError("--side must be X or Y");
    const FragmentCensus census = enumerate_fragments(g, side, opts);
    Json j = fragment_report(g, census);
    const TheoremReport equality = verify_theorem_21(g, opts);
    const TheoremReport imprimitive = verify_theorem_23(g, opts);
    j["checks"]["primitive_fragments_force_equality"] = to_json(equality);
    j["checks"]["excess_forces_imprimitive_fragment"] = to_json(imprimitive);
    j["checks"]["closure_violations"] = check_fragment_closure(g, census);
    int code = census.complete ? kOk : kBudget;
    if (equality.verdict == Verdict::Fail || imprimitive.verdict == Verdict::Fail ||
        !j["checks"]["closure_violations"].empty())
        code = kMismatch;
    return {code, dump_report(j)};
}

// -- shadow ----------------------------------------------------------------

Outcome cmd_shadow(const Config& cfg) {
    SetFamily f;
    if (!cfg.family.empty()) {
        f = read_family_file(cfg.family);
    } else {
        const std::uint64_t total = binom_u64(cfg.n, cfg.k);
        std::size_t size = 0;
        if (cfg.size >= 0) {
            size = static_cast<std::size_t>(cfg.size);
        } else {
            std::mt19937_64 rng(cfg.seed);
            size = static_cast<std::size_t>(std::uniform_int_distribution<std::uint64_t>(1, total)(rng));
        }
        f = random_family(cfg.n, cfg.k, size, cfg.seed);
    }
    const int i = cfg.i < 0 ? f.k() - 1 : cfg.i;
    const ShadowCheck c = check_shadow_bound(f, i);
    Json j;
    j["n"] = f.n();
    j["k"] = f.k();
    j["i"] = i;
    j["size"] = c.size;
    j["x"] = c.x;
    j["shadow_size"] = c.shadow_size;
    j["lovasz_lower_bound"] = c.lower_bound;
    j["satisfied"] = c.satisfied;
    j["shadow_x"] = c.shadow_x;
    j["family_upper_bound"] = c.family_bound;
    j["converse_satisfied"] = c.converse_satisfied;
    return {c.satisfied && c.converse_satisfied ? kOk : kMismatch, dump_report(j)};
}

// -- construct -------------------------------------------------------------

Outcome cmd_construct(const Config& cfg) {
    std::vector<SetFamily> families;
    bool valid = false;
    const std::string& which = cfg.which;
    if (which == "pairwise") {
        const LSpec L = lspec(cfg);
        const FamilyTuple t = construct_pairwise_extremal(cfg.n, cfg.k, cfg.r, L);
        families = t.families();
        valid = is_pairwise_cross_L(t, L);
    } else if (which == "rcross_interval") {
        const FamilyTuple t = construct_rcross_extremal(cfg.n, cfg.k, cfg.r, cfg.l, cfg.s);
        families = t.families();
        valid = is_rcross_L(t, LSpec::interval(cfg.l, cfg.s - 1, cfg.k));
    } else {
        std::string upper;
        for (char ch : which) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
        const LSpec L = lspec(cfg);
        std::optional<SetFamily> seed;
        if (!cfg.seed_family.empty()) seed = read_family_file(cfg.seed_family);
        const auto pair = construct_cross2_extremal(cfg.n, cfg.k, L, parse_cross2_variant(upper), seed);
        families = {pair.first, pair.second};
        valid = is_cross_L(pair.first, pair.second, L);
    }
    const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
    Json j;
    j["which"] = which;
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["r"] = families.size();
    j["sizes"] = Json::array();
    j["files"] = Json::array();
    std::size_t total = 0;
    for (std::size_t idx = 0; idx < families.size(); ++idx) {
        const fs::path file = dir / ("family_" + std::to_string(idx + 1) + ".json");
        write_family_file(file, families[idx]);
        j["sizes"].push_back(families[idx].size());
        j["files"].push_back(file.string());
        total += families[idx].size();
    }
    j["total"] = total;
    j["valid"] = valid;
    return {valid ? kOk : kMismatch, dump_report(j)};
}

// -- driver ----------------------------------------------------------------

Outcome cached(const std::string& command, const Config& cfg, Outcome (*run)(const Config&)) {
    if (cfg.cache_dir.empty()) return run(cfg);
    const ResultCache cache(cfg.cache_dir);
    const Json key = params(command, cfg);
    if (const auto hit = cache.load(command, key)) {
        const Json entry = Json::parse(*hit);
        return {entry.at("exit_code").get<int>(), entry.at("report").get<std::string>()};
    }
    Outcome result = run(cfg);
    Json entry;
    entry["exit_code"] = result.code;
    entry["report"] = result.text;
    cache.store(command, key, entry.dump());
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds, exact oracles and fragment censuses for cross L-intersecting families"};
    app.require_subcommand(1);
    Config cfg;

    auto* bound = app.add_subcommand("bound", "evaluate a closed-form maximum");
    add_common(bound, cfg);
    bound->add_option("--which", cfg.which,
                      "mode (default), ekr, product, two-uniformities, pairwise-intersecting, pairwise-t, "
                      "max-t-intersecting, rcross-t, rcross-interval");
    bound->add_option("--a", cfg.a, "first uniformity (two-uniformities)");
    bound->add_option("--b", cfg.b, "second uniformity (two-uniformities)");
    bound->add_option("--t", cfg.t, "intersection threshold");
    bound->add_option("--l", cfg.l, "lower end of the interval [l, s-1]");
    bound->add_option("--s", cfg.s, "one past the upper end of [l, s-1]");

    auto* search = app.add_subcommand("search", "exact maximum with extremal witnesses");
    add_common(search, cfg);
    search->add_flag("--no-witnesses", cfg.no_witnesses, "skip the witness census");

    auto* verify = app.add_subcommand("verify", "compare the oracle with the closed form");
    add_common(verify, cfg);
    verify->add_option("--sweep", cfg.sweep, "grid such as \"n=4..8,k=2..3,L=all\"");
    verify->add_flag("--no-witness-check", cfg.no_witness_check, "skip the extremal characterization");

    auto* fragments = app.add_subcommand("fragments", "fragment census of the conflict graph");
    add_common(fragments, cfg);
    fragments->add_option("--size-cap", cfg.size_cap, "largest fragment examined (0: no cap)")->capture_default_str();
    fragments->add_option("--side", cfg.side, "X or Y")->capture_default_str();

    auto* shadow = app.add_subcommand("shadow", "check the Lovász shadow inequality");
    add_common(shadow, cfg);
    shadow->add_option("--family", cfg.family, "family file; random family when absent");
    shadow->add_option("--i", cfg.i, "shadow order (default k-1)");
    shadow->add_option("--size", cfg.size, "random family size (default random)");

    auto* construct = app.add_subcommand("construct", "write an extremal configuration as family files");
    add_common(construct, cfg);
    construct->add_option("--which", cfg.which, "star_pair, complement_split, star_star, subcube, pair_middle, "
                                                "complement_closed, complete, pairwise, rcross_interval")
        ->required();
    construct->add_option("--l", cfg.l, "lower end of the interval [l, s-1]");
    construct->add_option("--s", cfg.s, "one past the upper end of [l, s-1]");
    construct->add_option("--seed-family", cfg.seed_family, "seed family for complement_split / complement_closed");

    auto* sweep = app.add_subcommand("sweep", "CSV of bound versus oracle over a grid");
    add_common(sweep, cfg);
    sweep->add_option("--grid", cfg.sweep, "grid such as \"n=4..8,k=2..3,L=all\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInvalid;
    }

    Outcome result;
    try {
        if (*bound)
            result = cached("bound", cfg, cmd_bound);
        else if (*search)
            result = cached("search", cfg, cmd_search);
        else if (*verify)
            result = cached("verify", cfg, cmd_verify);
        else if (*fragments)
            result = cached("fragments", cfg, cmd_fragments);
        else if (*shadow)
            result = cmd_shadow(cfg);
        else if (*construct)
            result = cmd_construct(cfg);
        else if (*sweep)
            result = cached("sweep", cfg, cmd_sweep);
    } catch (const UnsupportedL& e) {
        std::cerr << "unsupported L: " << e.what() << "\n";
        return kInvalid;
    } catch (const ParameterError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }

    if (!cfg.out.empty() && !*construct)
        write_atomic(cfg.out, result.text);
    else
        std::cout << result.text;
    return result.code;
}
