#include "crossl/report.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace crossl {

Json count_to_json(const BigCount& c) {
    if (c >= 0 && c <= BigCount(std::numeric_limits<std::uint64_t>::max())) return Json(static_cast<std::uint64_t>(c));
    return Json(c.str());
}

BigCount count_from_json(const Json& j) {
    if (j.is_number_unsigned()) return BigCount(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigCount(j.get<std::int64_t>());
    if (j.is_string()) return BigCount(j.get<std::string>());
    throw ParameterError("count must be an integer or a decimal string");
}

Json family_to_json(const SetFamily& f) {
    Json j;
    j["n"] = f.n();
    j["k"] = f.k();
    j["sets"] = Json::array();
    for (const auto& set : f.to_lists()) j["sets"].push_back(set);
    return j;
}

SetFamily family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("sets"))
        throw ParameterError("family file needs fields n, k and sets");
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    return SetFamily::from_lists(n, k, j.at("sets").get<std::vector<std::vector<int>>>());
}

SetFamily read_family_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open family file " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParameterError("malformed family file " + path.string() + ": " + e.what());
    }
    return family_from_json(j);
}

void write_family_file(const std::filesystem::path& path, const SetFamily& f) {
    write_atomic(path, dump_report(family_to_json(f)));
}

namespace {

Json optional_count(const std::optional<BigCount>& c) { return c ? count_to_json(*c) : Json("INFEASIBLE"); }

Json tuple_to_json(const FamilyTuple& t) {
    Json out = Json::array();
    for (const auto& f : t.families()) out.push_back(family_to_json(f));
    return out;
}

Json keys_to_json(const std::vector<CanonicalKey>& keys) {
    Json out = Json::array();
    for (const auto& key : keys) out.push_back(key.hex());
    return out;
}

}  // namespace

Json to_json(const BoundResult& b) {
    Json j;
    j["mode"] = to_string(b.mode);
    j["n"] = b.n;
    j["k"] = b.k;
    j["r"] = b.r;
    j["L"] = b.L;
    j["regime"] = b.regime;
    j["value"] = optional_count(b.value);
    j["asymptotic"] = b.asymptotic;
    j["terms"] = Json::array();
    for (const auto& [i, addend] : b.terms) j["terms"].push_back(Json::array({i, count_to_json(addend)}));
    j["extremal_classes"] = b.extremal_classes;
    return j;
}

Json to_json(const SearchResult& s) {
    Json j;
    j["mode"] = to_string(s.mode);
    j["n"] = s.n;
    j["k"] = s.k;
    j["r"] = s.r;
    j["L"] = s.L;
    j["max_sum"] = s.max_sum ? Json(*s.max_sum) : Json("INFEASIBLE");
    j["complete"] = s.complete;
    j["witnesses_complete"] = s.witnesses_complete;
    j["witness_count"] = s.witnesses.size();
    j["witnesses"] = Json::array();
    for (const auto& w : s.witnesses) j["witnesses"].push_back(tuple_to_json(w));
    j["canonical_keys"] = keys_to_json(s.keys);
    return j;
}

Json to_json(const CharacterizationReport& c) {
    Json j;
    j["mode"] = to_string(c.mode);
    j["n"] = c.n;
    j["k"] = c.k;
    j["r"] = c.r;
    j["L"] = c.L;
    j["oracle"] = c.oracle_value ? Json(*c.oracle_value) : Json("INFEASIBLE");
    j["bound"] = optional_count(c.bound_value);
    j["witness_match"] = c.status == WitnessMatch::Unknown ? Json("UNKNOWN") : Json(c.status == WitnessMatch::Match);
    j["theorem_classes"] = c.theorem_classes;
    j["oracle_keys"] = keys_to_json(c.oracle_keys);
    j["theorem_keys"] = keys_to_json(c.theorem_keys);
    j["missing"] = keys_to_json(c.missing);
    j["extra"] = keys_to_json(c.extra);
    j["detail"] = c.detail;
    return j;
}

Json to_json(const TheoremReport& t) {
    Json j;
    j["verdict"] = to_string(t.verdict);
    j["alpha"] = t.alpha;
    j["dX"] = t.degree;
    j["side_size"] = t.side_size;
    j["fragment_count"] = t.fragment_count;
    j["imprimitive_count"] = t.imprimitive_count;
    j["detail"] = t.detail;
    return j;
}

Json fragment_report(const IntersectionGraph& g, const FragmentCensus& census) {
    Json j;
    j["n"] = g.n();
    j["k"] = g.k();
    j["L"] = g.L().values();
    j["alpha"] = census.alpha;
    j["epsilonX"] = epsilon(g, Side::X);
    j["epsilonY"] = epsilon(g, Side::Y);
    j["dX"] = g.degree();
    j["size_cap"] = census.size_cap;
    j["complete"] = census.complete;
    j["fragments"] = Json::array();
    for (const auto& f : census.fragments) {
        Json item;
        item["side"] = to_string(f.side);
        item["size"] = f.vertices.size();
        item["deficiency"] = f.deficiency;
        item["balanced"] = f.balanced;
        item["primitivity"] = to_string(f.primitivity);
        item["vertices"] = family_to_json(f.vertices)["sets"];
        j["fragments"].push_back(std::move(item));
    }
    return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::uint64_t fnv1a64(const std::string& bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {}

std::string ResultCache::key(const std::string& command, const Json& params) const {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(command + '\n' + params.dump() + '\n' + version_);
    return out.str();
}

std::optional<std::string> ResultCache::load(const std::string& command, const Json& params) const {
    std::ifstream in(dir_ / (key(command, params) + ".json"), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void ResultCache::store(const std::string& command, const Json& params, const std::string& report) const {
    write_atomic(dir_ / (key(command, params) + ".json"), report);
}

std::string join_values(const std::vector<int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(values[i]);
    }
    return out;
}

std::string sweep_csv_header() { return "mode,n,k,r,L,bound,oracle,equal,runtime_ms"; }

std::string sweep_csv_row(const SweepRow& row) {
    std::ostringstream out;
    out << to_string(row.mode) << ',' << row.n << ',' << row.k << ',' << row.r << ",\"" << join_values(row.L, ',')
        << "\",";
    out << (row.bound ? row.bound->str() : std::string("INFEASIBLE")) << ',';
    if (!row.oracle_complete)
        out << "TRUNCATED";
    else
        out << (row.oracle ? std::to_string(*row.oracle) : std::string("INFEASIBLE"));
    out << ',' << (row.equal ? "true" : "false") << ',' << std::fixed << std::setprecision(3) << row.runtime_ms;
    return out.str();
}

}  // namespace crossl
