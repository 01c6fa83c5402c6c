#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crossl/bounds.hpp"
#include "crossl/family.hpp"
#include "crossl/fragments.hpp"
#include "crossl/search.hpp"

namespace crossl {

using Json = nlohmann::ordered_json;

/// Bumped whenever report contents may change; part of every cache key.
inline constexpr const char* kEngineVersion = "1.0.0";

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json count_to_json(const BigCount& c);
BigCount count_from_json(const Json& j);

/// {n, k, sets}: sorted 1-based lists in colex order.
Json family_to_json(const SetFamily& f);
SetFamily family_from_json(const Json& j);
SetFamily read_family_file(const std::filesystem::path& path);
void write_family_file(const std::filesystem::path& path, const SetFamily& f);

Json to_json(const BoundResult& b);
Json to_json(const SearchResult& s);
Json to_json(const CharacterizationReport& c);
Json to_json(const TheoremReport& t);

/// Fragment census with both deficiencies, as the `fragments` command emits it.
Json fragment_report(const IntersectionGraph& g, const FragmentCensus& census);

/// Two spaces of indentation plus a trailing newline.
std::string dump_report(const Json& j);

/// Writes through a temporary file in the same directory, then renames.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// File cache keyed by a hash of (command, canonical parameters, engine version).
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir, std::string version = kEngineVersion);

    std::string key(const std::string& command, const Json& params) const;
    std::optional<std::string> load(const std::string& command, const Json& params) const;
    void store(const std::string& command, const Json& params, const std::string& report) const;

private:
    std::filesystem::path dir_;
    std::string version_;
};

std::uint64_t fnv1a64(const std::string& bytes) noexcept;

struct SweepRow {
    Mode mode = Mode::Cross2;
    int n = 0;
    int k = 0;
    int r = 2;
    std::vector<int> L;
    std::optional<BigCount> bound;   // empty: infeasible
    std::optional<std::size_t> oracle;
    bool oracle_complete = true;
    bool equal = false;
    double runtime_ms = 0.0;
};

/// Column header of the sweep CSV (format version 1).
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);

/// "0,2" or "0..2" style rendering used inside CSV cells and file names.
std::string join_values(const std::vector<int>& values, char sep);

}  // namespace crossl
