#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sdskit/search.hpp"

namespace sdskit {

enum class CaseStatus { Exists, NotExists, Open };

// One feasible parameter set with the decision status this catalog knows.
struct ParamRecord {
    SdsParams params;
    bool normalized = true; // v/2 >= r >= s >= 2 for t = 2
    CaseStatus status = CaseStatus::Open;
    std::string provenance;
};

enum class WitnessSource { Builtin, Search };

struct WitnessRecord {
    SdsParams params;
    std::vector<Subset> blocks;
    WitnessSource source = WitnessSource::Search;
    bool verified = false;
};

// All (v; r, s; lambda) with 4 <= v <= v_max, v/2 >= r >= s >= 2 and
// lambda*(v-1) = r(r-1) + s(s-1), sorted by (v, r, s).
std::vector<ParamRecord> feasible_params(int v_max);

// The witnesses shipped with the library (verified at first access).
const std::vector<WitnessRecord>& registry();

// Parses "v;k1,k2,...;lambda", e.g. "46;21,6;10".
SdsParams parse_params_string(const std::string& text);
std::string params_string(const SdsParams& p);

// Witness persistence: one JSON object per line, fields
// {"v": int, "k": [int...], "lambda": int, "blocks": [[int...], ...]}.
std::string witness_json_line(const WitnessRecord& w);
std::vector<WitnessRecord> load_witnesses(const std::string& path);
void save_witnesses(const std::string& path, const std::vector<WitnessRecord>& ws);

void print_report_tables(std::ostream& os, const SdsParams& p, Strategy strategy,
                         const ExistenceResult& r);
std::string report_json(const SdsParams& p, Strategy strategy, const ExistenceResult& r);

// Command-line entry point. Exit codes: 0 success / existence confirmed,
// 1 nonexistence confirmed, 2 unknown or guard hit, 3 input error.
int run_cli(int argc, const char* const* argv);

} // namespace sdskit
