#include "sdskit/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace sdskit {

namespace {

using nlohmann::json;

// Decision statuses this catalog ships for two-block parameter sets,
// keyed by (v, r, s, lambda).
struct KnownStatus {
    int v, r, s;
    long long lambda;
    CaseStatus status;
    const char* provenance;
};

const KnownStatus kKnownStatuses[] = {
    {41, 15, 6, 6, CaseStatus::NotExists, "PSD bound 60 leaves candidates, no complementary pair matches"},
    {43, 9, 4, 2, CaseStatus::NotExists, "no A-side candidate passes the PSD bound 44"},
    {44, 19, 2, 8, CaseStatus::NotExists, "no A-side candidate passes the PSD bound 52"},
    {45, 18, 2, 7, CaseStatus::NotExists, "no A-side candidate passes the PSD bound 52"},
    {46, 21, 6, 10, CaseStatus::NotExists, "exhaustive 2-compression search"},
    {47, 9, 5, 2, CaseStatus::NotExists, "no A-side candidate passes the PSD bound 48"},
    {47, 12, 3, 3, CaseStatus::NotExists, "no A-side candidate passes the PSD bound 48"},
    {47, 14, 2, 4, CaseStatus::NotExists, "no A-side candidate passes the PSD bound 48"},
    {47, 15, 5, 5, CaseStatus::NotExists, "no A-side candidate passes the PSD bound 60"},
    {48, 14, 3, 4, CaseStatus::NotExists, "no A-side candidate passes the PSD bound 52"},
    {49, 10, 3, 2, CaseStatus::NotExists, "no A-side candidate passes the PSD bound 44"},
    {49, 21, 4, 9, CaseStatus::Open, "undecided"},
    {50, 8, 7, 2, CaseStatus::NotExists, "PSD bound 52 leaves candidates, no complementary pair matches"},
    {50, 20, 4, 8, CaseStatus::NotExists, "exhaustive 2-compression search"},
    {50, 22, 21, 18, CaseStatus::Exists, "witnesses in the registry"},
    {58, 27, 24, 22, CaseStatus::Exists, "witnesses in the registry"},
};

WitnessRecord builtin_witness(int v, std::vector<int> ks, long long lambda,
                              std::vector<std::vector<int>> blocks) {
    WitnessRecord w;
    w.params = validate_params(v, std::move(ks), lambda);
    for (auto& b : blocks) w.blocks.push_back(make_subset(v, std::move(b)));
    w.source = WitnessSource::Builtin;
    w.verified = verify_sds(w.params, w.blocks);
    if (!w.verified) fail(errc::corrupt_registry, "shipped witness fails verification");
    return w;
}

std::vector<WitnessRecord> build_registry() {
    std::vector<WitnessRecord> r;
    r.push_back(builtin_witness(
        50, {22, 21}, 18,
        {{0, 1, 2, 3, 6, 7, 9, 13, 14, 16, 18, 20, 22, 23, 26, 27, 30, 35, 37, 41, 45, 46},
         {0, 1, 2, 3, 4, 5, 6, 8, 11, 12, 14, 17, 20, 22, 29, 30, 32, 37, 38, 39, 42}}));
    r.push_back(builtin_witness(
        50, {22, 21}, 18,
        {{0, 1, 2, 3, 4, 6, 7, 8, 9, 14, 16, 18, 20, 21, 25, 31, 32, 35, 36, 42, 44, 45},
         {0, 1, 2, 4, 5, 8, 9, 10, 12, 14, 18, 21, 23, 24, 27, 29, 32, 34, 35, 39, 42}}));
    r.push_back(builtin_witness(
        50, {22, 21}, 18,
        {{0, 1, 2, 3, 5, 8, 9, 11, 14, 15, 19, 21, 24, 25, 29, 30, 32, 36, 38, 39, 41, 43},
         {0, 1, 3, 5, 6, 7, 8, 9, 10, 13, 16, 18, 20, 21, 24, 25, 31, 32, 33, 37, 41}}));
    r.push_back(builtin_witness(
        50, {22, 21}, 18,
        {{0, 2, 3, 4, 6, 9, 10, 12, 13, 17, 19, 20, 24, 25, 28, 29, 30, 33, 38, 39, 41, 47},
         {0, 1, 3, 5, 6, 7, 8, 10, 12, 13, 14, 17, 20, 22, 24, 28, 32, 37, 38, 39, 40}}));
    r.push_back(builtin_witness(
        58, {27, 24}, 22,
        {{0,  1,  2,  3,  4,  7,  8,  10, 11, 12, 13, 16, 18, 20,
          24, 26, 29, 31, 32, 33, 36, 38, 43, 46, 47, 50, 53},
         {0,  1,  2,  3,  7,  8,  10, 11, 12, 13, 16, 17,
          21, 22, 24, 27, 30, 34, 41, 42, 43, 45, 47, 49}}));
    r.push_back(builtin_witness(
        58, {27, 24}, 22,
        {{0,  1,  2,  3,  5,  6,  7,  9,  11, 12, 14, 15, 17, 19,
          23, 24, 25, 26, 29, 32, 33, 39, 40, 43, 45, 48, 52},
         {0,  1,  2,  3,  4,  5,  9,  11, 14, 15, 16, 18,
          22, 26, 27, 31, 32, 34, 37, 39, 41, 42, 45, 51}}));
    r.push_back(builtin_witness(
        58, {27, 24}, 22,
        {{0,  1,  2,  3,  5,  8,  9,  11, 12, 13, 14, 18, 19, 21,
          24, 25, 27, 29, 32, 34, 35, 39, 41, 43, 44, 48, 49},
         {0,  2,  3,  4,  6,  8,  10, 13, 16, 17, 19, 20,
          21, 25, 28, 29, 32, 33, 34, 39, 40, 41, 43, 46}}));
    r.push_back(builtin_witness(
        58, {27, 24}, 22,
        {{0,  2,  3,  4,  6,  7,  8,  10, 11, 14, 16, 17, 18, 20,
          23, 25, 26, 28, 31, 32, 36, 37, 38, 41, 42, 47, 49},
         {0,  1,  2,  3,  5,  8,  9,  10, 12, 16, 17, 18,
          22, 25, 28, 30, 35, 37, 41, 44, 45, 46, 48, 49}}));
    return r;
}

const char* status_name(CaseStatus s) {
    switch (s) {
        case CaseStatus::Exists: return "exists";
        case CaseStatus::NotExists: return "not_exists";
        case CaseStatus::Open: return "open";
    }
    return "?";
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Exists: return "EXISTS";
        case Status::NotExists: return "NOT_EXISTS";
        case Status::Unknown: return "UNKNOWN";
    }
    return "?";
}

json witness_json(const WitnessRecord& w) {
    json j;
    j["v"] = w.params.v;
    j["k"] = w.params.ks;
    j["lambda"] = w.params.lambda;
    json blocks = json::array();
    for (const Subset& b : w.blocks) blocks.push_back(b.elements);
    j["blocks"] = std::move(blocks);
    return j;
}

WitnessRecord witness_from_json(const json& j) {
    if (!j.is_object() || !j.contains("v") || !j.contains("k") || !j.contains("lambda") ||
        !j.contains("blocks"))
        fail(errc::bad_input, "witness object requires v, k, lambda, blocks");
    WitnessRecord w;
    w.params = validate_params(j.at("v").get<int>(), j.at("k").get<std::vector<int>>(),
                               j.at("lambda").get<long long>());
    for (const auto& b : j.at("blocks"))
        w.blocks.push_back(make_subset(w.params.v, b.get<std::vector<int>>()));
    w.source = WitnessSource::Search;
    w.verified = verify_sds(w.params, w.blocks);
    return w;
}

} // namespace

std::vector<ParamRecord> feasible_params(int v_max) {
    if (v_max < 4) fail(errc::bad_input, "v_max must be at least 4");
    std::map<std::tuple<int, int, int, long long>, const KnownStatus*> known;
    for (const auto& k : kKnownStatuses) known[{k.v, k.r, k.s, k.lambda}] = &k;

    std::vector<ParamRecord> out;
    for (int v = 4; v <= v_max; ++v) {
        for (int r = 2; 2 * r <= v; ++r) {
            for (int s = 2; s <= r; ++s) {
                long long num = (long long)r * (r - 1) + (long long)s * (s - 1);
                if (num % (v - 1) != 0) continue;
                ParamRecord rec;
                rec.params = validate_params(v, {r, s}, num / (v - 1));
                rec.normalized = true;
                auto it = known.find({v, r, s, rec.params.lambda});
                if (it != known.end()) {
                    rec.status = it->second->status;
                    rec.provenance = it->second->provenance;
                } else {
                    rec.status = CaseStatus::Open;
                    rec.provenance = "not tracked by this catalog";
                }
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

const std::vector<WitnessRecord>& registry() {
    static const std::vector<WitnessRecord> r = build_registry();
    return r;
}

SdsParams parse_params_string(const std::string& text) {
    std::istringstream is(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(is, part, ';')) parts.push_back(part);
    if (parts.size() != 3) fail(errc::bad_input, "expected \"v;k1,k2,...;lambda\"");
    try {
        std::size_t used = 0;
        int v = std::stoi(parts[0], &used);
        if (used != parts[0].size()) fail(errc::bad_input, "malformed v");
        std::vector<int> ks;
        std::istringstream ks_in(parts[1]);
        std::string k_text;
        while (std::getline(ks_in, k_text, ',')) {
            int k = std::stoi(k_text, &used);
            if (used != k_text.size()) fail(errc::bad_input, "malformed block size");
            ks.push_back(k);
        }
        long long lambda = std::stoll(parts[2], &used);
        if (used != parts[2].size()) fail(errc::bad_input, "malformed lambda");
        return validate_params(v, std::move(ks), lambda);
    } catch (const std::invalid_argument&) {
        fail(errc::bad_input, "malformed parameter string");
    } catch (const std::out_of_range&) {
        fail(errc::bad_input, "parameter out of range");
    }
}

std::string params_string(const SdsParams& p) {
    std::ostringstream os;
    os << '(' << p.v << ';';
    for (int i = 0; i < p.t(); ++i) {
        if (i) os << ',';
        os << p.ks[(std::size_t)i];
    }
    os << ';' << p.lambda << ')';
    return os.str();
}

std::string witness_json_line(const WitnessRecord& w) { return witness_json(w).dump(); }

std::vector<WitnessRecord> load_witnesses(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "cannot open " + path);
    std::vector<WitnessRecord> out;
    std::string line;
    std::string whole;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        whole += line;
        whole += '\n';
    }
    // Accept one object per line, a single object, or an array of objects.
    try {
        json j = json::parse(whole);
        if (j.is_array())
            for (const auto& e : j) out.push_back(witness_from_json(e));
        else
            out.push_back(witness_from_json(j));
        return out;
    } catch (const json::parse_error&) {
        // fall through to line-by-line
    }
    std::istringstream is(whole);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(witness_from_json(json::parse(line)));
        } catch (const json::parse_error& e) {
            fail(errc::bad_input, std::string("bad witness line: ") + e.what());
        }
    }
    return out;
}

void save_witnesses(const std::string& path, const std::vector<WitnessRecord>& ws) {
    std::ofstream out(path);
    if (!out) fail(errc::bad_input, "cannot write " + path);
    for (const auto& w : ws) out << witness_json_line(w) << '\n';
}

void print_report_tables(std::ostream& os, const SdsParams& p, Strategy strategy,
                         const ExistenceResult& r) {
    const char* strat = strategy == Strategy::Direct     ? "direct"
                        : strategy == Strategy::Compress2 ? "compress2"
                                                          : "compress3";
    os << "search " << params_string(p) << " strategy=" << strat << "\n";
    os << "A-sequences (charmed bracelets)\n";
    os << "  case  content                  enumerated      psd-pass\n";
    for (std::size_t i = 0; i < r.report.cases.size(); ++i) {
        const auto& c = r.report.cases[i];
        std::ostringstream content;
        content << to_string(c.content_a);
        os << "  " << i + 1 << "     " << content.str();
        for (std::size_t pad = content.str().size(); pad < 25; ++pad) os << ' ';
        os << c.enumerated_a << "\t" << c.psd_passed_a << "\n";
    }
    os << "B-sequences (ordinary bracelets)\n";
    os << "  case  content                  enumerated      psd-pass\n";
    for (std::size_t i = 0; i < r.report.cases.size(); ++i) {
        const auto& c = r.report.cases[i];
        std::ostringstream content;
        content << to_string(c.content_b);
        os << "  " << i + 1 << "     " << content.str();
        for (std::size_t pad = content.str().size(); pad < 25; ++pad) os << ' ';
        os << c.enumerated_b << "\t" << c.psd_passed_b << "\n";
    }
    os << "matching (arrow = PAF dedup)\n";
    os << "  case  A-sequences     B-sequences     pairs\n";
    for (std::size_t i = 0; i < r.report.cases.size(); ++i) {
        const auto& c = r.report.cases[i];
        os << "  " << i + 1 << "     " << c.psd_passed_a << " -> " << c.deduped_a << "\t"
           << c.psd_passed_b << " -> " << c.deduped_b << "\t" << c.matched_pairs << "\n";
    }
    std::uint64_t pairs = 0, full_pairs = 0, lifted = 0;
    for (const auto& c : r.report.cases) {
        pairs += c.matched_pairs;
        full_pairs += c.lifted_pairs;
        lifted += c.lifted_witnesses;
    }
    os << "lifting: " << pairs << " deduped pairs (" << full_pairs
       << " with PAF duplicates restored) -> " << lifted << " verified witnesses\n";
    os << "witness classes: " << r.witnesses.size() << "\n";
    os << "status: " << status_name(r.status) << "\n";
    os << "elapsed: " << r.report.seconds << " s\n";
}

std::string report_json(const SdsParams& p, Strategy strategy, const ExistenceResult& r) {
    json j;
    j["params"] = params_string(p);
    j["strategy"] = strategy == Strategy::Direct     ? "direct"
                    : strategy == Strategy::Compress2 ? "compress2"
                                                      : "compress3";
    j["status"] = status_name(r.status);
    j["seconds"] = r.report.seconds;
    json cases = json::array();
    for (const auto& c : r.report.cases) {
        json cj;
        cj["content_a"] = to_string(c.content_a);
        cj["content_b"] = to_string(c.content_b);
        cj["enumerated_a"] = c.enumerated_a;
        cj["psd_passed_a"] = c.psd_passed_a;
        cj["deduped_a"] = c.deduped_a;
        cj["enumerated_b"] = c.enumerated_b;
        cj["psd_passed_b"] = c.psd_passed_b;
        cj["deduped_b"] = c.deduped_b;
        cj["matched_pairs"] = c.matched_pairs;
        cj["lifted_pairs"] = c.lifted_pairs;
        cj["lifted_witnesses"] = c.lifted_witnesses;
        cj["seconds"] = c.seconds;
        cases.push_back(std::move(cj));
    }
    j["cases"] = std::move(cases);
    json ws = json::array();
    for (const auto& blocks : r.witnesses) {
        WitnessRecord w;
        w.params = p;
        w.blocks = blocks;
        ws.push_back(witness_json(w));
    }
    j["witnesses"] = std::move(ws);
    return j.dump(2);
}

namespace {

int cli_params(int v_max, const std::string& status_filter) {
    auto records = feasible_params(v_max);
    std::size_t shown = 0;
    for (const auto& rec : records) {
        if (!status_filter.empty() && status_filter != status_name(rec.status)) continue;
        ++shown;
        std::cout << params_string(rec.params) << " n=" << rec.params.n << " status="
                  << status_name(rec.status) << "  # " << rec.provenance << "\n";
    }
    if (status_filter.empty())
        std::cout << records.size() << " parameter sets\n";
    else
        std::cout << shown << " of " << records.size() << " parameter sets\n";
    return 0;
}

int cli_verify(const std::string& path) {
    auto ws = load_witnesses(path);
    bool all_ok = true;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        std::cout << "record " << i + 1 << " " << params_string(ws[i].params) << ": "
                  << (ws[i].verified ? "ok" : "FAIL") << "\n";
        all_ok = all_ok && ws[i].verified;
    }
    std::cout << (all_ok ? "all witnesses verify" : "verification failures present") << "\n";
    return all_ok ? 0 : 2;
}

int cli_compress(const std::string& path, int m) {
    auto ws = load_witnesses(path);
    for (const auto& w : ws) {
        if (w.params.v % m != 0) fail(errc::not_divisible, "m does not divide v");
        const int d = w.params.v / m;
        json j;
        j["v"] = w.params.v;
        j["d"] = d;
        j["m"] = m;
        j["verified"] = w.verified;
        json seqs = json::array();
        for (const Subset& b : w.blocks)
            seqs.push_back(compress(associated_sequence(b), d).values);
        j["compressed"] = std::move(seqs);
        auto [a0, a] = sds_compressed_constants(w.params, m);
        j["paf_constants"] = {{"alpha0", a0}, {"alpha", a}};
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int cli_enumerate(int length, const std::string& content_text, const std::string& mode_text,
                  bool count_only) {
    Content content = parse_content(content_text);
    if (content.length() != length)
        fail(errc::bad_input, "content length differs from --length");
    EquivMode mode;
    if (mode_text == "necklace")
        mode = EquivMode::Necklace;
    else if (mode_text == "bracelet")
        mode = EquivMode::Bracelet;
    else if (mode_text == "charmed")
        mode = EquivMode::Charmed;
    else
        fail(errc::bad_input, "mode must be necklace, bracelet or charmed");

    if (count_only) {
        std::cout << count_classes(content, mode) << "\n";
        return 0;
    }
    std::uint64_t total = 0;
    auto print_one = [&](const Sequence& s) {
        ++total;
        for (int i = 0; i < s.v; ++i) {
            if (i) std::cout << ',';
            std::cout << s.values[(std::size_t)i];
        }
        std::cout << '\n';
        return true;
    };
    switch (mode) {
        case EquivMode::Necklace: necklaces(content, print_one); break;
        case EquivMode::Bracelet: bracelets(content, print_one); break;
        case EquivMode::Charmed: charmed_bracelets(content, print_one); break;
    }
    std::cerr << total << " classes\n";
    return 0;
}

int cli_search(const std::string& params_text, const std::string& strategy_text, int jobs,
               const std::string& out_path) {
    SdsParams p = parse_params_string(params_text);
    SearchOptions opt;
    if (strategy_text == "direct")
        opt.strategy = Strategy::Direct;
    else if (strategy_text == "compress2")
        opt.strategy = Strategy::Compress2;
    else if (strategy_text == "compress3")
        opt.strategy = Strategy::Compress3;
    else
        fail(errc::bad_input, "strategy must be direct, compress2 or compress3");
    opt.jobs = jobs;

    auto result = decide_two_block(p, opt);
    print_report_tables(std::cout, p, opt.strategy, result);
    for (const auto& blocks : result.witnesses) {
        WitnessRecord w;
        w.params = p;
        w.blocks = blocks;
        w.verified = true;
        std::cout << witness_json_line(w) << "\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) fail(errc::bad_input, "cannot write " + out_path);
        out << report_json(p, opt.strategy, result) << "\n";
    }
    switch (result.status) {
        case Status::Exists: return 0;
        case Status::NotExists: return 1;
        case Status::Unknown: return 2;
    }
    return 2;
}

int cli_registry(bool reverify) {
    for (const auto& w : registry()) {
        if (reverify) {
            bool ok = verify_sds(w.params, w.blocks);
            std::cout << params_string(w.params) << ": " << (ok ? "ok" : "FAIL") << "\n";
            if (!ok) return 2;
        } else {
            std::cout << witness_json_line(w) << "\n";
        }
    }
    if (reverify) std::cout << registry().size() << " witnesses verify\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"supplementary difference set toolkit"};
    app.require_subcommand(1);

    auto* params_cmd = app.add_subcommand("params", "list feasible parameter sets");
    int v_max = 50;
    std::string status_filter;
    params_cmd->add_option("--vmax", v_max, "largest v to include")->required();
    params_cmd->add_option("--status", status_filter,
                           "filter by status: open, exists, not_exists");

    auto* verify_cmd = app.add_subcommand("verify", "verify witnesses from a JSON file");
    std::string verify_path;
    verify_cmd->add_option("file", verify_path, "witness file")->required();

    auto* compress_cmd = app.add_subcommand("compress", "compress witnesses from a JSON file");
    std::string compress_path;
    int factor = 2;
    compress_cmd->add_option("file", compress_path, "witness file")->required();
    compress_cmd->add_option("--m", factor, "compression factor")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "stream fixed-content classes");
    int length = 0;
    std::string content_text, mode_text = "necklace";
    bool count_only = false;
    enum_cmd->add_option("--length", length, "word length")->required();
    enum_cmd->add_option("--content", content_text, "content, e.g. -2:3,0:6,2:14")->required();
    enum_cmd->add_option("--mode", mode_text, "necklace|bracelet|charmed")->required();
    enum_cmd->add_flag("--count-only", count_only, "print only the class count");

    auto* search_cmd = app.add_subcommand("search", "decide a two-block parameter set");
    std::string params_text, strategy_text, out_path;
    int jobs = 0;
    search_cmd->add_option("--params", params_text, "parameter string \"v;r,s;lambda\"")
        ->required();
    search_cmd->add_option("--strategy", strategy_text, "direct|compress2|compress3")->required();
    search_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    search_cmd->add_option("--out", out_path, "write a JSON report");

    auto* registry_cmd = app.add_subcommand("registry", "print or verify shipped witnesses");
    bool reverify = false;
    registry_cmd->add_flag("--verify", reverify, "re-verify every shipped witness");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (params_cmd->parsed()) return cli_params(v_max, status_filter);
        if (verify_cmd->parsed()) return cli_verify(verify_path);
        if (compress_cmd->parsed()) return cli_compress(compress_path, factor);
        if (enum_cmd->parsed()) return cli_enumerate(length, content_text, mode_text, count_only);
        if (search_cmd->parsed()) return cli_search(params_text, strategy_text, jobs, out_path);
        if (registry_cmd->parsed()) return cli_registry(reverify);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

} // namespace sdskit
