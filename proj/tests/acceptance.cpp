// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
//   acceptance [--tier fast|slow|all] [--jobs N]
//
// The slow tier holds the (43;9,4;2) full direct-space scan; everything else
// runs in the fast tier.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sdskit/catalog.hpp"

using namespace sdskit;

namespace {

int g_jobs = 0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename T>
std::multiset<T> ms(std::initializer_list<T> xs) {
    return std::multiset<T>(xs);
}

std::string join_counts(const std::multiset<std::uint64_t>& xs) {
    std::ostringstream os;
    for (auto x : xs) os << x << " ";
    return os.str();
}

// ---- criterion bodies ------------------------------------------------------

Outcome criterion1_witness_verification() {
    Outcome out;
    const auto& reg = registry();
    out.expect(reg.size() == 8, "expected 8 shipped witnesses");
    int by_params[2] = {0, 0};
    for (const auto& w : reg) {
        out.expect(verify_sds(w.params, w.blocks), "witness fails verify_sds");
        if (w.params.v == 50) ++by_params[0];
        if (w.params.v == 58) ++by_params[1];
    }
    out.expect(by_params[0] == 4 && by_params[1] == 4, "expected 4 + 4 witnesses");
    return out;
}

Outcome criterion2_zero_paf() {
    Outcome out;
    for (const auto& w : registry()) {
        auto pa = paf(associated_sequence(w.blocks[0]));
        auto pb = paf(associated_sequence(w.blocks[1]));
        for (int s = 1; s < w.params.v; ++s)
            out.expect(pa.values[(std::size_t)s] + pb.values[(std::size_t)s] == 0,
                       "nonzero PAF sum at some shift");
    }
    return out;
}

Outcome criterion3_parameter_universe() {
    Outcome out;
    auto records = feasible_params(50);
    out.expect(records.size() == 227,
               "expected 227 records, got " + std::to_string(records.size()));
    std::set<std::string> names;
    for (const auto& rec : records) names.insert(params_string(rec.params));
    for (const char* open_case :
         {"(41;15,6;6)", "(43;9,4;2)", "(44;19,2;8)", "(45;18,2;7)", "(46;21,6;10)",
          "(47;9,5;2)", "(47;12,3;3)", "(47;14,2;4)", "(47;15,5;5)", "(48;14,3;4)",
          "(49;10,3;2)", "(49;21,4;9)", "(50;8,7;2)", "(50;20,4;8)", "(50;22,21;18)"})
        out.expect(names.contains(open_case), std::string("missing ") + open_case);
    return out;
}

Outcome criterion4_full_46_reproduction() {
    Outcome out;
    auto p = validate_params(46, {21, 6}, 10);
    out.expect(case_split(p, 2, 23).size() == 4, "case_split must yield 4 cases");

    SearchOptions opt;
    opt.strategy = Strategy::Compress2;
    opt.jobs = g_jobs;
    auto result = decide_two_block(p, opt);
    const auto& cases = result.report.cases;
    out.expect(cases.size() == 4, "expected 4 case reports");

    std::multiset<std::uint64_t> charmed, a_pass, bracelets, b_pass, matched_live, b_dedup_live;
    std::uint64_t pairs_total = 0, lifted_total = 0;
    for (const auto& c : cases) {
        charmed.insert(c.enumerated_a);
        a_pass.insert(c.psd_passed_a);
        bracelets.insert(c.enumerated_b);
        b_pass.insert(c.psd_passed_b);
        if (c.psd_passed_b > 0) {
            matched_live.insert(c.matched_pairs);
            b_dedup_live.insert(c.deduped_b);
        }
        pairs_total += c.matched_pairs;
        lifted_total += c.lifted_witnesses;
        out.expect(c.deduped_a <= c.psd_passed_a && c.psd_passed_a <= c.enumerated_a,
                   "count monotonicity violated on side A");
        out.expect(c.deduped_b <= c.psd_passed_b && c.psd_passed_b <= c.enumerated_b,
                   "count monotonicity violated on side B");
        if (c.psd_passed_a == 85) out.expect(c.deduped_a == 84, "case-1 A dedup must be 84");
    }
    out.expect(charmed == ms<std::uint64_t>({2116296, 475020, 54264, 3015}),
               "A-side charmed bracelet counts: " + join_counts(charmed));
    out.expect(a_pass == ms<std::uint64_t>({85, 2009, 4552, 1442}),
               "A-side PSD-pass counts: " + join_counts(a_pass));
    out.expect(bracelets == ms<std::uint64_t>({2277, 3685, 1210, 44}),
               "B-side bracelet counts: " + join_counts(bracelets));
    out.expect(b_pass == ms<std::uint64_t>({1749, 1419, 22, 0}),
               "B-side PSD-pass counts: " + join_counts(b_pass));
    out.expect(b_dedup_live == ms<std::uint64_t>({1716, 1419, 22}),
               "B-side dedup counts: " + join_counts(b_dedup_live));
    out.expect(matched_live == ms<std::uint64_t>({39, 34, 0}),
               "matched pairs per live case: " + join_counts(matched_live));
    out.expect(pairs_total == 73, "expected 73 matched pairs in total");
    out.expect(lifted_total == 0, "lifting must produce zero witnesses");
    out.expect(result.status == Status::NotExists, "status must be NOT_EXISTS");
    return out;
}

Outcome criterion5_compression_suite() {
    Outcome out;
    std::mt19937_64 rng(5050);

    auto check_family = [&](const SdsParams& params, const std::vector<Subset>& blocks) {
        auto consts = sds_constants(params);
        for (int m : {2, 3}) {
            if (params.v % m != 0) continue;
            const int d = params.v / m;
            std::vector<Sequence> comp;
            for (const auto& b : blocks) comp.push_back(compress(associated_sequence(b), d));

            std::vector<Value> total((std::size_t)d, 0);
            for (const auto& s : comp) {
                auto pv = paf(s);
                for (int i = 0; i < d; ++i) total[(std::size_t)i] += pv.values[(std::size_t)i];
            }
            auto expected = compressed_constants(consts.alpha0, consts.alpha, m);
            out.expect(expected == sds_compressed_constants(params, m),
                       "theorem-5 constants disagree with the theorem-4 composition");
            out.expect(total[0] == expected.first, "compressed alpha0 mismatch");
            for (int i = 1; i < d; ++i)
                out.expect(total[(std::size_t)i] == expected.second, "compressed alpha mismatch");

            auto mult = compression_multiplicities(params, m, d);
            long long small_count = 0, large_count = 0;
            for (const auto& s : comp)
                for (auto x : s.values) {
                    if (std::llabs(x) == m - 2) ++small_count;
                    if (std::llabs(x) == m) ++large_count;
                }
            out.expect(small_count == mult.num_small && mult.num_small == params.n,
                       "small-entry multiplicity is not n");
            out.expect(large_count == mult.num_large &&
                           mult.num_large == (long long)params.t() * d - params.n,
                       "large-entry multiplicity is not t*d-n");
        }
    };

    for (const auto& w : registry()) check_family(w.params, w.blocks);

    // 100 randomized equivalent families derived from the registry
    for (int it = 0; it < 100; ++it) {
        const auto& w = registry()[(std::size_t)(it % 8)];
        const int v = w.params.v;
        int s;
        do {
            s = 1 + (int)(rng() % (unsigned)(v - 1));
        } while (std::gcd(s, v) != 1);
        std::vector<Subset> moved;
        for (const Subset& b : w.blocks) {
            const int shift = (int)(rng() % (unsigned)v);
            const bool negate = rng() % 2 == 0;
            std::vector<int> xs;
            for (int e : b.elements) {
                long long x = (long long)s * e % v;
                if (negate) x = mod_v(-x, v);
                xs.push_back(mod_v(x + shift, v));
            }
            moved.push_back(make_subset(v, std::move(xs)));
        }
        out.expect(verify_sds(w.params, moved), "transformed family is no longer an SDS");
        check_family(w.params, moved);
    }
    return out;
}

Outcome criterion6_wiener_khinchin_suite() {
    Outcome out;
    std::mt19937_64 rng(6060);
    auto near = [](double x, double y) {
        return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
    };
    for (int it = 0; it < 1000; ++it) {
        const int v = 2 + (int)(rng() % 63);
        Sequence a;
        a.v = v;
        a.values.resize((std::size_t)v);
        for (auto& x : a.values) x = (Value)(rng() % 19) - 9;
        auto direct = psd(a);
        auto via_paf = dft(paf(a));
        for (int s = 0; s < v; ++s)
            out.expect(near(direct.values[(std::size_t)s], via_paf[(std::size_t)s].real()),
                       "psd and dft(paf) disagree beyond 1e-9");
    }
    for (int it = 0; it < 1000; ++it) {
        const int v = 2 + (int)(rng() % 127);
        long long alpha0 = (long long)(rng() % 2000001) - 1000000;
        long long alpha = (long long)(rng() % 2000001) - 1000000;
        auto [beta0, beta] = paf_to_psd_constants(alpha0, alpha, v);
        auto [back0, back] = psd_to_paf_constants(beta0, beta, v);
        out.expect(back0 == alpha0 && back == alpha, "constant conversion fails to round-trip");
    }
    return out;
}

Outcome criterion7_oracle_equivalence() {
    Outcome out;
    auto records = feasible_params(13);
    out.expect(records.size() == 12, "expected 12 feasible sets with v <= 13");
    for (const auto& rec : records) {
        auto raw = direct_search_oracle(rec.params);
        std::set<std::vector<Subset>> want;
        for (const auto& blocks : raw) want.insert(normalize_witness(blocks));

        SearchOptions opt;
        opt.strategy = Strategy::Direct;
        opt.jobs = g_jobs;
        auto result = decide_two_block(rec.params, opt);
        std::set<std::vector<Subset>> got(result.witnesses.begin(), result.witnesses.end());
        out.expect(got == want, "witness sets differ for " + params_string(rec.params));
        out.expect(result.status == (want.empty() ? Status::NotExists : Status::Exists),
                   "status differs for " + params_string(rec.params));
    }
    return out;
}

Outcome criterion8_diophantine() {
    Outcome out;
    out.expect(!diophantine_precheck(54), "v=54 must be infeasible");
    out.expect(!diophantine_precheck(56), "v=56 must be infeasible");
    out.expect(diophantine_precheck(50), "v=50 must be feasible");
    out.expect(diophantine_precheck(52), "v=52 must be feasible");
    out.expect(diophantine_precheck(58), "v=58 must be feasible");
    return out;
}

Outcome criterion9_psd_nonexistence_43() {
    Outcome out;
    // the B-side direct space is fully enumerable
    std::uint64_t subsets = 0;
    for (int a = 0; a < 43; ++a)
        for (int b = a + 1; b < 43; ++b)
            for (int c = b + 1; c < 43; ++c)
                for (int d = c + 1; d < 43; ++d) ++subsets;
    out.expect(subsets == 123410, "C(43,4) enumeration must reach 123410 subsets");

    auto p = validate_params(43, {9, 4}, 2);
    out.expect(4 * p.n == 44, "PSD bound must be 44");
    SearchOptions opt;
    opt.strategy = Strategy::Direct;
    opt.jobs = g_jobs;
    auto result = decide_two_block(p, opt);
    out.expect(result.report.cases.at(0).psd_passed_a == 0,
               "A-side charmed stream must have zero PSD survivors");
    out.expect(result.status == Status::NotExists, "status must be NOT_EXISTS");
    return out;
}

struct Criterion {
    int number;
    const char* tier;
    const char* label;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "fast", "registry witness verification", criterion1_witness_verification},
    {2, "fast", "zero-PAF property of registry pairs", criterion2_zero_paf},
    {3, "fast", "parameter universe v<=50 (227 sets, 15 open cases)", criterion3_parameter_universe},
    {4, "fast", "(46;21,6;10) 2-compression reproduction", criterion4_full_46_reproduction},
    {5, "fast", "compression constants and multiplicities", criterion5_compression_suite},
    {6, "fast", "Wiener-Khinchin and constant conversion", criterion6_wiener_khinchin_suite},
    {7, "fast", "direct pipeline equals brute-force oracle (v<=13)", criterion7_oracle_equivalence},
    {8, "fast", "Diophantine precheck", criterion8_diophantine},
    {9, "slow", "(43;9,4;2) PSD nonexistence over the full space", criterion9_psd_nonexistence_43},
};

} // namespace

int main(int argc, char** argv) {
    std::string tier = "all";
    g_jobs = (int)std::max(1u, std::thread::hardware_concurrency());
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--tier") == 0 && i + 1 < argc) tier = argv[++i];
        else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) g_jobs = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--tier fast|slow|all] [--jobs N]\n";
            return 2;
        }
    }

    int failures = 0, ran = 0;
    for (const auto& c : kCriteria) {
        if (tier != "all" && tier != c.tier) continue;
        ++ran;
        auto t0 = std::chrono::steady_clock::now();
        Outcome out = c.run();
        double secs = seconds_since(t0);
        std::ostringstream line;
        line << "criterion " << c.number << " [" << c.tier << "] " << c.label << ": "
             << (out.pass ? "PASS" : "FAIL") << " (" << secs << " s)";
        if (!out.pass) line << "  -- " << out.detail;
        std::cout << line.str() << std::endl;
        failures += !out.pass;
    }
    std::cout << (ran - failures) << "/" << ran << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
