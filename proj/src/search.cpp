#include "sdskit/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstring>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <thread>

namespace sdskit {

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

// Evaluates PSD bins from an exact PAF vector of a real sequence:
// psd(s) = paf[0] + sum_{j>=1} paf[j] cos(2 pi j s / v), folded over the
// symmetry paf[v-j] = paf[j]. Bins s and v-s coincide, so s <= v/2 suffices.
struct PsdEvaluator {
    int v;
    std::vector<double> cosv;

    explicit PsdEvaluator(int v_) : v(v_), cosv((std::size_t)v_) {
        for (int j = 0; j < v; ++j) cosv[(std::size_t)j] = std::cos(2.0 * std::numbers::pi * j / v);
    }

    bool passes(const Value* pafv, double bound) const {
        const int half = v / 2;
        for (int s = 1; s <= half; ++s) {
            double acc = (double)pafv[0];
            for (int j = 1; 2 * j < v; ++j)
                acc += 2.0 * (double)pafv[j] * cosv[(std::size_t)((long long)j * s % v)];
            if (v % 2 == 0) acc += (double)pafv[half] * cosv[(std::size_t)((long long)half * s % v)];
            if (acc > bound) return false;
        }
        return true;
    }
};

void paf_folded(std::span<const Value> vals, const Value* doubled, Value* out) {
    const int d = (int)vals.size();
    for (int s = 0; s <= d / 2; ++s) {
        Value acc = 0;
        for (int j = 0; j < d; ++j) acc += doubled[j] * doubled[j + s];
        out[s] = acc;
        out[(d - s) % d] = acc;
    }
}

struct CollectResult {
    std::uint64_t enumerated = 0;
    std::vector<Candidate> passed;
};

// Enumerates the mode's class representatives of `content` and keeps the
// PSD survivors with their PAF vectors. Deterministic: survivors sorted.
CollectResult collect_candidates(const Content& content, EquivMode mode, double bound, int jobs) {
    const int d = (int)content.length();
    const int nw = std::max(1, jobs);
    std::vector<CollectResult> per((std::size_t)nw);
    std::vector<std::vector<Value>> paf_buf((std::size_t)nw, std::vector<Value>((std::size_t)d));
    std::vector<std::vector<Value>> dbl_buf((std::size_t)nw, std::vector<Value>((std::size_t)2 * d));
    PsdEvaluator eval(d);

    for_each_class(content, mode, jobs, [&](std::span<const Value> vals, unsigned wk) {
        auto& acc = per[wk];
        ++acc.enumerated;
        auto& dbl = dbl_buf[wk];
        std::copy(vals.begin(), vals.end(), dbl.begin());
        std::copy(vals.begin(), vals.end(), dbl.begin() + d);
        auto& pafv = paf_buf[wk];
        paf_folded(vals, dbl.data(), pafv.data());
        if (eval.passes(pafv.data(), bound)) {
            Candidate c;
            c.seq.v = d;
            c.seq.values.assign(vals.begin(), vals.end());
            c.paf = PafVector{d, pafv};
            acc.passed.push_back(std::move(c));
        }
    });

    CollectResult merged;
    for (auto& p : per) {
        merged.enumerated += p.enumerated;
        std::move(p.passed.begin(), p.passed.end(), std::back_inserter(merged.passed));
    }
    std::sort(merged.passed.begin(), merged.passed.end(),
              [](const Candidate& x, const Candidate& y) { return x.seq < y.seq; });
    return merged;
}

std::uint64_t rotr_bits(std::uint64_t x, int s, int v) {
    if (s == 0) return x;
    const std::uint64_t mask = v == 64 ? ~0ull : ((1ull << v) - 1);
    return ((x >> s) | (x << (v - s))) & mask;
}

// paf(s) of the {-1,+1} sequence encoded as bits (bit i set <=> value -1).
inline int paf_bits(std::uint64_t x, int s, int v) {
    return v - 2 * std::popcount(x ^ rotr_bits(x, s, v));
}

// All preimage bit masks of one compressed sequence (m in {2,3}).
std::vector<std::uint64_t> preimage_masks(const Sequence& comp, const CompressionSpec& spec) {
    const int d = spec.d, m = spec.m;
    if (comp.v != d) fail(errc::bad_input, "compressed length differs from spec.d");
    if (spec.v > 64) fail(errc::too_large, "lifting supports lengths up to 64");
    if (m != 2 && m != 3) fail(errc::unsupported_factor, "lifting supports factors 2 and 3");

    std::uint64_t base = 0;
    std::vector<int> branch_pos;
    for (int j = 0; j < d; ++j) {
        const Value c = comp.values[(std::size_t)j];
        if (m == 2) {
            if (c == -2)
                base |= (1ull << j) | (1ull << (j + d));
            else if (c == 0)
                branch_pos.push_back(j);
            else if (c != 2)
                fail(errc::alphabet_mismatch, "entry outside the 2-compressed alphabet");
        } else {
            if (c == -3)
                base |= (1ull << j) | (1ull << (j + d)) | (1ull << (j + 2 * d));
            else if (c == 1 || c == -1)
                branch_pos.push_back(j);
            else if (c != 3)
                fail(errc::alphabet_mismatch, "entry outside the 3-compressed alphabet");
        }
    }

    const int branch_factor = m == 2 ? 2 : 3;
    double total = 1.0;
    for (std::size_t i = 0; i < branch_pos.size(); ++i) total *= branch_factor;
    if (total > (double)(1ull << 26)) fail(errc::too_large, "preimage space too large");

    std::vector<std::uint64_t> masks{base};
    for (int j : branch_pos) {
        std::vector<std::uint64_t> next;
        next.reserve(masks.size() * (std::size_t)branch_factor);
        if (m == 2) {
            for (std::uint64_t x : masks) {
                next.push_back(x | (1ull << j));
                next.push_back(x | (1ull << (j + d)));
            }
        } else {
            const std::uint64_t b0 = 1ull << j, b1 = 1ull << (j + d), b2 = 1ull << (j + 2 * d);
            const bool plus = comp.values[(std::size_t)j] == 1;
            for (std::uint64_t x : masks) {
                if (plus) { // exactly one -1 among the three positions
                    next.push_back(x | b0);
                    next.push_back(x | b1);
                    next.push_back(x | b2);
                } else { // exactly two
                    next.push_back(x | b0 | b1);
                    next.push_back(x | b0 | b2);
                    next.push_back(x | b1 | b2);
                }
            }
        }
        masks = std::move(next);
    }
    return masks;
}

Subset subset_from_mask(std::uint64_t mask, int v) {
    Subset x;
    x.v = v;
    for (int i = 0; i < v; ++i)
        if ((mask >> i) & 1) x.elements.push_back(i);
    return x;
}

} // namespace

bool psd_test(const Sequence& a, double beta, double tol) {
    if (tol < 0) fail(errc::bad_input, "tolerance must be nonnegative");
    auto p = paf(a);
    PsdEvaluator eval(a.v);
    return eval.passes(p.values.data(), beta + tol);
}

std::vector<Sequence> psd_filter(const std::vector<Sequence>& in, double beta, double tol) {
    std::vector<Sequence> out;
    for (const Sequence& a : in)
        if (psd_test(a, beta, tol)) out.push_back(a);
    return out;
}

bool subset_psd_test(const Subset& x, const SdsParams& p, double tol) {
    if (x.v != p.v) fail(errc::bad_input, "subset modulus differs from v");
    long long k = -1;
    for (int ki : p.ks)
        if (ki == x.k()) k = ki;
    if (k < 0) fail(errc::block_size_mismatch, "no declared block size matches |X|");
    auto norm = subset_norm(x);
    const int v = p.v;
    const double bound = (double)(p.n - k) + tol;
    std::vector<double> cosv((std::size_t)v);
    for (int j = 0; j < v; ++j) cosv[(std::size_t)j] = std::cos(2.0 * std::numbers::pi * j / v);
    for (int s = 1; s <= v / 2; ++s) {
        double acc = 0.0;
        for (int j = 1; j < v; ++j)
            acc += (double)norm.values[(std::size_t)j] * cosv[(std::size_t)((long long)j * s % v)];
        if (acc > bound) return false;
    }
    return true;
}

std::vector<Candidate> dedupe_by_paf(std::vector<Candidate> in) {
    std::sort(in.begin(), in.end(),
              [](const Candidate& x, const Candidate& y) { return x.seq < y.seq; });
    std::set<std::vector<Value>> seen;
    std::vector<Candidate> out;
    for (auto& c : in)
        if (seen.insert(c.paf.values).second) out.push_back(std::move(c));
    return out;
}

std::vector<MatchedPair> match_pairs(const CandidateSet& as, const CandidateSet& bs,
                                     Value alpha_d) {
    std::vector<MatchedPair> out;
    if (as.sequences.empty() || bs.sequences.empty()) return out;
    const int d = as.sequences.front().seq.v;
    const int h = d / 2;

    std::map<std::vector<Value>, std::vector<std::size_t>> index;
    for (std::size_t i = 0; i < as.sequences.size(); ++i) {
        const auto& pafv = as.sequences[i].paf.values;
        std::vector<Value> key(pafv.begin() + 1, pafv.begin() + 1 + h);
        index[std::move(key)].push_back(i);
    }
    std::vector<Value> want((std::size_t)h);
    for (const Candidate& b : bs.sequences) {
        for (int s = 1; s <= h; ++s) want[(std::size_t)s - 1] = alpha_d - b.paf.values[(std::size_t)s];
        auto it = index.find(want);
        if (it == index.end()) continue;
        for (std::size_t i : it->second) out.push_back({as.sequences[i].seq, b.seq});
    }
    return out;
}

std::vector<Sequence> lift_preimages(const Sequence& compressed, const CompressionSpec& spec) {
    auto masks = preimage_masks(compressed, spec);
    std::vector<Sequence> out;
    out.reserve(masks.size());
    for (std::uint64_t mask : masks) {
        Sequence s;
        s.v = spec.v;
        s.values.assign((std::size_t)spec.v, 1);
        for (int i = 0; i < spec.v; ++i)
            if ((mask >> i) & 1) s.values[(std::size_t)i] = -1;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<Subset>> lift(const MatchedPair& pair, const CompressionSpec& spec,
                                      const SdsParams& p) {
    if (p.t() != 2) fail(errc::unsupported, "lift handles two-block parameters only");
    if (p.v != spec.v) fail(errc::bad_input, "parameter v differs from spec.v");

    auto masks_a = preimage_masks(pair.a, spec);
    auto masks_b = preimage_masks(pair.b, spec);

    const int v = spec.v;
    const int h = v / 2;
    const Value alpha = (long long)p.t() * v - 4 * p.n;

    const bool a_small = masks_a.size() <= masks_b.size();
    const auto& small = a_small ? masks_a : masks_b;
    const auto& large = a_small ? masks_b : masks_a;

    std::map<std::vector<std::int32_t>, std::vector<std::uint64_t>> index;
    {
        std::vector<std::int32_t> key((std::size_t)h);
        for (std::uint64_t x : small) {
            for (int s = 1; s <= h; ++s) key[(std::size_t)s - 1] = (std::int32_t)paf_bits(x, s, v);
            index[key].push_back(x);
        }
    }

    std::vector<std::vector<Subset>> witnesses;
    std::vector<std::int32_t> want((std::size_t)h);
    for (std::uint64_t y : large) {
        for (int s = 1; s <= h; ++s)
            want[(std::size_t)s - 1] = (std::int32_t)(alpha - paf_bits(y, s, v));
        auto it = index.find(want);
        if (it == index.end()) continue;
        for (std::uint64_t x : it->second) {
            const std::uint64_t mask_a = a_small ? x : y;
            const std::uint64_t mask_b = a_small ? y : x;
            Subset xa = subset_from_mask(mask_a, v);
            Subset xb = subset_from_mask(mask_b, v);
            if (xa.k() != p.ks[0] || xb.k() != p.ks[1]) continue;
            std::vector<Subset> blocks{std::move(xa), std::move(xb)};
            if (verify_sds(p, blocks)) witnesses.push_back(std::move(blocks));
        }
    }
    return witnesses;
}

bool diophantine_precheck(int v) {
    if (v < 1) fail(errc::bad_input, "v must be positive");
    const long long target = 2LL * v;
    for (long long x = 0; x * x <= target; ++x) {
        long long rest = target - x * x;
        long long y = (long long)std::llround(std::sqrt((double)rest));
        for (long long yy = std::max(0LL, y - 1); yy <= y + 1; ++yy)
            if (yy * yy == rest) return true;
    }
    return false;
}

std::vector<Subset> normalize_witness(const std::vector<Subset>& blocks) {
    if (blocks.empty()) fail(errc::bad_input, "no blocks");
    const int v = blocks.front().v;
    for (const Subset& b : blocks)
        if (b.v != v) fail(errc::bad_input, "mixed moduli");

    auto min_translate = [v](std::vector<int> xs) {
        std::sort(xs.begin(), xs.end());
        std::vector<int> best, cur(xs.size());
        for (int e : xs) {
            for (std::size_t i = 0; i < xs.size(); ++i) cur[i] = mod_v(xs[i] - e, v);
            std::sort(cur.begin(), cur.end());
            if (best.empty() || cur < best) best = cur;
        }
        return best;
    };

    std::vector<std::vector<int>> best_blocks;
    for (int s = 1; s < v; ++s) {
        if (std::gcd(s, v) != 1) continue;
        std::vector<std::vector<int>> cand;
        cand.reserve(blocks.size());
        for (const Subset& b : blocks) {
            std::vector<int> mul(b.elements.size());
            for (std::size_t i = 0; i < b.elements.size(); ++i)
                mul[i] = (int)((long long)s * b.elements[i] % v);
            std::vector<int> neg(mul.size());
            for (std::size_t i = 0; i < mul.size(); ++i) neg[i] = mod_v(-(long long)mul[i], v);
            auto c1 = min_translate(mul);
            auto c2 = min_translate(neg);
            cand.push_back(std::min(c1, c2));
        }
        if (best_blocks.empty() || cand < best_blocks) best_blocks = std::move(cand);
    }

    std::vector<Subset> out;
    out.reserve(blocks.size());
    for (auto& e : best_blocks) out.push_back(Subset{v, std::move(e)});
    return out;
}

namespace {

unsigned long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > (1ull << 62) / (unsigned long long)(n - k + i)) return ~0ull; // saturate
        r = r * (unsigned long long)(n - k + i) / (unsigned long long)i;
    }
    return r;
}

template <typename Fn>
void for_each_subset(int v, int k, Fn&& fn) {
    std::vector<int> idx((std::size_t)k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[(std::size_t)i] == v - k + i) --i;
        if (i < 0) break;
        ++idx[(std::size_t)i];
        for (int j = i + 1; j < k; ++j) idx[(std::size_t)j] = idx[(std::size_t)j - 1] + 1;
    }
}

std::vector<Value> norm_counts(const std::vector<int>& elements, int v) {
    std::vector<Value> counts((std::size_t)v, 0);
    for (int a : elements)
        for (int b : elements) ++counts[(std::size_t)mod_v((long long)a - b, v)];
    return counts;
}

} // namespace

std::vector<std::vector<Subset>> direct_search_oracle(const SdsParams& p,
                                                      std::uint64_t pair_guard) {
    if (p.t() != 1 && p.t() != 2)
        fail(errc::unsupported, "oracle handles one or two blocks only");
    unsigned long long space = 1;
    for (int k : p.ks) {
        unsigned long long c = binom(p.v, k);
        if (c == ~0ull || space > pair_guard / std::max(1ull, c))
            fail(errc::too_large, "candidate space exceeds the guard");
        space *= c;
    }
    if (space > pair_guard) fail(errc::too_large, "candidate space exceeds the guard");

    std::vector<std::vector<Subset>> found;
    const int v = p.v;

    if (p.t() == 1) {
        for_each_subset(v, p.ks[0], [&](const std::vector<int>& xs) {
            auto counts = norm_counts(xs, v);
            for (int c = 1; c < v; ++c)
                if (counts[(std::size_t)c] != p.lambda) return;
            found.push_back({Subset{v, xs}});
        });
        return found;
    }

    // Two blocks: hold the smaller side's norm vectors, stream the larger.
    const bool b_small = binom(v, p.ks[1]) <= binom(v, p.ks[0]);
    const int k_small = b_small ? p.ks[1] : p.ks[0];
    const int k_large = b_small ? p.ks[0] : p.ks[1];

    std::vector<std::vector<int>> small_sets;
    std::vector<std::vector<Value>> small_norms;
    for_each_subset(v, k_small, [&](const std::vector<int>& xs) {
        small_sets.push_back(xs);
        small_norms.push_back(norm_counts(xs, v));
    });

    for_each_subset(v, k_large, [&](const std::vector<int>& ys) {
        auto ycounts = norm_counts(ys, v);
        for (std::size_t i = 0; i < small_sets.size(); ++i) {
            bool ok = true;
            for (int c = 1; c < v; ++c) {
                if (ycounts[(std::size_t)c] + small_norms[i][(std::size_t)c] != p.lambda) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            Subset large{v, ys}, small{v, small_sets[i]};
            if (b_small)
                found.push_back({large, small});
            else
                found.push_back({small, large});
        }
    });
    return found;
}

namespace {

std::vector<std::vector<Subset>> unique_normalized(std::vector<std::vector<Subset>> raw) {
    std::set<std::vector<Subset>> seen;
    std::vector<std::vector<Subset>> out;
    for (auto& blocks : raw) {
        auto norm = normalize_witness(blocks);
        if (seen.insert(norm).second) out.push_back(norm);
    }
    return out;
}

ExistenceResult run_direct(const SdsParams& p, int jobs, double tol) {
    const int v = p.v;
    const long long beta = 4 * p.n;
    const Value alpha = 2LL * v - 4 * p.n;
    const double t0 = now_seconds();

    Content content_a, content_b;
    content_a.add(-1, p.ks[0]).add(1, v - p.ks[0]);
    content_b.add(-1, p.ks[1]).add(1, v - p.ks[1]);

    CaseReport rep;
    rep.content_a = content_a;
    rep.content_b = content_b;

    ExistenceResult result;
    const CompressionSpec identity{v, v, 1};

    auto a_side = collect_candidates(content_a, EquivMode::Charmed, (double)beta + tol, jobs);
    rep.enumerated_a = a_side.enumerated;
    rep.psd_passed_a = rep.deduped_a = a_side.passed.size();

    std::vector<std::vector<Subset>> raw;
    if (!a_side.passed.empty()) {
        auto b_side = collect_candidates(content_b, EquivMode::Bracelet, (double)beta + tol, jobs);
        rep.enumerated_b = b_side.enumerated;
        rep.psd_passed_b = rep.deduped_b = b_side.passed.size();

        CandidateSet as{p, identity, content_a, Side::A, std::move(a_side.passed)};
        CandidateSet bs{p, identity, content_b, Side::B, std::move(b_side.passed)};
        auto pairs = match_pairs(as, bs, alpha);
        rep.matched_pairs = rep.lifted_pairs = pairs.size();

        for (const MatchedPair& mp : pairs) {
            Subset xa{v, {}}, xb{v, {}};
            for (int i = 0; i < v; ++i) {
                if (mp.a.values[(std::size_t)i] == -1) xa.elements.push_back(i);
                if (mp.b.values[(std::size_t)i] == -1) xb.elements.push_back(i);
            }
            std::vector<Subset> blocks{std::move(xa), std::move(xb)};
            if (verify_sds(p, blocks)) raw.push_back(std::move(blocks));
        }
    }

    rep.lifted_witnesses = raw.size();
    result.witnesses = unique_normalized(std::move(raw));
    rep.seconds = now_seconds() - t0;
    result.report.cases.push_back(std::move(rep));
    result.report.seconds = result.report.cases.back().seconds;
    result.status = result.witnesses.empty() ? Status::NotExists : Status::Exists;
    return result;
}

ExistenceResult run_compress(const SdsParams& p, int m, int jobs, double tol,
                             const std::vector<std::vector<Subset>>& seeds) {
    if (p.v % m != 0) fail(errc::not_divisible, "compression factor does not divide v");
    const int d = p.v / m;
    const CompressionSpec spec = make_compression_spec(p.v, d);
    const long long beta = 4 * p.n;
    const Value alpha_d = sds_compressed_constants(p, m).second;
    const double t0 = now_seconds();

    ExistenceResult result;
    std::vector<std::vector<Subset>> raw;

    if (!seeds.empty()) {
        for (const auto& blocks : seeds) {
            const double tc0 = now_seconds();
            if ((int)blocks.size() != 2) fail(errc::bad_input, "seeds must have two blocks");
            MatchedPair mp{compress(associated_sequence(blocks[0]), d),
                           compress(associated_sequence(blocks[1]), d)};
            CaseReport rep;
            rep.content_a = Content::of(mp.a);
            rep.content_b = Content::of(mp.b);
            rep.matched_pairs = rep.lifted_pairs = 1;
            auto lifted = lift(mp, spec, p);
            rep.lifted_witnesses = lifted.size();
            std::move(lifted.begin(), lifted.end(), std::back_inserter(raw));
            rep.seconds = now_seconds() - tc0;
            result.report.cases.push_back(std::move(rep));
        }
        result.witnesses = unique_normalized(std::move(raw));
        result.status = result.witnesses.empty() ? Status::Unknown : Status::Exists;
        result.report.seconds = now_seconds() - t0;
        return result;
    }

    auto cases = case_split(p, m, d);
    for (const auto& [content_a, content_b] : cases) {
        const double tc0 = now_seconds();
        CaseReport rep;
        rep.content_a = content_a;
        rep.content_b = content_b;

        auto a_side = collect_candidates(content_a, EquivMode::Charmed, (double)beta + tol, jobs);
        rep.enumerated_a = a_side.enumerated;
        rep.psd_passed_a = a_side.passed.size();
        auto b_side = collect_candidates(content_b, EquivMode::Bracelet, (double)beta + tol, jobs);
        rep.enumerated_b = b_side.enumerated;
        rep.psd_passed_b = b_side.passed.size();

        auto a_dedup = dedupe_by_paf(a_side.passed);
        auto b_dedup = dedupe_by_paf(b_side.passed);
        rep.deduped_a = a_dedup.size();
        rep.deduped_b = b_dedup.size();

        if (!a_dedup.empty() && !b_dedup.empty()) {
            CandidateSet as{p, spec, content_a, Side::A, std::move(a_dedup)};
            CandidateSet bs{p, spec, content_b, Side::B, std::move(b_dedup)};
            rep.matched_pairs = match_pairs(as, bs, alpha_d).size();

            // Lift over the undeduped sets: two candidates with equal PAF are
            // interchangeable for matching but not for lifting.
            CandidateSet as_full{p, spec, content_a, Side::A, std::move(a_side.passed)};
            CandidateSet bs_full{p, spec, content_b, Side::B, std::move(b_side.passed)};
            auto pairs = match_pairs(as_full, bs_full, alpha_d);
            rep.lifted_pairs = pairs.size();
            for (const MatchedPair& mp : pairs) {
                auto lifted = lift(mp, spec, p);
                rep.lifted_witnesses += lifted.size();
                std::move(lifted.begin(), lifted.end(), std::back_inserter(raw));
            }
        }
        rep.seconds = now_seconds() - tc0;
        result.report.cases.push_back(std::move(rep));
    }

    result.witnesses = unique_normalized(std::move(raw));
    result.status = result.witnesses.empty() ? Status::NotExists : Status::Exists;
    result.report.seconds = now_seconds() - t0;
    return result;
}

} // namespace

ExistenceResult decide_two_block(const SdsParams& p, const SearchOptions& opt) {
    if (p.t() != 2) fail(errc::unsupported, "two-block parameters required");
    int jobs = opt.jobs;
    if (jobs <= 0) jobs = (int)std::max(1u, std::thread::hardware_concurrency());
    switch (opt.strategy) {
        case Strategy::Direct:
            return run_direct(p, jobs, opt.tol);
        case Strategy::Compress2:
            return run_compress(p, 2, jobs, opt.tol, opt.seeds);
        case Strategy::Compress3:
            return run_compress(p, 3, jobs, opt.tol, opt.seeds);
    }
    fail(errc::bad_input, "unknown strategy");
}

} // namespace sdskit
