#pragma once

#include <cstdint>
#include <vector>

#include "sdskit/enumerate.hpp"

namespace sdskit {

// Absolute slack applied on the PSD bound. Applied permissively (keep on the
// boundary) so exact satisfiers are never discarded; all downstream decisions
// are integer-exact.
inline constexpr double kPsdTol = 1e-6;

// True iff psd(a)[s] <= beta + tol for every s in [1, v).
bool psd_test(const Sequence& a, double beta, double tol = kPsdTol);

std::vector<Sequence> psd_filter(const std::vector<Sequence>& in, double beta,
                                 double tol = kPsdTol);

// PSD test restated on a base block: sum_j N_X(j) cos(2*pi*j*s/v) <= n - k_r + tol
// for all s != 0, with k_r the matching declared block size.
bool subset_psd_test(const Subset& x, const SdsParams& p, double tol = kPsdTol);

struct Candidate {
    Sequence seq;
    PafVector paf;
};

enum class Side { A, B };

// One side of a matching stage: PSD-surviving class representatives with
// cached PAF vectors (side A: charmed canonicals, side B: bracelet canonicals).
struct CandidateSet {
    SdsParams params;
    CompressionSpec spec;
    Content content;
    Side side = Side::A;
    std::vector<Candidate> sequences;
};

// Keeps the first sequence in canonical (lexicographic) order per distinct
// PAF vector.
std::vector<Candidate> dedupe_by_paf(std::vector<Candidate> in);

struct MatchedPair {
    Sequence a, b;
};

// All (A,B) with paf(A)[s] + paf(B)[s] = alpha_d for every s in [1, d),
// via an exact-integer index on the folded PAF complement.
std::vector<MatchedPair> match_pairs(const CandidateSet& as, const CandidateSet& bs,
                                     Value alpha_d);

// All full-length {-1,+1} preimages of a compressed sequence (m in {2,3}).
std::vector<Sequence> lift_preimages(const Sequence& compressed, const CompressionSpec& spec);

// All SDS witnesses among the full-length preimage pairs of a matched
// compressed pair. Every returned block list passes verify_sds.
std::vector<std::vector<Subset>> lift(const MatchedPair& pair, const CompressionSpec& spec,
                                      const SdsParams& p);

// True iff x^2 + y^2 = 2v has a nonnegative integer solution (necessary for
// the existence of binary periodic complementary pairs of length v).
bool diophantine_precheck(int v);

enum class Status { Exists, NotExists, Unknown };

struct CaseReport {
    Content content_a, content_b;
    std::uint64_t enumerated_a = 0, psd_passed_a = 0, deduped_a = 0;
    std::uint64_t enumerated_b = 0, psd_passed_b = 0, deduped_b = 0;
    // Matches between the PAF-deduped candidate sets.
    std::uint64_t matched_pairs = 0;
    // Matches between the undeduped sets (the deduped matches expanded by
    // PAF duplicates); these are the pairs actually lifted, so that no
    // witness class can be lost to deduplication.
    std::uint64_t lifted_pairs = 0;
    std::uint64_t lifted_witnesses = 0;
    double seconds = 0.0;
};

struct SearchReport {
    std::vector<CaseReport> cases;
    double seconds = 0.0;
};

struct ExistenceResult {
    Status status = Status::Unknown;
    std::vector<std::vector<Subset>> witnesses; // normalized, distinct
    SearchReport report;
};

enum class Strategy { Direct, Compress2, Compress3 };

struct SearchOptions {
    Strategy strategy = Strategy::Direct;
    int jobs = 1; // 0 = hardware concurrency
    double tol = kPsdTol;
    // Verification mode for compression strategies: drive the pipeline from
    // these block lists instead of enumerating (status Exists/Unknown only).
    std::vector<std::vector<Subset>> seeds;
};

// Two-block existence decision. Direct: full-length charmed-bracelet A-side
// against bracelet B-side. Compression: case_split -> enumerate -> psd_filter
// -> dedupe -> match -> lift.
ExistenceResult decide_two_block(const SdsParams& p, const SearchOptions& opt);

// Exhaustive verification of every block tuple (t in {1,2}); ground truth for
// small instances. Throws too_large when the pair space exceeds the guard.
std::vector<std::vector<Subset>> direct_search_oracle(const SdsParams& p,
                                                      std::uint64_t pair_guard = 100000000ull);

// Normal form of a witness: per-block least translate/negation, minimized
// lexicographically over simultaneous multiplication by units.
std::vector<Subset> normalize_witness(const std::vector<Subset>& blocks);

} // namespace sdskit
