#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sdskit/seqcore.hpp"

namespace sdskit {

// v = d*m with compression factor m >= 2.
struct CompressionSpec {
    int v = 0, d = 0, m = 0;
};

// Throws not_divisible unless d | v; requires v/d >= 2.
CompressionSpec make_compression_spec(int v, int d);

// Multiset of sequence entries: value -> count (positive counts only).
struct Content {
    std::map<Value, long long> entries;

    long long length() const;
    long long count(Value value) const;
    Content& add(Value value, long long count);
    auto operator<=>(const Content&) const = default;

    static Content of(const Sequence& a);
};

std::string to_string(const Content& c);
// Parses "value:count,value:count,..." e.g. "-2:5,0:11,2:7".
Content parse_content(const std::string& text);

// result[j] = sum_{r=0}^{m-1} a[j + r*d] for j in [0, d); m = v/d.
// d = v is the identity. Throws not_divisible when d does not divide v.
Sequence compress(const Sequence& a, int d);

// PAF-constants of the m-compressed family: (alpha0 + (m-1)*alpha, m*alpha).
// PSD-constants are unchanged by compression.
std::pair<long long, long long> compressed_constants(long long alpha0, long long alpha, int m);

// PAF-constants of the compressed associated sequences of an SDS:
// (m*(t*v - 4n) + 4n, m*(t*v - 4n)). Throws not_divisible unless m | v.
std::pair<long long, long long> sds_compressed_constants(const SdsParams& p, int m);

// Entry counts of the compressed family by absolute value:
// num_small counts |a| = m-2, num_large counts |a| = m.
struct CompressedMultiplicities {
    long long num_small = 0; // m=2: zeros, m=3: |a|=1
    long long num_large = 0; // m=2: |a|=2, m=3: |a|=3
};

// m=2: (nu_0, nu_2) = (n, t*d - n); m=3: (nu_1, nu_3) = (n, t*d - n).
// Throws unsupported_factor for m outside {2,3}, not_divisible unless v = d*m.
CompressedMultiplicities compression_multiplicities(const SdsParams& p, int m, int d);

// All content pairs (A-side, B-side) over the m-compressed alphabet of
// length d consistent with the row sums v - 2*k_i and the multiplicity
// coupling (total |value| = m-2 count equals n). Two-block params only.
// Deterministically ordered by the B-side counts (most negative value first).
std::vector<std::pair<Content, Content>> case_split(const SdsParams& p, int m, int d);

} // namespace sdskit
