#include "sdskit/compress.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sdskit {

CompressionSpec make_compression_spec(int v, int d) {
    if (v < 1 || d < 1) fail(errc::bad_input, "lengths must be positive");
    if (v % d != 0) fail(errc::not_divisible, "d does not divide v");
    int m = v / d;
    if (m < 2) fail(errc::bad_input, "compression factor must be at least 2");
    return CompressionSpec{v, d, m};
}

long long Content::length() const {
    long long n = 0;
    for (auto& [value, count] : entries) n += count;
    return n;
}

long long Content::count(Value value) const {
    auto it = entries.find(value);
    return it == entries.end() ? 0 : it->second;
}

Content& Content::add(Value value, long long count) {
    if (count < 0) fail(errc::bad_input, "negative content count");
    if (count > 0) entries[value] += count;
    return *this;
}

Content Content::of(const Sequence& a) {
    Content c;
    for (Value x : a.values) ++c.entries[x];
    return c;
}

std::string to_string(const Content& c) {
    std::ostringstream os;
    bool first = true;
    for (auto& [value, count] : c.entries) {
        if (!first) os << ',';
        os << value << ':' << count;
        first = false;
    }
    return os.str();
}

Content parse_content(const std::string& text) {
    Content c;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::size_t colon = text.find(':', pos);
        if (colon == std::string::npos || colon >= comma)
            fail(errc::bad_input, "content entry must be value:count");
        long long value = 0, count = 0;
        auto r1 = std::from_chars(text.data() + pos, text.data() + colon, value);
        auto r2 = std::from_chars(text.data() + colon + 1, text.data() + comma, count);
        if (r1.ec != std::errc{} || r1.ptr != text.data() + colon || r2.ec != std::errc{} ||
            r2.ptr != text.data() + comma || count <= 0)
            fail(errc::bad_input, "malformed content entry");
        if (c.entries.contains(value)) fail(errc::bad_input, "repeated content value");
        c.entries[value] = count;
        pos = comma + 1;
    }
    if (c.entries.empty()) fail(errc::bad_input, "empty content");
    return c;
}

Sequence compress(const Sequence& a, int d) {
    if (d < 1) fail(errc::bad_input, "d must be positive");
    if (a.v % d != 0) fail(errc::not_divisible, "d does not divide the sequence length");
    const int m = a.v / d;
    Sequence out;
    out.v = d;
    out.values.assign(d, 0);
    for (int j = 0; j < d; ++j)
        for (int r = 0; r < m; ++r) out.values[j] += a.values[j + r * d];
    return out;
}

std::pair<long long, long long> compressed_constants(long long alpha0, long long alpha, int m) {
    return {alpha0 + (long long)(m - 1) * alpha, (long long)m * alpha};
}

std::pair<long long, long long> sds_compressed_constants(const SdsParams& p, int m) {
    if (m < 1 || p.v % m != 0) fail(errc::not_divisible, "m does not divide v");
    long long base = (long long)p.t() * p.v - 4 * p.n;
    return {(long long)m * base + 4 * p.n, (long long)m * base};
}

CompressedMultiplicities compression_multiplicities(const SdsParams& p, int m, int d) {
    if (m != 2 && m != 3) fail(errc::unsupported_factor, "only factors 2 and 3 are counted");
    if ((long long)d * m != p.v) fail(errc::not_divisible, "v != d*m");
    long long td = (long long)p.t() * d;
    return CompressedMultiplicities{p.n, td - p.n};
}

namespace {

// All contents over `alphabet` with the given length and entry sum.
void enumerate_contents(const std::vector<Value>& alphabet, std::size_t idx, long long left,
                        long long sum_left, Content& acc, std::vector<Content>& out) {
    if (idx + 1 == alphabet.size()) {
        if (left * alphabet[idx] == sum_left) {
            Content c = acc;
            c.add(alphabet[idx], left);
            out.push_back(std::move(c));
        }
        return;
    }
    for (long long take = 0; take <= left; ++take) {
        Content c = acc;
        c.add(alphabet[idx], take);
        enumerate_contents(alphabet, idx + 1, left - take, sum_left - take * alphabet[idx], c, out);
    }
}

std::vector<Content> contents_with_sum(const std::vector<Value>& alphabet, long long length,
                                       long long sum) {
    std::vector<Content> out;
    Content acc;
    enumerate_contents(alphabet, 0, length, sum, acc, out);
    return out;
}

long long small_abs_count(const Content& c, int m) {
    long long total = 0;
    for (auto& [value, count] : c.entries)
        if (std::abs(value) == m - 2) total += count;
    return total;
}

std::vector<long long> count_key(const Content& c, const std::vector<Value>& alphabet) {
    std::vector<long long> key;
    key.reserve(alphabet.size());
    for (Value a : alphabet) key.push_back(c.count(a));
    return key;
}

} // namespace

std::vector<std::pair<Content, Content>> case_split(const SdsParams& p, int m, int d) {
    if (p.t() != 2) fail(errc::unsupported, "case split handles two-block parameters only");
    if (m != 2 && m != 3) fail(errc::unsupported_factor, "only factors 2 and 3 are split");
    if (d < 1) fail(errc::bad_input, "d must be positive");

    std::vector<Value> alphabet; // -m, -(m-2), ..., m-2, m
    for (int x = -m; x <= m; x += 2) alphabet.push_back(x);

    auto as = contents_with_sum(alphabet, d, p.v - 2LL * p.ks[0]);
    auto bs = contents_with_sum(alphabet, d, p.v - 2LL * p.ks[1]);

    std::vector<std::pair<Content, Content>> cases;
    for (const Content& ca : as)
        for (const Content& cb : bs)
            if (small_abs_count(ca, m) + small_abs_count(cb, m) == p.n)
                cases.emplace_back(ca, cb);

    std::sort(cases.begin(), cases.end(), [&](const auto& x, const auto& y) {
        auto kx = count_key(x.second, alphabet), ky = count_key(y.second, alphabet);
        if (kx != ky) return kx < ky;
        return count_key(x.first, alphabet) < count_key(y.first, alphabet);
    });
    return cases;
}

} // namespace sdskit
