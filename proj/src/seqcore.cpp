#include "sdskit/seqcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sdskit {

Subset make_subset(int v, std::vector<int> elements) {
    if (v < 1) fail(errc::bad_input, "subset modulus must be positive");
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 0 || elements[i] >= v)
            fail(errc::out_of_range, "subset element outside [0, v)");
        if (i > 0 && elements[i] == elements[i - 1])
            fail(errc::bad_input, "repeated subset element");
    }
    return Subset{v, std::move(elements)};
}

PafVector paf(const Sequence& a) {
    const int v = a.v;
    PafVector r{v, std::vector<Value>(v, 0)};
    for (int s = 0; s < v; ++s) {
        Value acc = 0;
        for (int j = 0; j < v; ++j) acc += a.values[(j + s) % v] * a.values[j];
        r.values[s] = acc;
    }
    return r;
}

namespace {

std::vector<std::complex<double>> roots_of_unity(int v) {
    std::vector<std::complex<double>> w(v);
    for (int k = 0; k < v; ++k) {
        double ang = 2.0 * std::numbers::pi * k / v;
        w[k] = {std::cos(ang), std::sin(ang)};
    }
    return w;
}

std::vector<std::complex<double>> dft_values(const std::vector<Value>& vals) {
    const int v = (int)vals.size();
    auto w = roots_of_unity(v);
    std::vector<std::complex<double>> out(v);
    for (int s = 0; s < v; ++s) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < v; ++j) acc += (double)vals[j] * w[(int)((long long)j * s % v)];
        out[s] = acc;
    }
    return out;
}

} // namespace

std::vector<std::complex<double>> dft(const Sequence& a) { return dft_values(a.values); }

std::vector<std::complex<double>> dft(const PafVector& a) { return dft_values(a.values); }

SpectrumVector psd(const Sequence& a) {
    auto b = dft(a);
    SpectrumVector r{a.v, std::vector<double>(a.v)};
    for (int s = 0; s < a.v; ++s) r.values[s] = std::norm(b[s]);
    return r;
}

PafVector subset_norm(const Subset& x) {
    const int v = x.v;
    PafVector r{v, std::vector<Value>(v, 0)};
    for (int a : x.elements)
        for (int b : x.elements) ++r.values[mod_v((long long)a - b, v)];
    return r;
}

Sequence associated_sequence(const Subset& x) {
    Sequence a;
    a.v = x.v;
    a.values.assign(x.v, 1);
    for (int e : x.elements) a.values[e] = -1;
    return a;
}

SdsParams validate_params(int v, std::vector<int> ks, long long lambda) {
    if (v < 2) fail(errc::bad_input, "v must be at least 2");
    if (ks.empty()) fail(errc::bad_input, "at least one block size required");
    long long sum_k = 0, sum_kk = 0;
    for (int k : ks) {
        if (k < 1) fail(errc::bad_input, "block sizes must be positive");
        if (k > v) fail(errc::out_of_range, "block size exceeds v");
        sum_k += k;
        sum_kk += (long long)k * (k - 1);
    }
    if (lambda * (v - 1) != sum_kk)
        fail(errc::infeasible_params, "lambda*(v-1) != sum k_i*(k_i-1)");
    long long n = sum_k - lambda;
    if (n < 0) fail(errc::infeasible_params, "derived n is negative");
    return SdsParams{v, std::move(ks), lambda, n};
}

ConstantsPair sds_constants(const SdsParams& p) {
    ConstantsPair c;
    c.alpha0 = (long long)p.t() * p.v;
    c.alpha = c.alpha0 - 4 * p.n;
    auto [b0, b] = paf_to_psd_constants(c.alpha0, c.alpha, p.v);
    c.beta0 = b0;
    c.beta = b;
    return c;
}

std::pair<long long, long long> paf_to_psd_constants(long long alpha0, long long alpha, int v) {
    return {alpha0 + (long long)(v - 1) * alpha, alpha0 - alpha};
}

std::pair<long long, long long> psd_to_paf_constants(long long beta0, long long beta, int v) {
    long long diff = beta0 - beta;
    if (diff % v != 0) fail(errc::inverse_not_integral, "beta0 - beta not divisible by v");
    long long alpha = diff / v;
    return {beta + alpha, alpha};
}

bool verify_sds(const SdsParams& p, const std::vector<Subset>& blocks) {
    if ((int)blocks.size() != p.t())
        fail(errc::block_size_mismatch, "block count differs from parameter t");
    for (int i = 0; i < p.t(); ++i) {
        if (blocks[i].v != p.v) fail(errc::bad_input, "block modulus differs from v");
        if (blocks[i].k() != p.ks[i])
            fail(errc::block_size_mismatch, "block size differs from declared k_i");
    }
    std::vector<Value> diffs(p.v, 0);
    for (const Subset& x : blocks)
        for (int a : x.elements)
            for (int b : x.elements) ++diffs[mod_v((long long)a - b, p.v)];
    for (int c = 1; c < p.v; ++c)
        if (diffs[c] != p.lambda) return false;
    return true;
}

} // namespace sdskit
