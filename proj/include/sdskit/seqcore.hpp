#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "sdskit/error.hpp"

namespace sdskit {

using Value = std::int64_t;

// Canonical representative of x mod v in [0, v).
inline int mod_v(long long x, int v) {
    long long r = x % v;
    return (int)(r < 0 ? r + v : r);
}

// Periodic integer sequence of length v; values[i] is the coefficient at index i.
struct Sequence {
    int v = 0;
    std::vector<Value> values;

    Sequence() = default;
    explicit Sequence(std::vector<Value> vals) : v((int)vals.size()), values(std::move(vals)) {}

    auto operator<=>(const Sequence&) const = default;
};

// Subset of Z_v; elements strictly increasing, all in [0, v).
struct Subset {
    int v = 0;
    std::vector<int> elements;

    int k() const { return (int)elements.size(); }
    auto operator<=>(const Subset&) const = default;
};

// Sorts and validates; throws on out-of-range or repeated elements.
Subset make_subset(int v, std::vector<int> elements);

// Periodic autocorrelation values, index s <-> shift s. Exact integers.
struct PafVector {
    int v = 0;
    std::vector<Value> values;

    auto operator<=>(const PafVector&) const = default;
};

// Squared DFT magnitudes, index s <-> spectral bin s.
struct SpectrumVector {
    int v = 0;
    std::vector<double> values;
};

// Validated parameter tuple (v; k_1..k_t; lambda) with the derived n = sum(k_i) - lambda.
struct SdsParams {
    int v = 0;
    std::vector<int> ks;
    long long lambda = 0;
    long long n = 0;

    int t() const { return (int)ks.size(); }
    auto operator<=>(const SdsParams&) const = default;
};

// PAF-constants (alpha0 at shift 0, alpha elsewhere) and the matching
// PSD-constants (beta0 at bin 0, beta elsewhere) of a complementary family.
struct ConstantsPair {
    long long alpha0 = 0, alpha = 0;
    long long beta0 = 0, beta = 0;
};

// paf(A)[s] = sum_j a_{(j+s) mod v} * a_j, exact.
PafVector paf(const Sequence& a);

// dft(A)[s] = sum_j a_j w^{js}, w = exp(2*pi*i/v). Direct O(v^2) evaluation.
std::vector<std::complex<double>> dft(const Sequence& a);
std::vector<std::complex<double>> dft(const PafVector& a);

// psd(A)[s] = |dft(A)[s]|^2.
SpectrumVector psd(const Sequence& a);

// subset_norm(X)[s] = #{(a,b) in X*X : a-b = s (mod v)}.
PafVector subset_norm(const Subset& x);

// The {-1,+1} sequence with -1 exactly on the elements of X.
Sequence associated_sequence(const Subset& x);

SdsParams validate_params(int v, std::vector<int> ks, long long lambda);

// alpha0 = t*v, alpha = t*v - 4n, beta = 4n, beta0 = alpha0 + (v-1)*alpha.
ConstantsPair sds_constants(const SdsParams& p);

// beta0 = alpha0 + (v-1)*alpha, beta = alpha0 - alpha.
std::pair<long long, long long> paf_to_psd_constants(long long alpha0, long long alpha, int v);
// Exact inverse; throws inverse_not_integral when v does not divide beta0 - beta.
std::pair<long long, long long> psd_to_paf_constants(long long beta0, long long beta, int v);

// True iff sum_i subset_norm(X_i)[c] = lambda for every c != 0.
bool verify_sds(const SdsParams& p, const std::vector<Subset>& blocks);

} // namespace sdskit
