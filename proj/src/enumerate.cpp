#include "sdskit/enumerate.hpp"

#include <algorithm>
#include <condition_variable>
#include <cstring>
#include <mutex>
#include <numeric>
#include <thread>

namespace sdskit {

namespace {

struct Alphabet {
    std::vector<Value> letters; // ascending
    std::vector<long long> counts;
    int n = 0; // word length

    explicit Alphabet(const Content& content) {
        for (auto& [value, count] : content.entries) {
            if (count <= 0) continue;
            letters.push_back(value);
            counts.push_back(count);
            n += (int)count;
        }
        if (letters.empty()) fail(errc::bad_input, "empty content");
    }
};

// Index maps i -> (s*i) mod n for the multipliers the mode quotients by
// beyond plain rotation: s = n-1 for bracelets, every unit s != 1 for
// charmed bracelets.
std::vector<std::vector<int>> multiplier_maps(int n, EquivMode mode) {
    std::vector<std::vector<int>> maps;
    if (mode == EquivMode::Necklace) return maps;
    for (int s = 2; s < n; ++s) {
        if (mode == EquivMode::Bracelet && s != n - 1) continue;
        if (std::gcd(s, n) != 1) continue;
        std::vector<int> map(n);
        for (int i = 0; i < n; ++i) map[i] = (int)((long long)s * i % n);
        maps.push_back(std::move(map));
    }
    return maps;
}

// True if some rotation of the doubled word mm (length 2n) is strictly
// lex-less than w. w[0] must be the minimal symbol of the content.
bool any_rotation_less(const std::uint8_t* mm, const std::uint8_t* w, int n) {
    const std::uint8_t w0 = w[0];
    for (int c = 0; c < n; ++c) {
        if (mm[c] != w0) continue; // mm[c] > w0: rotation is larger from position 0
        int i = 1;
        while (i < n && mm[c + i] == w[i]) ++i;
        if (i < n && mm[c + i] < w[i]) return true;
    }
    return false;
}

// w must be a necklace representative (lex-least rotation). Checks whether it
// is also the lex-least element under the mode's full group. scratch: 2n bytes.
bool is_class_rep(const std::uint8_t* w, int n, const std::vector<std::vector<int>>& maps,
                  std::uint8_t* scratch) {
    for (const auto& map : maps) {
        for (int i = 0; i < n; ++i) scratch[i] = w[map[i]];
        std::memcpy(scratch + n, scratch, (std::size_t)n);
        if (any_rotation_less(scratch, w, n)) return false;
    }
    return true;
}

// Fixed-content necklace generation: backtracking over prenecklace prefixes,
// emitting a[1..n] when the prefix period divides n (the classic recursive
// scheme behind the fixed-content generators of Sawada et al.).
struct NecklaceGen {
    int n = 0;
    int k = 0;
    std::vector<long long> counts;
    std::vector<std::uint8_t> word; // 1-indexed, word[0] unused
    const std::function<bool(const std::uint8_t*)>* emit = nullptr;
    bool stopped = false;

    void run(const Alphabet& alpha, const std::function<bool(const std::uint8_t*)>& fn) {
        n = alpha.n;
        k = (int)alpha.letters.size();
        counts = alpha.counts;
        word.assign((std::size_t)n + 1, 0);
        emit = &fn;
        stopped = false;
        word[1] = 0;
        --counts[0];
        rec(2, 1);
        ++counts[0];
    }

    void rec(int t, int p) {
        if (t > n) {
            if (n % p == 0) stopped = !(*emit)(word.data() + 1);
            return;
        }
        for (int j = word[t - p]; j < k; ++j) {
            if (counts[j] == 0) continue;
            --counts[j];
            word[t] = (std::uint8_t)j;
            rec(t + 1, j == word[t - p] ? p : t);
            ++counts[j];
            if (stopped) return;
        }
    }
};

void serial_stream(const Content& content, EquivMode mode, const SequenceVisitor& visit) {
    Alphabet alpha(content);
    const int n = alpha.n;
    auto maps = multiplier_maps(n, mode);
    std::vector<std::uint8_t> scratch((std::size_t)2 * n);
    Sequence seq;
    seq.v = n;
    seq.values.resize(n);

    NecklaceGen gen;
    gen.run(alpha, [&](const std::uint8_t* w) {
        if (!is_class_rep(w, n, maps, scratch.data())) return true;
        for (int i = 0; i < n; ++i) seq.values[i] = alpha.letters[w[i]];
        return visit(seq);
    });
}

struct BatchQueue {
    std::mutex mu;
    std::condition_variable cv_push, cv_pop;
    std::vector<std::vector<std::uint8_t>> items;
    bool done = false;
    std::size_t cap = 32;

    void push(std::vector<std::uint8_t> batch) {
        std::unique_lock lk(mu);
        cv_push.wait(lk, [&] { return items.size() < cap; });
        items.push_back(std::move(batch));
        cv_pop.notify_one();
    }
    bool pop(std::vector<std::uint8_t>& out) {
        std::unique_lock lk(mu);
        cv_pop.wait(lk, [&] { return !items.empty() || done; });
        if (items.empty()) return false;
        out = std::move(items.back());
        items.pop_back();
        cv_push.notify_one();
        return true;
    }
    void finish() {
        std::lock_guard lk(mu);
        done = true;
        cv_pop.notify_all();
    }
};

} // namespace

Sequence orbit_canonical(const Sequence& a, EquivMode mode) {
    const int n = a.v;
    if (n == 0) fail(errc::bad_input, "empty sequence");
    std::vector<int> mults{1};
    if (mode != EquivMode::Necklace) {
        for (int s = 2; s < n; ++s) {
            if (mode == EquivMode::Bracelet && s != n - 1) continue;
            if (std::gcd(s, n) == 1) mults.push_back(s);
        }
    }
    std::vector<Value> best = a.values, cand(n);
    for (int s : mults) {
        for (int c = 0; c < n; ++c) {
            for (int i = 0; i < n; ++i) cand[i] = a.values[(int)(((long long)s * i + c) % n)];
            if (cand < best) best = cand;
        }
    }
    Sequence out;
    out.v = n;
    out.values = std::move(best);
    return out;
}

void necklaces(const Content& content, const SequenceVisitor& visit) {
    serial_stream(content, EquivMode::Necklace, visit);
}

void bracelets(const Content& content, const SequenceVisitor& visit) {
    serial_stream(content, EquivMode::Bracelet, visit);
}

void charmed_bracelets(const Content& content, const SequenceVisitor& visit) {
    serial_stream(content, EquivMode::Charmed, visit);
}

std::vector<Sequence> collect_classes(const Content& content, EquivMode mode) {
    std::vector<Sequence> out;
    serial_stream(content, mode, [&](const Sequence& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

void for_each_class(const Content& content, EquivMode mode, int jobs,
                    const std::function<void(std::span<const Value>, unsigned worker)>& visit) {
    Alphabet alpha(content);
    const int n = alpha.n;

    if (jobs <= 1) {
        auto maps = multiplier_maps(n, mode);
        std::vector<std::uint8_t> scratch((std::size_t)2 * n);
        std::vector<Value> vals(n);
        NecklaceGen gen;
        gen.run(alpha, [&](const std::uint8_t* w) {
            if (is_class_rep(w, n, maps, scratch.data())) {
                for (int i = 0; i < n; ++i) vals[i] = alpha.letters[w[i]];
                visit(std::span<const Value>(vals.data(), (std::size_t)n), 0);
            }
            return true;
        });
        return;
    }

    const std::size_t batch_words = 8192;
    BatchQueue queue;
    std::vector<std::thread> workers;
    workers.reserve((std::size_t)jobs);
    for (int wk = 0; wk < jobs; ++wk) {
        workers.emplace_back([&, wk] {
            auto maps = multiplier_maps(n, mode);
            std::vector<std::uint8_t> scratch((std::size_t)2 * n);
            std::vector<Value> vals(n);
            std::vector<std::uint8_t> batch;
            while (queue.pop(batch)) {
                const std::size_t count = batch.size() / (std::size_t)n;
                for (std::size_t i = 0; i < count; ++i) {
                    const std::uint8_t* w = batch.data() + i * (std::size_t)n;
                    if (!is_class_rep(w, n, maps, scratch.data())) continue;
                    for (int j = 0; j < n; ++j) vals[j] = alpha.letters[w[j]];
                    visit(std::span<const Value>(vals.data(), (std::size_t)n), (unsigned)wk);
                }
            }
        });
    }

    {
        std::vector<std::uint8_t> batch;
        batch.reserve(batch_words * (std::size_t)n);
        NecklaceGen gen;
        gen.run(alpha, [&](const std::uint8_t* w) {
            batch.insert(batch.end(), w, w + n);
            if (batch.size() >= batch_words * (std::size_t)n) {
                queue.push(std::move(batch));
                batch = {};
                batch.reserve(batch_words * (std::size_t)n);
            }
            return true;
        });
        if (!batch.empty()) queue.push(std::move(batch));
        queue.finish();
    }
    for (auto& th : workers) th.join();
}

std::uint64_t count_classes(const Content& content, EquivMode mode, int jobs) {
    if (jobs <= 1) {
        std::uint64_t total = 0;
        for_each_class(content, mode, 1, [&](std::span<const Value>, unsigned) { ++total; });
        return total;
    }
    std::vector<std::uint64_t> per((std::size_t)jobs, 0);
    for_each_class(content, mode, jobs,
                   [&](std::span<const Value>, unsigned worker) { ++per[worker]; });
    std::uint64_t total = 0;
    for (auto c : per) total += c;
    return total;
}

} // namespace sdskit
