#pragma once
// Small shared utilities: deterministic RNG helpers, a chunked parallel_for
// driven by COVERCODE_THREADS, and the FNV-1a digest used in run manifests.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace covercode {

using Rng = std::mt19937_64;

// Uniform integer in [0, n) by rejection. std::uniform_int_distribution is not
// specified bit-exactly across standard libraries; this is.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

inline unsigned thread_count() {
    if (const char* env = std::getenv("COVERCODE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (hw > 8 ? 8 : hw);
}

// Runs fn(worker, begin, end) over [0, n) split into contiguous chunks.
// Workers must only write worker-local state; callers merge afterwards with
// order-independent reductions so results do not depend on the thread count.
inline void parallel_for(std::uint64_t n,
                         const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    const unsigned workers = n == 0 ? 1 : static_cast<unsigned>(std::min<std::uint64_t>(thread_count(), n));
    if (workers <= 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t b = w * chunk;
        const std::uint64_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back(fn, w, b, e);
    }
    for (auto& t : pool) t.join();
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
    const std::uint64_t h = fnv1a64(bytes.data(), bytes.size());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace covercode
