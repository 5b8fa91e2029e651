#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace domcert {

struct InputError : std::runtime_error {
    explicit InputError(const std::string &msg) : std::runtime_error(msg) {}
};

struct LimitError : std::runtime_error {
    explicit LimitError(const std::string &msg) : std::runtime_error(msg) {}
};

// FNV-1a, used for fingerprinting reduced systems inside certificates.
struct Fnv1a {
    uint64_t h = 1469598103934665603ULL;
    void feed(const void *data, size_t n) {
        const unsigned char *p = static_cast<const unsigned char *>(data);
        for (size_t i = 0; i < n; i++) {
            h ^= p[i];
            h *= 1099511628211ULL;
        }
    }
    void feed(const std::string &s) {
        feed(s.data(), s.size());
        feed("\x1f", 1);
    }
};

inline int default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Runs fn(i) for i in [0,n) on `workers` threads. Results must be written to
// pre-sized slots so the outcome is independent of scheduling.
inline void parallel_for(int workers, size_t n, const std::function<void(size_t)> &fn) {
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; i++) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    size_t nt = std::min<size_t>(workers, n);
    std::exception_ptr err;
    std::mutex err_mu;
    for (size_t t = 0; t < nt; t++) {
        pool.emplace_back([&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto &th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace domcert
