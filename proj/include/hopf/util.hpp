#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hopf {

// Error taxonomy shared by the whole kernel. The CLI maps kinds onto
// distinct exit codes.
class Error : public std::runtime_error {
public:
    enum class Kind {
        FieldMismatch,
        DivisionByZero,
        Domain,      // bad argument / missing structure (e.g. no antipode)
        Parse,
        Io,
        Bound,       // search space or window bound exceeded
        Validation,  // an axiom check failed where a PASS was required
    };

    Error(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& msg) { throw Error(kind, msg); }

namespace util {

// Worker cap: HOPF_THREADS env var wins, otherwise hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv("HOPF_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Chunked parallel loop. f(i) must be pure w.r.t. shared state except for
// writes to disjoint slots. Results stay deterministic because callers index
// by i.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    int workers = worker_count();
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * chunk;
        if (lo >= n) break;
        std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace util
}  // namespace hopf
