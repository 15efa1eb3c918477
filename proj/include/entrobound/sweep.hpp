#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "entrobound/core.hpp"

namespace entrobound {

struct SweepSpec {
    std::string variable;
    double start = 0.0;
    double stop = 0.0;
    std::size_t points = 2;
    bool log_spaced = false;

    void validate() const {
        if (!(start < stop)) throw ValidationError("sweep: start must be below stop");
        if (points < 2) throw ValidationError("sweep: need at least 2 points");
        if (log_spaced && start <= 0.0)
            throw ValidationError("sweep: log spacing requires positive start");
    }

    std::vector<double> values() const {
        validate();
        std::vector<double> v(points);
        if (log_spaced) {
            const double la = std::log(start), lb = std::log(stop);
            for (std::size_t i = 0; i < points; ++i)
                v[i] = std::exp(la + (lb - la) * static_cast<double>(i) /
                                         static_cast<double>(points - 1));
        } else {
            for (std::size_t i = 0; i < points; ++i)
                v[i] = start + (stop - start) * static_cast<double>(i) /
                                   static_cast<double>(points - 1);
        }
        v.front() = start;
        v.back() = stop;
        return v;
    }
};

inline std::size_t thread_budget(std::size_t jobs) {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("ENTROBOUND_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    }
    return std::max<std::size_t>(1, std::min(n, jobs));
}

// Evaluate fn(i) for i in [0, jobs); results land in input order no matter
// which thread finishes first.
template <typename T>
std::vector<T> parallel_map(std::size_t jobs, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(jobs);
    const std::size_t workers = thread_budget(jobs);
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < jobs; i += workers) out[i] = fn(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

// Bisection root of f on [lo, hi]; requires a sign change on the bracket.
inline std::optional<double> bisect(const std::function<double(double)>& f, double lo, double hi,
                                    double xtol = 1e-6, int max_iter = 200) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
    for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace entrobound
