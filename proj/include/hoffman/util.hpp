#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hoffman {

inline int default_jobs() {
    if (const char* env = std::getenv("HOFFMAN_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// index-ordered parallel map; results are position-stable so downstream
// output does not depend on the schedule
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F&& f, int jobs = 0) {
    using R = decltype(f(items[0]));
    std::vector<R> out(items.size());
    if (jobs <= 0) jobs = default_jobs();
    if (jobs <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
        return out;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = 0;
    std::atomic<std::size_t> next{0};
    (void)chunk;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size()) break;
                out[i] = f(items[i]);
            }
        });
    for (auto& th : pool) th.join();
    return out;
}

} // namespace hoffman
