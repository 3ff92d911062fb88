#include "jacsyz/par.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace jacsyz {

int max_threads() {
    const char* env = std::getenv("JACSYZ_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) return 1;
    if (v > 512) return 512;
    return v;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int nthreads = std::min(max_threads(), n);
    if (nthreads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    for (int w = 0; w < nthreads; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : workers) t.join();
}

}  // namespace jacsyz
