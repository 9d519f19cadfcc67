#include "cyclerange/parallel.hpp"

#include <thread>
#include <vector>

namespace cyclerange {

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, count);
    if (threads == 1 || count < 4) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < count; i += threads) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace cyclerange
