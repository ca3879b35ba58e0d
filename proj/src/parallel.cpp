#include "dunkl/parallel.hpp"

#include <atomic>
#include <thread>

namespace dunkl {

namespace {

int hardware_default() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::atomic<int> g_max_threads{0};  // 0 = unset, use hardware default

}  // namespace

int max_threads() {
    const int v = g_max_threads.load(std::memory_order_relaxed);
    return v > 0 ? v : hardware_default();
}

void set_max_threads(int n) { g_max_threads.store(n > 0 ? n : 0, std::memory_order_relaxed); }

}  // namespace dunkl
