#include "gltlab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gltlab {

namespace {

int default_jobs() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::atomic<int> g_jobs{0};  // 0 = use default

}  // namespace

int parallel_jobs() {
    const int j = g_jobs.load();
    return j > 0 ? j : default_jobs();
}

void set_parallel_jobs(int jobs) { g_jobs.store(jobs > 0 ? jobs : 0); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    const std::size_t jobs = std::min<std::size_t>(static_cast<std::size_t>(parallel_jobs()), count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }

    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto run_slice = [&](std::size_t worker) {
        try {
            for (std::size_t i = worker; i < count; i += jobs) body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs - 1);
    for (std::size_t w = 1; w < jobs; ++w) pool.emplace_back(run_slice, w);
    run_slice(0);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gltlab
