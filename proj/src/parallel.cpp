#include "heis/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace heis::parallel {

std::size_t worker_count()
{
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HEIS_SLOR_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap > 0) {
                workers = std::min(workers, static_cast<std::size_t>(cap));
            }
        } catch (const std::exception&) {
        }
    }
    return workers;
}

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

void for_each_task(std::size_t tasks, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers = std::min(worker_count(), tasks);
    if (workers <= 1) {
        for (std::size_t task = 0; task < tasks; ++task) {
            body(task);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t task = next++; task < tasks; task = next++) {
            try {
                body(task);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) {
        pool.emplace_back(worker);
    }
    for (std::thread& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace heis::parallel
