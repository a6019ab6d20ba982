#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace heis::parallel {

/// Number of independent random substreams used by every sampler. The
/// split is fixed, so results do not depend on the number of workers.
inline constexpr std::size_t kStreams = 64;

/// Worker threads to use: hardware concurrency capped by the positive
/// integer in HEIS_SLOR_THREADS when it is set.
std::size_t worker_count();

/// Engine for substream `stream` of the run seeded with `seed`.
std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(rng);
}

/// Number of items assigned to `stream` when `total` items are split over
/// `streams` substreams.
inline std::size_t stream_quota(std::size_t total, std::size_t streams, std::size_t stream)
{
    return total / streams + (stream < total % streams ? 1 : 0);
}

/// Calls body(task) for task in [0, tasks) on up to worker_count() threads.
/// Tasks must write only to their own output slots. The first exception
/// thrown by a task is rethrown after all workers finish.
void for_each_task(std::size_t tasks, const std::function<void(std::size_t)>& body);

}  // namespace heis::parallel
