// parallel.hpp
//
// Seeded replications on a small thread pool. Replication i always runs on
// RandomStream(derive_seed(seed, i)) and its result lands in slot i, so the
// output does not depend on the number of workers.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

#include "robandit/rng.hpp"

namespace robandit {

template <class Fn>
auto replicate(std::size_t count, std::uint64_t seed, unsigned parallelism, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t, RandomStream&>> {
    using R = std::invoke_result_t<Fn&, std::size_t, RandomStream&>;
    std::vector<R> out(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                RandomStream rng(derive_seed(seed, i));
                out[i] = fn(i, rng);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };

    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(1u, parallelism), count));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace robandit
