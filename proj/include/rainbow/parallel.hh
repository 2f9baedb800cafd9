#ifndef RAINBOW_PARALLEL_HH
#define RAINBOW_PARALLEL_HH

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace rainbow
{
    /// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work items are
    /// handed out in increasing order; with jobs <= 1 everything runs inline.
    template <typename Fn_>
    auto parallel_for(int count, int jobs, Fn_ && fn) -> void
    {
        if (jobs <= 1 || count <= 1) {
            for (int i = 0 ; i < count ; ++i)
                fn(i);
            return;
        }

        std::atomic<int> next{ 0 };
        std::vector<std::jthread> workers;
        int threads = std::min(jobs, count);
        for (int t = 0 ; t < threads ; ++t)
            workers.emplace_back([&] {
                for (int i = next++ ; i < count ; i = next++)
                    fn(i);
            });
    }
}

#endif
