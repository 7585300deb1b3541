#pragma once

// Deterministic chunked map-reduce over replicate indices: replicates are cut
// into fixed-size chunks, workers claim chunks dynamically, and chunk results
// are merged in chunk order — so the result is bitwise independent of the
// thread count (each replicate also derives its randomness from its own index).

#include <atomic>
#include <cstdint>
#include <memory>
#include <thread>
#include <vector>

namespace pav {

inline constexpr uint64_t kChunkSize = 1024;

// MakeAcc: Acc();  Work: void(uint64_t replicate, Acc&);  Acc::merge(const Acc&).
template <class Acc, class MakeAcc, class Work>
Acc run_chunked(uint64_t reps, unsigned threads, const MakeAcc& make, const Work& work) {
    const uint64_t nchunks = (reps + kChunkSize - 1) / kChunkSize;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::unique_ptr<Acc>> results(nchunks);
    std::atomic<uint64_t> next{0};
    auto body = [&]() {
        for (;;) {
            const uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            auto acc = std::make_unique<Acc>(make());
            const uint64_t lo = c * kChunkSize;
            const uint64_t hi = std::min(reps, lo + kChunkSize);
            for (uint64_t r = lo; r < hi; ++r) work(r, *acc);
            results[c] = std::move(acc);
        }
    };
    if (threads <= 1 || nchunks <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        const unsigned use = static_cast<unsigned>(std::min<uint64_t>(threads, nchunks));
        pool.reserve(use);
        for (unsigned i = 0; i < use; ++i) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }
    Acc total = make();
    for (uint64_t c = 0; c < nchunks; ++c) total.merge(*results[c]);
    return total;
}

}  // namespace pav
