#include "ganext/parallel.hpp"

#include <algorithm>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace ganext {

namespace {

thread_local bool g_in_parallel = false;

class Pool {
public:
    explicit Pool(int workers) {
        for (int i = 0; i < workers; ++i) {
            threads_.emplace_back([this] { worker_loop(); });
        }
    }

    ~Pool() {
        {
            std::lock_guard<std::mutex> lk(mu_);
            stop_ = true;
        }
        cv_.notify_all();
        for (auto& t : threads_) t.join();
    }

    void run(int chunks, const std::function<void(int)>& chunk_fn) {
        std::uint64_t gen;
        {
            std::lock_guard<std::mutex> lk(mu_);
            chunk_fn_ = &chunk_fn;
            next_chunk_ = 0;
            total_chunks_ = chunks;
            remaining_ = chunks;
            gen = ++generation_;
        }
        cv_.notify_all();
        g_in_parallel = true;
        for (;;) {
            const int c = claim(gen);
            if (c < 0) break;
            chunk_fn(c);
            finish_chunk();
        }
        g_in_parallel = false;
        std::unique_lock<std::mutex> lk(mu_);
        done_cv_.wait(lk, [this] { return remaining_ == 0; });
        chunk_fn_ = nullptr;
    }

private:
    // A chunk may only be claimed while its generation is current; run() cannot
    // return before every claimed chunk has finished, so chunk_fn_ stays valid
    // for the whole execution of a claimed chunk.
    int claim(std::uint64_t gen) {
        std::lock_guard<std::mutex> lk(mu_);
        if (gen != generation_ || next_chunk_ >= total_chunks_) return -1;
        return next_chunk_++;
    }

    void finish_chunk() {
        std::lock_guard<std::mutex> lk(mu_);
        if (--remaining_ == 0) done_cv_.notify_all();
    }

    void worker_loop() {
        g_in_parallel = true;
        std::uint64_t seen = 0;
        for (;;) {
            const std::function<void(int)>* fn = nullptr;
            std::uint64_t gen = 0;
            {
                std::unique_lock<std::mutex> lk(mu_);
                cv_.wait(lk, [&] { return stop_ || generation_ != seen; });
                if (stop_) return;
                seen = gen = generation_;
                fn = chunk_fn_;
            }
            for (;;) {
                const int c = claim(gen);
                if (c < 0) break;
                (*fn)(c);
                finish_chunk();
            }
        }
    }

    std::vector<std::thread> threads_;
    std::mutex mu_;
    std::condition_variable cv_;
    std::condition_variable done_cv_;
    const std::function<void(int)>* chunk_fn_ = nullptr;
    int next_chunk_ = 0;
    int total_chunks_ = 0;
    int remaining_ = 0;
    std::uint64_t generation_ = 0;
    bool stop_ = false;
};

int detect_threads() {
    if (const char* env = std::getenv("GANEXT_COMPUTE_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

Pool* pool() {
    static Pool p(compute_threads() - 1);
    return &p;
}

}  // namespace

int compute_threads() {
    static const int n = detect_threads();
    return n;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn,
                  std::int64_t grain) {
    if (n <= 0) return;
    const int threads = compute_threads();
    if (threads == 1 || g_in_parallel || n <= grain) {
        fn(0, n);
        return;
    }
    const int chunks = static_cast<int>(std::min<std::int64_t>(threads, (n + grain - 1) / grain));
    if (chunks <= 1) {
        fn(0, n);
        return;
    }
    const std::int64_t per = (n + chunks - 1) / chunks;
    pool()->run(chunks, [&](int c) {
        const std::int64_t b = c * per;
        const std::int64_t e = std::min<std::int64_t>(n, b + per);
        if (b < e) fn(b, e);
    });
}

}  // namespace ganext
