#ifndef SBCN_THREAD_POOL_HPP
#define SBCN_THREAD_POOL_HPP

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sbcn {

// Fork/join pool for the per-generation parallel region. parallel_for blocks
// until every index has been processed; the calling thread works too, so a
// pool of size 1 degenerates to a plain loop with no synchronization at all.
//
// Generations arrive back to back, so workers spin briefly for the next job
// before falling back to a condition variable; in steady state a generation
// costs no futex round-trips. Indices are claimed via an atomic counter,
// which keeps results deterministic as long as tasks write only to their own
// slot. parallel_for returns only after every worker has quiesced, so no
// thread can hold a stale task pointer.
class ThreadPool {
public:
    /// worker_count <= 1 means no threads at all.
    explicit ThreadPool(int worker_count);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    /// Runs task(i) for i in [0, count). Not reentrant.
    void parallel_for(size_t count, const std::function<void(size_t)>& task);

    int size() const { return worker_count_; }

    static int hardware_workers() {
        const unsigned n = std::thread::hardware_concurrency();
        return n == 0 ? 1 : static_cast<int>(n);
    }

private:
    void worker_loop();
    void run_current_job();
    void wait_for_new_job(uint64_t seen_job);

    int worker_count_ = 1;
    std::vector<std::thread> threads_;

    std::mutex mutex_; // serializes the sleep/wake fallback paths
    std::condition_variable start_cv_;
    std::condition_variable done_cv_;

    const std::function<void(size_t)>* task_ = nullptr;
    size_t job_count_ = 0;
    std::atomic<size_t> next_index_{0};
    std::atomic<int> acks_{0}; // workers done with the current job
    std::atomic<uint64_t> job_id_{0};
    std::atomic<bool> stopping_{false};
};

} // namespace sbcn

#endif
