#include "sbcn/thread_pool.hpp"

namespace sbcn {

namespace {

inline void cpu_relax() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_ia32_pause();
#elif defined(__aarch64__)
    asm volatile("yield");
#endif
}

constexpr int kSpinRounds = 20000;  // ~tens of microseconds
constexpr int kYieldEvery = 1024;   // keep oversubscribed hosts moving

} // namespace

ThreadPool::ThreadPool(int worker_count) : worker_count_(worker_count < 1 ? 1 : worker_count) {
    threads_.reserve(worker_count_ - 1);
    for (int t = 0; t < worker_count_ - 1; ++t)
        threads_.emplace_back([this] { worker_loop(); });
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        stopping_.store(true, std::memory_order_relaxed);
    }
    start_cv_.notify_all();
    for (auto& t : threads_) t.join();
}

void ThreadPool::run_current_job() {
    const std::function<void(size_t)>& task = *task_;
    const size_t count = job_count_;
    for (;;) {
        const size_t i = next_index_.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        task(i);
    }
}

void ThreadPool::wait_for_new_job(uint64_t seen_job) {
    for (int spin = 0; spin < kSpinRounds; ++spin) {
        if (job_id_.load(std::memory_order_acquire) != seen_job ||
            stopping_.load(std::memory_order_relaxed))
            return;
        cpu_relax();
        if (spin % kYieldEvery == kYieldEvery - 1) std::this_thread::yield();
    }
    std::unique_lock<std::mutex> lock(mutex_);
    start_cv_.wait(lock, [&] {
        return stopping_.load(std::memory_order_relaxed) ||
               job_id_.load(std::memory_order_acquire) != seen_job;
    });
}

void ThreadPool::worker_loop() {
    uint64_t seen_job = 0;
    for (;;) {
        wait_for_new_job(seen_job);
        if (stopping_.load(std::memory_order_relaxed)) return;
        seen_job = job_id_.load(std::memory_order_acquire);
        run_current_job();
        if (acks_.fetch_add(1, std::memory_order_acq_rel) + 1 == worker_count_ - 1) {
            std::lock_guard<std::mutex> lock(mutex_);
            done_cv_.notify_one();
        }
    }
}

void ThreadPool::parallel_for(size_t count, const std::function<void(size_t)>& task) {
    if (count == 0) return;
    if (worker_count_ == 1) {
        for (size_t i = 0; i < count; ++i) task(i);
        return;
    }

    task_ = &task;
    job_count_ = count;
    next_index_.store(0, std::memory_order_relaxed);
    acks_.store(0, std::memory_order_relaxed);
    {
        // the lock pairs with the workers' sleep path: no worker can slip
        // between its predicate check and the wait while we publish the job
        std::lock_guard<std::mutex> lock(mutex_);
        job_id_.fetch_add(1, std::memory_order_release);
    }
    start_cv_.notify_all();

    run_current_job();

    const int need = worker_count_ - 1;
    for (int spin = 0; acks_.load(std::memory_order_acquire) != need; ++spin) {
        cpu_relax();
        if (spin % kYieldEvery == kYieldEvery - 1) std::this_thread::yield();
        if (spin >= kSpinRounds) {
            std::unique_lock<std::mutex> lock(mutex_);
            done_cv_.wait(lock,
                          [&] { return acks_.load(std::memory_order_acquire) == need; });
            break;
        }
    }
    task_ = nullptr;
}

} // namespace sbcn
