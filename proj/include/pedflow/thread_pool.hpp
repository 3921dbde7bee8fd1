#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace pedflow {

// Persistent worker pool for barrier-style data parallelism. parallel_for
// splits [0, n) into one contiguous chunk per thread and returns after every
// chunk has finished, so each call is a full phase barrier. With a single
// thread the body runs inline, which is exactly the sequential executor.
class ThreadPool {
  public:
    explicit ThreadPool(int threads) {
        const int n = threads < 1 ? 1 : threads;
        workers_.reserve(size_t(n - 1));
        for (int i = 1; i < n; ++i) {
            workers_.emplace_back([this, i] { worker_loop(i); });
        }
    }

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    ~ThreadPool() {
        {
            std::lock_guard<std::mutex> lock(mu_);
            stop_ = true;
        }
        cv_work_.notify_all();
        for (std::thread& t : workers_) t.join();
    }

    int size() const { return int(workers_.size()) + 1; }

    // fn(begin, end) over disjoint chunks; chunk boundaries depend only on n
    // and the pool size, never on timing.
    void parallel_for(int64_t n, const std::function<void(int64_t, int64_t)>& fn) {
        if (n <= 0) return;
        const int total = size();
        if (total == 1 || n == 1) {
            fn(0, n);
            return;
        }
        {
            std::lock_guard<std::mutex> lock(mu_);
            job_ = &fn;
            job_size_ = n;
            pending_ = int(workers_.size());
            ++generation_;
        }
        cv_work_.notify_all();
        fn(chunk_begin(n, 0), chunk_end(n, 0));  // caller takes chunk 0
        std::unique_lock<std::mutex> lock(mu_);
        cv_done_.wait(lock, [this] { return pending_ == 0; });
        job_ = nullptr;
    }

  private:
    int64_t chunk_begin(int64_t n, int idx) const {
        return n * idx / size();
    }
    int64_t chunk_end(int64_t n, int idx) const {
        return n * (idx + 1) / size();
    }

    void worker_loop(int idx) {
        uint64_t seen = 0;
        for (;;) {
            const std::function<void(int64_t, int64_t)>* job = nullptr;
            int64_t n = 0;
            {
                std::unique_lock<std::mutex> lock(mu_);
                cv_work_.wait(lock, [&] { return stop_ || generation_ != seen; });
                if (stop_) return;
                seen = generation_;
                job = job_;
                n = job_size_;
            }
            (*job)(chunk_begin(n, idx), chunk_end(n, idx));
            {
                std::lock_guard<std::mutex> lock(mu_);
                if (--pending_ == 0) cv_done_.notify_one();
            }
        }
    }

    std::vector<std::thread> workers_;
    std::mutex mu_;
    std::condition_variable cv_work_;
    std::condition_variable cv_done_;
    const std::function<void(int64_t, int64_t)>* job_ = nullptr;
    int64_t job_size_ = 0;
    uint64_t generation_ = 0;
    int pending_ = 0;
    bool stop_ = false;
};

}  // namespace pedflow
