#pragma once

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "panast/line_source.hpp"

namespace panast {

/// Blocking FIFO with a fixed capacity. push() waits while full; pop()
/// returns nullopt once the queue is closed and drained.
template <typename T>
class BoundedQueue {
public:
    explicit BoundedQueue(std::size_t capacity) : capacity_(capacity == 0 ? 1 : capacity) {}

    void push(T item) {
        std::unique_lock lock(mutex_);
        not_full_.wait(lock, [&] { return items_.size() < capacity_ || closed_; });
        if (closed_) return;
        items_.push_back(std::move(item));
        not_empty_.notify_one();
    }

    std::optional<T> pop() {
        std::unique_lock lock(mutex_);
        not_empty_.wait(lock, [&] { return !items_.empty() || closed_; });
        if (items_.empty()) return std::nullopt;
        T item = std::move(items_.front());
        items_.pop_front();
        not_full_.notify_one();
        return item;
    }

    void close() {
        std::lock_guard lock(mutex_);
        closed_ = true;
        not_empty_.notify_all();
        not_full_.notify_all();
    }

private:
    std::size_t capacity_;
    std::deque<T> items_;
    bool closed_ = false;
    std::mutex mutex_;
    std::condition_variable not_empty_;
    std::condition_variable not_full_;
};

inline constexpr std::size_t kDefaultBatchLines = 2048;

/// Sequential reader, `workers` consumer threads, worker-local accumulators
/// merged once at the end in worker order. `process(acc, line)` must only
/// touch `acc`; `merge(into, from)` must be associative and commutative for
/// results to be independent of the worker count.
template <typename Acc, typename Process, typename Merge>
Acc reduce_lines(LineSource& source, std::size_t workers, const Acc& zero, Process process,
                 Merge merge, std::size_t batch_lines = kDefaultBatchLines) {
    if (workers == 0) workers = 1;
    using Batch = std::vector<std::string>;
    BoundedQueue<Batch> queue(workers * 2);
    std::vector<Acc> partial(workers, zero);
    std::vector<std::exception_ptr> errors(workers);

    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                while (auto batch = queue.pop()) {
                    for (const auto& line : *batch) process(partial[w], line);
                }
            } catch (...) {
                errors[w] = std::current_exception();
                queue.close();
            }
        });
    }

    std::exception_ptr read_error;
    try {
        Batch batch;
        batch.reserve(batch_lines);
        std::string line;
        while (source.next(line)) {
            batch.push_back(std::move(line));
            line = std::string();
            if (batch.size() == batch_lines) {
                queue.push(std::move(batch));
                batch = Batch();
                batch.reserve(batch_lines);
            }
        }
        if (!batch.empty()) queue.push(std::move(batch));
    } catch (...) {
        read_error = std::current_exception();
    }
    queue.close();
    for (auto& t : threads) t.join();

    if (read_error) std::rethrow_exception(read_error);
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Acc result = zero;
    for (auto& p : partial) merge(result, p);
    return result;
}

}  // namespace panast
