#include "wordlab/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace wordlab {

unsigned worker_count() {
    const char* env = std::getenv("WORDLAB_THREADS");
    if (!env || *env == '\0') return 1;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return 1;
    return static_cast<unsigned>(v > 64 ? 64 : v);
}

void parallel_chunks(std::uint64_t total,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (total == 0) return;
    std::uint64_t workers = worker_count();
    if (workers > total) workers = total;
    if (workers == 1) {
        fn(0, 0, total);
        return;
    }
    std::uint64_t base = total / workers;
    std::uint64_t extra = total % workers;
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    std::uint64_t begin = 0;
    for (std::uint64_t c = 0; c < workers; ++c) {
        std::uint64_t len = base + (c < extra ? 1 : 0);
        std::uint64_t end = begin + len;
        auto task = [&fn, &errors, c, begin, end] {
            try {
                fn(static_cast<unsigned>(c), begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        };
        if (c + 1 == workers)
            task();  // run the last chunk on this thread
        else
            threads.emplace_back(task);
        begin = end;
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace wordlab
