#include "gwcpg/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#if defined(__SSE__) || defined(__x86_64__)
#include <xmmintrin.h>
#define GWCPG_HAVE_MXCSR 1
#endif

namespace gwcpg {

unsigned resolve_thread_count(unsigned requested) {
    unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GWCPG_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) threads = std::min(threads, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
            // unparsable values are ignored
        }
    }
    return threads;
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (count == 0) return;
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
    if (workers == 1) {
        body(0, count);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&body, begin, end] {
            ScopedFlushDenormals ftz;
            body(begin, end);
        });
    }
    body(0, std::min(count, chunk));
    for (auto& t : pool) t.join();
}

ScopedFlushDenormals::ScopedFlushDenormals() : saved_(0) {
#ifdef GWCPG_HAVE_MXCSR
    saved_ = _mm_getcsr();
    // FTZ (bit 15) and DAZ (bit 6)
    _mm_setcsr(saved_ | 0x8040u);
#endif
}

ScopedFlushDenormals::~ScopedFlushDenormals() {
#ifdef GWCPG_HAVE_MXCSR
    _mm_setcsr(saved_);
#endif
}

}  // namespace gwcpg
