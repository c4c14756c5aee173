#ifndef GWCPG_PARALLEL_HPP_
#define GWCPG_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace gwcpg {

/// Worker count: `requested` if nonzero, else hardware concurrency; capped by
/// the GWCPG_THREADS environment variable when it is set.
unsigned resolve_thread_count(unsigned requested = 0);

/// Runs body(begin, end) over a static partition of [0, count) into at most
/// `threads` contiguous chunks. Partition boundaries do not affect results as
/// long as body writes only to its own indices.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

/// Sets flush-to-zero / denormals-are-zero for the current thread and restores
/// the previous mode on destruction. No-op on targets without SSE.
class ScopedFlushDenormals {
public:
    ScopedFlushDenormals();
    ~ScopedFlushDenormals();
    ScopedFlushDenormals(const ScopedFlushDenormals&) = delete;
    ScopedFlushDenormals& operator=(const ScopedFlushDenormals&) = delete;

private:
    unsigned saved_;
};

}  // namespace gwcpg

#endif  // GWCPG_PARALLEL_HPP_
