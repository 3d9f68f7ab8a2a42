#ifndef ANNKH_PARALLEL_HPP
#define ANNKH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace annkh {

// Runs fn(0..count-1) over a static partition of worker threads.  Callers
// write into per-index slots, so results do not depend on the thread count.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace annkh

#endif
