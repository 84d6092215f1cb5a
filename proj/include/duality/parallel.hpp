#pragma once

#include <cstddef>
#include <functional>

namespace duality {

// Worker count: DUALITY_LAB_THREADS if set and positive, else the hardware concurrency.
std::size_t worker_count();

// Calls body(i) for i in [0, n). Bodies must write only to slots they own;
// callers merge results by index so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace duality
