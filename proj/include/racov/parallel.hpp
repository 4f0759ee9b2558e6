#pragma once
#include <cstddef>

namespace racov {

// Worker count for OpenMP regions: RA_THREADS if set to a positive integer,
// otherwise the machine parallelism.
int worker_count();

}  // namespace racov
