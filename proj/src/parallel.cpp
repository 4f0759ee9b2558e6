#include "racov/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace racov {

int worker_count() {
  if (const char* env = std::getenv("RA_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace racov
