#include "frl/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace frl {

int thread_count() {
  if (const char* env = std::getenv("FRL_THREADS")) {
    try {
      const int requested = std::stoi(env);
      if (requested > 0) return requested;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return omp_get_max_threads();
}

}  // namespace frl
