#include "nmfr/execution.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nmfr {

int configure_threads_from_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("NMFR_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) omp_set_num_threads(n);
    } catch (const std::exception&) {
      // Ignore unparsable values and keep the runtime default.
    }
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace nmfr
