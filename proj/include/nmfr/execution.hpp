#pragma once

namespace nmfr {

// Selects between the OpenMP kernel and the plain serial loop it is checked
// against. Both produce identical results.
enum class Execution { Serial, Parallel };

// Applies the NMFR_THREADS cap (if set and positive) to the OpenMP runtime.
// Returns the resulting maximum thread count.
int configure_threads_from_env();

}  // namespace nmfr
