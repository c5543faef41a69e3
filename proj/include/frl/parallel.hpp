#pragma once

namespace frl {

/// Serial loops are the reference implementation; parallel ones are the
/// OpenMP kernels checked against them.
enum class Execution { serial, parallel };

/// Worker count for OpenMP kernels: FRL_THREADS when set to a positive
/// integer, otherwise the OpenMP default.
int thread_count();

}  // namespace frl
