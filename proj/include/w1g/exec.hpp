#pragma once

namespace w1g {

/// Which implementation of a data-parallel kernel to run. The serial path is
/// the plain reference loop; the parallel path uses OpenMP (thread count from
/// OMP_NUM_THREADS) and must produce identical results.
enum class Exec { serial, parallel };

int max_threads();

}  // namespace w1g
