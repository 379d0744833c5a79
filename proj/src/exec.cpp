#include "w1g/exec.hpp"

#include <omp.h>

namespace w1g {

int max_threads() { return omp_get_max_threads(); }

}  // namespace w1g
