#include "polyidp/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polyidp {

int thread_limit_from_env() {
    const char* v = std::getenv("POLYIDP_THREADS");
    if (!v || !*v) return 0;
    try {
        const int n = std::stoi(v);
        return n > 0 ? n : 0;
    } catch (...) {
        return 0;
    }
}

void apply_thread_limit() {
#ifdef _OPENMP
    const int n = thread_limit_from_env();
    if (n > 0) omp_set_num_threads(n);
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace polyidp
