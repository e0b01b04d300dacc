#pragma once

namespace polyidp {

/// Thread cap from POLYIDP_THREADS (0 or unset = OpenMP default).
int thread_limit_from_env();

/// Applies POLYIDP_THREADS to the OpenMP runtime; no-op without OpenMP.
void apply_thread_limit();

/// Number of threads a parallel region would use.
int max_threads();

} // namespace polyidp
