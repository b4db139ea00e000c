#pragma once

namespace crclab {

/// Worker count for the OpenMP kernels. Defaults to the OpenMP maximum,
/// capped by the CRCLAB_THREADS environment variable when it is set to a
/// positive integer. Always 1 in builds without OpenMP.
int thread_count();

/// Overrides thread_count() for the current process; 0 restores the default.
void set_thread_count(int threads);

}  // namespace crclab
