#include "crclab/parallel.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace crclab {

namespace {

std::atomic<int> g_override{0};

int env_cap() {
  const char* raw = std::getenv("CRCLAB_THREADS");
  if (raw == nullptr) {
    return 0;
  }
  int value = 0;
  const auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc{} || value <= 0) {
    return 0;
  }
  return value;
}

}  // namespace

int thread_count() {
#if defined(_OPENMP)
  if (const int forced = g_override.load(); forced > 0) {
    return forced;
  }
  int threads = omp_get_max_threads();
  if (const int cap = env_cap(); cap > 0 && cap < threads) {
    threads = cap;
  }
  return threads > 0 ? threads : 1;
#else
  return 1;
#endif
}

void set_thread_count(int threads) { g_override.store(threads > 0 ? threads : 0); }

}  // namespace crclab
