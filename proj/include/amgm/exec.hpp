#pragma once

#include <cstddef>
#include <functional>

namespace amgm {

enum class Exec { serial, openmp };

// True when the build has OpenMP and the mpfr build is thread-safe.
bool openmp_available();

int hardware_threads();

// Runs fn(i) for every i in [0, count).  The openmp mode writes results by
// index only, so output is bit-identical to serial regardless of thread
// count; exceptions are captured per index and the lowest-index one is
// rethrown after the loop.  Falls back to serial when openmp is unavailable.
void for_each_index(std::size_t count, Exec exec, const std::function<void(std::size_t)>& fn);

}  // namespace amgm
