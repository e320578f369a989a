#include "amgm/exec.hpp"

#include <mpfr.h>

#include <exception>
#include <vector>

#if defined(AMGM_HAVE_OPENMP)
#include <omp.h>
#endif

namespace amgm {

bool openmp_available() {
#if defined(AMGM_HAVE_OPENMP)
    return mpfr_buildopt_tls_p() != 0;
#else
    return false;
#endif
}

int hardware_threads() {
#if defined(AMGM_HAVE_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void for_each_index(std::size_t count, Exec exec, const std::function<void(std::size_t)>& fn) {
    if (exec == Exec::openmp && openmp_available() && count > 1) {
#if defined(AMGM_HAVE_OPENMP)
        std::vector<std::exception_ptr> errs(count);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(count); ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
                errs[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
        return;
#endif
    }
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace amgm
