#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

// Every scan kernel in this library comes in two flavors selected by Exec:
// a plain serial loop kept as the reference, and an OpenMP version used by
// default. Both must produce identical reports; tests and the bench tool
// compare them.

namespace pwalk {

enum class Exec { Serial, Parallel };

// Worker count for Exec::Parallel. PWALK_THREADS caps it; 0 or unset means
// the OpenMP default. Always 1 when built without OpenMP.
inline int effective_workers() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("PWALK_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) n = static_cast<int>(v);
    }
    return n >= 1 ? n : 1;
#else
    return 1;
#endif
}

}  // namespace pwalk
