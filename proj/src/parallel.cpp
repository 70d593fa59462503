#include "casimir_rect/parallel.hpp"

#include <cstdlib>
#include <string>

namespace casimir_rect {

void configure_threads_from_env()
{
    const char* env = std::getenv("CASIMIR_RECT_THREADS");
    if (env == nullptr) return;
    try {
        const int n = std::stoi(env);
        if (n >= 1) {
#ifdef _OPENMP
            omp_set_num_threads(n);
#endif
        }
    } catch (const std::exception&) {
        // ignore malformed values and keep the runtime default
    }
}

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace casimir_rect
