#include "godel/parallel.hpp"

#include <cstdlib>
#include <string>

namespace godel {

int
resolve_jobs(int requested)
{
    if (requested > 0) {
        return requested;
    }
    if (char const* env = std::getenv("GODEL_C60_JOBS")) {
        try {
            int const v = std::stoi(env);
            if (v > 0) {
                return v;
            }
        } catch (std::exception const&) {
        }
    }
    unsigned const hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace godel
