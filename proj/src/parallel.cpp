#include "steerscope/parallel.hpp"

#include <cstdlib>
#include <string>

namespace steerscope {

unsigned thread_cap_from_env() {
    const char* raw = std::getenv("STEERSCOPE_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    try {
        const long value = std::stol(raw);
        return value > 0 ? static_cast<unsigned>(value) : 1u;
    } catch (const std::exception&) {
        return 0;
    }
}

}  // namespace steerscope
