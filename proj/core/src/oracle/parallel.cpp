#include "newton_mellin/oracle/parallel.hpp"

#include <cstdlib>
#include <string>

namespace nm::oracle {

std::size_t thread_limit() {
    if (const char* env = std::getenv("NEWTON_MELLIN_THREADS")) {
        try {
            const long value = std::stol(env);
            if (value > 0) return static_cast<std::size_t>(value);
        } catch (const std::exception&) {
            // Unparseable values fall back to the hardware default.
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace nm::oracle
