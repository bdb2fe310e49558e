#include "crysalite/parallel.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace crysalite {

std::size_t worker_count() {
    if (const char* env = std::getenv("CRYSALITE_THREADS")) {
        const std::string text(env);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || v <= 0)
            throw std::invalid_argument("CRYSALITE_THREADS must be a positive integer, got '" + text + "'");
        return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace crysalite
