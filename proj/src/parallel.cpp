#include "qtmoments/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qtmoments {

unsigned default_workers()
{
    if (const char* env = std::getenv("QTMOMENTS_JOBS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace qtmoments
