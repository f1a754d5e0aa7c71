#include "pmd/field.hpp"

#include <cstdlib>
#include <string>

namespace pmd {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull})
        if (n % d == 0) return n == d;
    for (std::uint64_t d = 29; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

std::uint32_t default_field_char() {
    if (const char* env = std::getenv("PMD_FIELD_CHAR")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 2 && v < (1ul << 31) && is_prime(v))
            return static_cast<std::uint32_t>(v);
        throw ParseError(std::string("PMD_FIELD_CHAR is not a valid prime: ") + env);
    }
    return 32003;
}

} // namespace pmd
