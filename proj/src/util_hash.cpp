#include "inspire/util/hash.hpp"

namespace inspire::util {

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

std::string fingerprint(std::string_view canonical) {
    uint64_t a = fnv1a64(canonical);
    uint64_t b = fnv1a64(canonical, 0x9e3779b97f4a7c15ULL);
    return hex64(a) + hex64(b);
}

}  // namespace inspire::util
