#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace inspire::util {

constexpr uint64_t kFnvBasis = 1469598103934665603ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;

inline uint64_t fnv1a64(std::string_view data, uint64_t basis = kFnvBasis) {
    uint64_t h = basis;
    for (unsigned char c : data) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

std::string hex64(uint64_t v);

// 128-bit fingerprint as 32 hex chars, stable across platforms and runs.
std::string fingerprint(std::string_view canonical);

}  // namespace inspire::util
