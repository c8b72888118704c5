#include "graphlines/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace graphlines::kernels {

namespace {

void line_mask_scalar(const uint8_t* da, const uint8_t* db, uint8_t dab,
                      size_t stride, uint64_t* out) {
    const size_t words = stride / 64;
    for (size_t w = 0; w < words; ++w) {
        uint64_t bits = 0;
        const size_t base = w * 64;
        for (size_t i = 0; i < 64; ++i) {
            const unsigned x = da[base + i];
            const unsigned y = db[base + i];
            const unsigned ab = dab;
            const bool hit = (x + y == ab) || (x + ab == y) || (ab + y == x);
            bits |= uint64_t(hit) << i;
        }
        out[w] = bits;
    }
}

bool is_subset_scalar(const uint64_t* a, const uint64_t* b, size_t words) {
    for (size_t i = 0; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

void or_into_scalar(uint64_t* acc, const uint64_t* row, size_t words) {
    for (size_t i = 0; i < words; ++i) acc[i] |= row[i];
}

constexpr Ops kScalar{"scalar", line_mask_scalar, is_subset_scalar, or_into_scalar};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

bool avx2_usable() {
#ifdef GRAPHLINES_HAVE_AVX2
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops& active_ops() {
    static const Ops& chosen = []() -> const Ops& {
        const char* force = std::getenv("GRAPHLINES_KERNELS");
        if (force && std::strcmp(force, "scalar") == 0) return kScalar;
#ifdef GRAPHLINES_HAVE_AVX2
        if (avx2_usable()) return avx2_ops();
#endif
        return kScalar;
    }();
    return chosen;
}

}  // namespace graphlines::kernels
