#include "graphlines/kernels.hpp"

#include <immintrin.h>

namespace graphlines::kernels {

namespace {

// 32 vertices per iteration; two iterations fill one output word.
void line_mask_avx2(const uint8_t* da, const uint8_t* db, uint8_t dab,
                    size_t stride, uint64_t* out) {
    const __m256i vab = _mm256_set1_epi8(static_cast<char>(dab));
    const size_t words = stride / 64;
    for (size_t w = 0; w < words; ++w) {
        uint64_t bits = 0;
        for (int half = 0; half < 2; ++half) {
            const size_t off = w * 64 + static_cast<size_t>(half) * 32;
            const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(da + off));
            const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(db + off));
            const __m256i acb = _mm256_cmpeq_epi8(_mm256_adds_epu8(x, y), vab);
            const __m256i cab = _mm256_cmpeq_epi8(_mm256_adds_epu8(x, vab), y);
            const __m256i abc = _mm256_cmpeq_epi8(_mm256_adds_epu8(vab, y), x);
            const __m256i hit = _mm256_or_si256(acb, _mm256_or_si256(cab, abc));
            const uint32_t mask = static_cast<uint32_t>(_mm256_movemask_epi8(hit));
            bits |= static_cast<uint64_t>(mask) << (half * 32);
        }
        out[w] = bits;
    }
}

bool is_subset_avx2(const uint64_t* a, const uint64_t* b, size_t words) {
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i diff = _mm256_andnot_si256(vb, va);
        if (!_mm256_testz_si256(diff, diff)) return false;
    }
    for (; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

void or_into_avx2(uint64_t* acc, const uint64_t* row, size_t words) {
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        const __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_or_si256(va, vr));
    }
    for (; i < words; ++i) acc[i] |= row[i];
}

constexpr Ops kAvx2{"avx2", line_mask_avx2, is_subset_avx2, or_into_avx2};

}  // namespace

const Ops& avx2_ops() { return kAvx2; }

}  // namespace graphlines::kernels
