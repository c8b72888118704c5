#pragma once

#include <cstddef>
#include <cstdint>

namespace graphlines::kernels {

/// The data-parallel inner loops, as a table of function pointers so the
/// AVX2 variants can be selected once at startup and swapped for the scalar
/// reference in equivalence tests.
///
/// line_mask: for a fixed vertex pair (a,b) at distance dab, scan the
/// distance rows da = d(a,·) and db = d(b,·) and emit one bit per vertex c,
/// set iff one of the three betweenness equalities holds:
///     d(a,c) + d(c,b) == d(a,b)      [acb]
///     d(c,a) + d(a,b) == d(c,b)      [cab]
///     d(a,b) + d(b,c) == d(a,c)      [abc]
/// c == a and c == b come out set (0 + dab == dab), which is exactly the
/// line-membership convention. Rows are padded with zeros to `stride`
/// (a multiple of 64); zero padding cannot satisfy any equality since
/// dab >= 1, so no stray bits are produced. Sums are evaluated with
/// unsigned-saturating byte adds; entries are capped at 254 by the
/// distance-matrix constructor, so a saturated sum (255) can never equal
/// a stored distance and the comparisons stay exact.
struct Ops {
    const char* name;
    void (*line_mask)(const uint8_t* da, const uint8_t* db, uint8_t dab,
                      size_t stride, uint64_t* out);
    /// a ⊆ b over `words` 64-bit words.
    bool (*is_subset)(const uint64_t* a, const uint64_t* b, size_t words);
    /// acc |= row over `words` 64-bit words (BFS frontier expansion).
    void (*or_into)(uint64_t* acc, const uint64_t* row, size_t words);
};

const Ops& scalar_ops();
#ifdef GRAPHLINES_HAVE_AVX2
const Ops& avx2_ops();
#endif

/// True when the AVX2 variants are both compiled in and usable on this CPU.
bool avx2_usable();

/// Runtime-selected table: AVX2 when usable, else scalar. The environment
/// variable GRAPHLINES_KERNELS=scalar|avx2 overrides the choice.
const Ops& active_ops();

}  // namespace graphlines::kernels
