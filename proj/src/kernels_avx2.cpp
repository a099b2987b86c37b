#include "shellga/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>
#include <cstdint>

namespace shellga::kernels {

namespace {

// Sign-flip masks (one bit per 64-bit lane).
#define SGN(m3, m2, m1, m0) \
    _mm256_castsi256_pd(_mm256_set_epi64x( \
        (m3) ? INT64_MIN : 0, (m2) ? INT64_MIN : 0, \
        (m1) ? INT64_MIN : 0, (m0) ? INT64_MIN : 0))

} // namespace

// Same accumulation order as geometric_product_scalar: one broadcast of a[i]
// per step, each step multiplying a signed permutation of b.  mul+add (no FMA)
// keeps the rounding identical to the scalar kernel.
__attribute__((target("avx2")))
void geometric_product_avx2(const double* a, const double* b, double* out) noexcept
{
    const __m256d blo = _mm256_loadu_pd(b);     // b0 b1 b2 b3
    const __m256d bhi = _mm256_loadu_pd(b + 4); // b4 b5 b6 b7

    const __m256d s1   = SGN(0, 0, 1, 0);
    const __m256d s013 = SGN(1, 0, 1, 1);
    const __m256d s12  = SGN(0, 1, 1, 0);
    const __m256d s023 = SGN(1, 1, 0, 1);
    const __m256d s2   = SGN(0, 1, 0, 0);
    const __m256d s03  = SGN(1, 0, 0, 1);

    __m256d ai, pl, ph, v, lo, hi;

    // i = 0:  lo [b0 b1 b2 b3] ++++        hi [b4 b5 b6 b7] ++++
    ai = _mm256_broadcast_sd(a + 0);
    lo = _mm256_mul_pd(ai, blo);
    hi = _mm256_mul_pd(ai, bhi);

    // i = 1:  lo [b1 b0 b4 b5] ++++        hi [b2 b3 b7 b6] ++++
    ai = _mm256_broadcast_sd(a + 1);
    pl = _mm256_permute4x64_pd(blo, 0x01);
    ph = _mm256_permute4x64_pd(bhi, 0x40);
    v  = _mm256_blend_pd(pl, ph, 0b1100);
    lo = _mm256_add_pd(lo, _mm256_mul_pd(ai, v));
    pl = _mm256_permute4x64_pd(blo, 0x0E);
    ph = _mm256_permute4x64_pd(bhi, 0xB0);
    v  = _mm256_blend_pd(pl, ph, 0b1100);
    hi = _mm256_add_pd(hi, _mm256_mul_pd(ai, v));

    // i = 2:  lo [b2 -b4 b0 b6]            hi [-b1 -b7 b3 -b5]
    ai = _mm256_broadcast_sd(a + 2);
    pl = _mm256_permute4x64_pd(blo, 0x02);
    ph = _mm256_permute4x64_pd(bhi, 0x80);
    v  = _mm256_xor_pd(_mm256_blend_pd(pl, ph, 0b1010), s1);
    lo = _mm256_add_pd(lo, _mm256_mul_pd(ai, v));
    pl = _mm256_permute4x64_pd(blo, 0x31);
    ph = _mm256_permute4x64_pd(bhi, 0x4C);
    v  = _mm256_xor_pd(_mm256_blend_pd(pl, ph, 0b1010), s013);
    hi = _mm256_add_pd(hi, _mm256_mul_pd(ai, v));

    // i = 3:  lo [b3 -b5 -b6 b0]           hi [b7 -b1 -b2 b4]
    ai = _mm256_broadcast_sd(a + 3);
    pl = _mm256_permute4x64_pd(blo, 0x03);
    ph = _mm256_permute4x64_pd(bhi, 0x24);
    v  = _mm256_xor_pd(_mm256_blend_pd(pl, ph, 0b0110), s12);
    lo = _mm256_add_pd(lo, _mm256_mul_pd(ai, v));
    pl = _mm256_permute4x64_pd(blo, 0x24);
    ph = _mm256_permute4x64_pd(bhi, 0x03);
    v  = _mm256_xor_pd(_mm256_blend_pd(pl, ph, 0b1001), s12);
    hi = _mm256_add_pd(hi, _mm256_mul_pd(ai, v));

    // i = 4:  lo [-b4 b2 -b1 -b7]          hi [b0 b6 -b5 b3]
    ai = _mm256_broadcast_sd(a + 4);
    pl = _mm256_permute4x64_pd(blo, 0x18);
    ph = _mm256_permute4x64_pd(bhi, 0xC0);
    v  = _mm256_xor_pd(_mm256_blend_pd(pl, ph, 0b1001), s023);
    lo = _mm256_add_pd(lo, _mm256_mul_pd(ai, v));
    pl = _mm256_permute4x64_pd(blo, 0xC0);
    ph = _mm256_permute4x64_pd(bhi, 0x18);
    v  = _mm256_xor_pd(_mm256_blend_pd(pl, ph, 0b0110), s2);
    hi = _mm256_add_pd(hi, _mm256_mul_pd(ai, v));

    // i = 5:  lo [-b5 b3 b7 -b1]           hi [-b6 b0 b4 -b2]
    ai = _mm256_broadcast_sd(a + 5);
    pl = _mm256_permute4x64_pd(blo, 0x4C);
    ph = _mm256_permute4x64_pd(bhi, 0x31);
    v  = _mm256_xor_pd(_mm256_blend_pd(pl, ph, 0b0101), s03);
    lo = _mm256_add_pd(lo, _mm256_mul_pd(ai, v));
    pl = _mm256_permute4x64_pd(blo, 0x80);
    ph = _mm256_permute4x64_pd(bhi, 0x02);
    v  = _mm256_xor_pd(_mm256_blend_pd(pl, ph, 0b0101), s03);
    hi = _mm256_add_pd(hi, _mm256_mul_pd(ai, v));

    // i = 6:  lo [-b6 -b7 b3 -b2]          hi [b5 -b4 b0 b1]
    ai = _mm256_broadcast_sd(a + 6);
    pl = _mm256_permute4x64_pd(blo, 0xB0);
    ph = _mm256_permute4x64_pd(bhi, 0x0E);
    v  = _mm256_xor_pd(_mm256_blend_pd(pl, ph, 0b0011), s013);
    lo = _mm256_add_pd(lo, _mm256_mul_pd(ai, v));
    pl = _mm256_permute4x64_pd(blo, 0x40);
    ph = _mm256_permute4x64_pd(bhi, 0x01);
    v  = _mm256_xor_pd(_mm256_blend_pd(pl, ph, 0b0011), s1);
    hi = _mm256_add_pd(hi, _mm256_mul_pd(ai, v));

    // i = 7:  lo [-b7 -b6 b5 -b4]          hi [b3 -b2 b1 b0]
    ai = _mm256_broadcast_sd(a + 7);
    v  = _mm256_xor_pd(_mm256_permute4x64_pd(bhi, 0x1B), s013);
    lo = _mm256_add_pd(lo, _mm256_mul_pd(ai, v));
    v  = _mm256_xor_pd(_mm256_permute4x64_pd(blo, 0x1B), s1);
    hi = _mm256_add_pd(hi, _mm256_mul_pd(ai, v));

    _mm256_storeu_pd(out, lo);
    _mm256_storeu_pd(out + 4, hi);
}

#undef SGN

} // namespace shellga::kernels

#endif // x86_64
