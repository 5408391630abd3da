#include "covercode/kernels.hpp"

#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#define COVERCODE_X86 1
#include <immintrin.h>
#else
#define COVERCODE_X86 0
#endif

#if defined(__aarch64__)
#define COVERCODE_NEON 1
#include <arm_neon.h>
#else
#define COVERCODE_NEON 0
#endif

namespace covercode::kernels {

namespace {

// ---------------------------------------------------------------- scalar ---

void or_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

std::uint64_t or_count_new_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::uint64_t fresh = 0;
    for (std::size_t i = 0; i < n; ++i) {
        fresh += std::popcount(src[i] & ~dst[i]);
        dst[i] |= src[i];
    }
    return fresh;
}

std::uint64_t popcount_scalar(const std::uint64_t* p, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(p[i]);
    return c;
}

std::uint64_t andnot_count_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] & ~b[i]);
    return c;
}

bool equal_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

constexpr Backend kScalar{"scalar", or_into_scalar, or_count_new_scalar,
                          popcount_scalar, andnot_count_scalar, equal_scalar};

// ----------------------------------------------------------------- AVX2 ----

#if COVERCODE_X86

__attribute__((target("avx2"))) void or_into_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                                  std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
    }
    for (; i < n; ++i) dst[i] |= src[i];
}

// Nibble-LUT popcount of a 256-bit lane, accumulated as 4 x u64.
__attribute__((target("avx2"))) inline __m256i popcount256(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                                         2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) std::uint64_t or_count_new_avx2(std::uint64_t* dst,
                                                                const std::uint64_t* src,
                                                                std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_andnot_si256(d, s)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
    }
    std::uint64_t lanes[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t fresh = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        fresh += std::popcount(src[i] & ~dst[i]);
        dst[i] |= src[i];
    }
    return fresh;
}

__attribute__((target("avx2"))) std::uint64_t popcount_avx2(const std::uint64_t* p,
                                                            std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(
            acc, popcount256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i))));
    std::uint64_t lanes[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) c += std::popcount(p[i]);
    return c;
}

__attribute__((target("avx2"))) std::uint64_t andnot_count_avx2(const std::uint64_t* a,
                                                                const std::uint64_t* b,
                                                                std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_andnot_si256(vb, va)));
    }
    std::uint64_t lanes[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) c += std::popcount(a[i] & ~b[i]);
    return c;
}

__attribute__((target("avx2"))) bool equal_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                                std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (_mm256_movemask_epi8(_mm256_cmpeq_epi64(va, vb)) != -1) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

constexpr Backend kAvx2{"avx2", or_into_avx2, or_count_new_avx2, popcount_avx2, andnot_count_avx2,
                        equal_avx2};

#endif  // COVERCODE_X86

// ----------------------------------------------------------------- NEON ----

#if COVERCODE_NEON

void or_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, vorrq_u64(d, s));
    }
    for (; i < n; ++i) dst[i] |= src[i];
}

inline std::uint64_t popcount128(uint64x2_t v) {
    uint8x16_t c = vcntq_u8(vreinterpretq_u8_u64(v));
    return vaddvq_u8(c);
}

std::uint64_t or_count_new_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::uint64_t fresh = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        fresh += popcount128(vbicq_u64(s, d));
        vst1q_u64(dst + i, vorrq_u64(d, s));
    }
    for (; i < n; ++i) {
        fresh += std::popcount(src[i] & ~dst[i]);
        dst[i] |= src[i];
    }
    return fresh;
}

std::uint64_t popcount_neon(const std::uint64_t* p, std::size_t n) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) c += popcount128(vld1q_u64(p + i));
    for (; i < n; ++i) c += std::popcount(p[i]);
    return c;
}

std::uint64_t andnot_count_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) c += popcount128(vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) c += std::popcount(a[i] & ~b[i]);
    return c;
}

bool equal_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

constexpr Backend kNeon{"neon", or_into_neon, or_count_new_neon, popcount_neon, andnot_count_neon,
                        equal_neon};

#endif  // COVERCODE_NEON

const Backend* pick_default() {
#if COVERCODE_X86
    if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
#if COVERCODE_NEON
    return &kNeon;
#endif
    return &kScalar;
}

const Backend* g_active = pick_default();

}  // namespace

const Backend& scalar_backend() { return kScalar; }

const Backend& active_backend() { return *g_active; }

std::string_view active_backend_name() { return g_active->name; }

bool select_backend(std::string_view name) {
    if (name == "scalar") {
        g_active = &kScalar;
        return true;
    }
#if COVERCODE_X86
    if (name == "avx2" && __builtin_cpu_supports("avx2")) {
        g_active = &kAvx2;
        return true;
    }
#endif
#if COVERCODE_NEON
    if (name == "neon") {
        g_active = &kNeon;
        return true;
    }
#endif
    return false;
}

std::vector<std::string_view> available_backends() {
    std::vector<std::string_view> out{"scalar"};
#if COVERCODE_X86
    if (__builtin_cpu_supports("avx2")) out.push_back("avx2");
#endif
#if COVERCODE_NEON
    out.push_back("neon");
#endif
    return out;
}

}  // namespace covercode::kernels
