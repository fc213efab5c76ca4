#include "monideal/kernels.hpp"

// AVX2 backend: 8 exponents per lane-parallel step, masked loads/stores for
// the tail so arbitrary lengths work without scalar epilogues.  Compiled only
// in builds where the compiler accepts -mavx2; registered at runtime only when
// the CPU reports AVX2 support (see kernels.cpp).

#if defined(__AVX2__)

#include <immintrin.h>

#include <cstdint>

namespace monideal::kernels {
namespace {

// First r entries enabled (r in 1..7).  maskload/maskstore act on lanes whose
// mask high bit is set.
alignas(32) constexpr std::int32_t kTailMask[16] = {
    -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0,
};

inline __m256i tail_mask(std::size_t r) {
  return _mm256_loadu_si256(
      reinterpret_cast<const __m256i*>(kTailMask + 8 - r));
}

inline __m256i load8(const Exp* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store8(Exp* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Masked-out lanes read as zero, which is neutral for every kernel below:
// 0 <= 0 for divides, 0 == 0 for equal, and 0 + 0 keeps the overflow
// accumulator clear.
inline __m256i load_tail(const Exp* p, std::size_t r) {
  return _mm256_maskload_epi32(p, tail_mask(r));
}

bool v_divides(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i gt = _mm256_cmpgt_epi32(load8(a + i), load8(b + i));
    if (_mm256_movemask_epi8(gt) != 0) return false;
  }
  if (i < n) {
    const std::size_t r = n - i;
    const __m256i gt =
        _mm256_cmpgt_epi32(load_tail(a + i, r), load_tail(b + i, r));
    if (_mm256_movemask_epi8(gt) != 0) return false;
  }
  return true;
}

bool v_equal(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i eq = _mm256_cmpeq_epi32(load8(a + i), load8(b + i));
    if (_mm256_movemask_epi8(eq) != -1) return false;
  }
  if (i < n) {
    const std::size_t r = n - i;
    const __m256i eq =
        _mm256_cmpeq_epi32(load_tail(a + i, r), load_tail(b + i, r));
    if (_mm256_movemask_epi8(eq) != -1) return false;
  }
  return true;
}

void v_cw_max(Exp* dst, const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    store8(dst + i, _mm256_max_epi32(load8(a + i), load8(b + i)));
  if (i < n) {
    const std::size_t r = n - i;
    const __m256i v =
        _mm256_max_epi32(load_tail(a + i, r), load_tail(b + i, r));
    _mm256_maskstore_epi32(dst + i, tail_mask(r), v);
  }
}

void v_cw_min(Exp* dst, const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    store8(dst + i, _mm256_min_epi32(load8(a + i), load8(b + i)));
  if (i < n) {
    const std::size_t r = n - i;
    const __m256i v =
        _mm256_min_epi32(load_tail(a + i, r), load_tail(b + i, r));
    _mm256_maskstore_epi32(dst + i, tail_mask(r), v);
  }
}

bool v_add_checked(Exp* dst, const Exp* a, const Exp* b, std::size_t n) {
  // Inputs are nonnegative, so a 32-bit wrap shows up as a negative sum:
  // OR all sums together and inspect the sign bits once at the end.
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i sum = _mm256_add_epi32(load8(a + i), load8(b + i));
    acc = _mm256_or_si256(acc, sum);
    store8(dst + i, sum);
  }
  if (i < n) {
    const std::size_t r = n - i;
    const __m256i sum =
        _mm256_add_epi32(load_tail(a + i, r), load_tail(b + i, r));
    acc = _mm256_or_si256(acc, sum);
    _mm256_maskstore_epi32(dst + i, tail_mask(r), sum);
  }
  return _mm256_movemask_ps(_mm256_castsi256_ps(acc)) == 0;
}

void v_sub_clamped(Exp* dst, const Exp* a, const Exp* f, std::size_t n) {
  // Differences of nonnegative int32 values cannot wrap, so plain subtract
  // followed by max-with-zero matches the scalar semantics exactly.
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_sub_epi32(load8(a + i), load8(f + i));
    store8(dst + i, _mm256_max_epi32(d, zero));
  }
  if (i < n) {
    const std::size_t r = n - i;
    const __m256i d =
        _mm256_sub_epi32(load_tail(a + i, r), load_tail(f + i, r));
    _mm256_maskstore_epi32(dst + i, tail_mask(r), _mm256_max_epi32(d, zero));
  }
}

std::size_t v_first_divisor(const Exp* rows, std::size_t count,
                            std::size_t stride, const Exp* f, std::size_t n) {
  for (std::size_t r = 0; r < count; ++r)
    if (v_divides(rows + r * stride, f, n)) return r;
  return npos;
}

constexpr Backend kAvx2 = {
    "avx2",        v_divides,       v_equal,          v_cw_max,
    v_cw_min,      v_add_checked,   v_sub_clamped,    v_first_divisor,
};

}  // namespace

const Backend& avx2_backend() { return kAvx2; }

}  // namespace monideal::kernels

#endif  // __AVX2__
