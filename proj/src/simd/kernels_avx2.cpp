#include <immintrin.h>

#include "simd/kernels_impl.hpp"

namespace tapsp::simd::avx2 {

namespace {
inline __m256i load(const void* p) { return _mm256_loadu_si256(static_cast<const __m256i*>(p)); }
inline void store(void* p, __m256i v) { _mm256_storeu_si256(static_cast<__m256i*>(p), v); }
}  // namespace

void minplus_accumulate(Weight a, const Weight* b, Weight* c, std::size_t n) {
  const __m256i va = _mm256_set1_epi64x(a);
  const __m256i vinf = _mm256_set1_epi64x(kInf);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256i vb = load(b + j);
    const __m256i vc = load(c + j);
    // +inf operands stay +inf instead of drifting to kInf + a.
    __m256i sum = _mm256_add_epi64(va, vb);
    sum = _mm256_blendv_epi8(sum, vinf, _mm256_cmpeq_epi64(vb, vinf));
    const __m256i take = _mm256_cmpgt_epi64(vc, sum);
    store(c + j, _mm256_blendv_epi8(vc, sum, take));
  }
  scalar::minplus_accumulate(a, b + j, c + j, n - j);
}

void min_into(Weight* dst, const Weight* src, std::size_t n) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256i vd = load(dst + j);
    const __m256i vs = load(src + j);
    store(dst + j, _mm256_blendv_epi8(vd, vs, _mm256_cmpgt_epi64(vd, vs)));
  }
  scalar::min_into(dst + j, src + j, n - j);
}

void truncate_inplace(Weight* row, Weight t, std::size_t n) {
  const __m256i hi = _mm256_set1_epi64x(t);
  const __m256i lo = _mm256_set1_epi64x(-t);
  const __m256i vinf = _mm256_set1_epi64x(kInf);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256i v = load(row + j);
    const __m256i out = _mm256_or_si256(_mm256_cmpgt_epi64(v, hi), _mm256_cmpgt_epi64(lo, v));
    store(row + j, _mm256_blendv_epi8(v, vinf, out));
  }
  scalar::truncate_inplace(row + j, t, n - j);
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t w = 0;
  for (; w + 4 <= n; w += 4) store(dst + w, _mm256_or_si256(load(dst + w), load(src + w)));
  scalar::or_into(dst + w, src + w, n - w);
}

}  // namespace tapsp::simd::avx2
