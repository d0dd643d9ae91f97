#include "gon/kernels/square_scan.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif

namespace gon::kernels {

#if defined(__AVX2__)

// Four candidates per step in doubles. With |D| < 2^50, D(y) and r * r are
// exact, and sqrt is correctly rounded, so round(sqrt(D))^2 == D holds exactly
// when D is a perfect square.
std::size_t square_scan_avx2(const SquareRow& row, std::int64_t* hit_y, std::int64_t* hit_root) {
  std::size_t hits = 0;
  const __m256d alpha = _mm256_set1_pd(static_cast<double>(row.alpha));
  const __m256d beta = _mm256_set1_pd(static_cast<double>(row.beta));
  const __m256d gamma = _mm256_set1_pd(static_cast<double>(row.gamma));
  const __m256d step = _mm256_set1_pd(4.0);
  const __m256d zero = _mm256_setzero_pd();
  const double y0 = static_cast<double>(row.y0);
  __m256d y = _mm256_set_pd(y0 + 3, y0 + 2, y0 + 1, y0);
  std::size_t k = 0;
  for (; k + 4 <= row.count; k += 4) {
    const __m256d d = _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(alpha, y), beta), y), gamma);
    const __m256d nonneg = _mm256_cmp_pd(d, zero, _CMP_GE_OQ);
    const __m256d r = _mm256_round_pd(_mm256_sqrt_pd(_mm256_max_pd(d, zero)), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    const __m256d eq = _mm256_and_pd(_mm256_cmp_pd(_mm256_mul_pd(r, r), d, _CMP_EQ_OQ), nonneg);
    int mask = _mm256_movemask_pd(eq);
    if (mask != 0) {
      alignas(32) double roots[4];
      _mm256_store_pd(roots, r);
      for (int lane = 0; lane < 4; ++lane) {
        if ((mask >> lane) & 1) {
          hit_y[hits] = row.y0 + static_cast<std::int64_t>(k) + lane;
          hit_root[hits] = static_cast<std::int64_t>(roots[lane]);
          ++hits;
        }
      }
    }
    y = _mm256_add_pd(y, step);
  }
  if (k < row.count) {
    SquareRow tail{row.alpha, row.beta, row.gamma, row.y0 + static_cast<std::int64_t>(k), row.count - k};
    hits += square_scan_scalar(tail, hit_y + hits, hit_root + hits);
  }
  return hits;
}

#else

std::size_t square_scan_avx2(const SquareRow& row, std::int64_t* hit_y, std::int64_t* hit_root) {
  return square_scan_scalar(row, hit_y, hit_root);
}

#endif

}  // namespace gon::kernels
