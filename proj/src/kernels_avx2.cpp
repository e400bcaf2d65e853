#include "adjideal/kernels.hpp"

#include <cmath>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define ADJIDEAL_HAVE_X86 1
#endif

namespace adjideal::kernels {

#ifdef ADJIDEAL_HAVE_X86

namespace {

#define AVX2_FN __attribute__((target("avx2,fma")))

// Cephes exp: x = n·ln2 + r, Padé form on r.
AVX2_FN inline __m256d exp4(__m256d x) {
  const __m256d hi = _mm256_set1_pd(709.78);
  const __m256d lo = _mm256_set1_pd(-708.39);
  __m256d over = _mm256_cmp_pd(x, hi, _CMP_GT_OQ);
  __m256d under = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
  __m256d nan = _mm256_cmp_pd(x, x, _CMP_UNORD_Q);
  x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

  __m256d fx = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634073599)),
                               _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  x = _mm256_fnmadd_pd(fx, _mm256_set1_pd(6.93145751953125E-1), x);
  x = _mm256_fnmadd_pd(fx, _mm256_set1_pd(1.42860682030941723212E-6), x);
  __m256d xx = _mm256_mul_pd(x, x);
  __m256d p = _mm256_fmadd_pd(_mm256_set1_pd(1.26177193074810590878E-4), xx,
                              _mm256_set1_pd(3.02994407707441961300E-2));
  p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(9.99999999999999999910E-1));
  p = _mm256_mul_pd(p, x);
  __m256d q = _mm256_fmadd_pd(_mm256_set1_pd(3.00198505138664455042E-6), xx,
                              _mm256_set1_pd(2.52448340349684104192E-3));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.27265548208155028766E-1));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.00000000000000000009E0));
  __m256d r = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  r = _mm256_fmadd_pd(_mm256_set1_pd(2.0), r, _mm256_set1_pd(1.0));

  // 2^n through the 1.5·2^52 rounding trick; n ∈ [−1022, 1024].
  const __m256d magic = _mm256_set1_pd(6755399441055744.0);
  __m256i n = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(fx, magic)), _mm256_castpd_si256(magic));
  // Split the scale in two so n = 1024 and n = −1022 stay representable.
  __m256i half = _mm256_srai_epi32(n, 1);  // n small, the low dword carries it
  half = _mm256_and_si256(half, _mm256_set1_epi64x(0xffffffff));
  half = _mm256_sub_epi64(_mm256_xor_si256(half, _mm256_set1_epi64x(0x80000000)), _mm256_set1_epi64x(0x80000000));
  __m256i rest = _mm256_sub_epi64(n, half);
  __m256d s1 = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(half, _mm256_set1_epi64x(1023)), 52));
  __m256d s2 = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(rest, _mm256_set1_epi64x(1023)), 52));
  r = _mm256_mul_pd(_mm256_mul_pd(r, s1), s2);

  r = _mm256_blendv_pd(r, _mm256_set1_pd(HUGE_VAL), over);
  r = _mm256_blendv_pd(r, _mm256_setzero_pd(), under);
  r = _mm256_blendv_pd(r, _mm256_set1_pd(NAN), nan);
  return r;
}

// Cephes log with the P/Q rational form on the whole range; normal inputs only.
AVX2_FN inline __m256d log4(__m256d x) {
  __m256d zero_mask = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_EQ_OQ);
  __m256d neg_mask = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_LT_OQ);
  __m256d inf_mask = _mm256_cmp_pd(x, _mm256_set1_pd(HUGE_VAL), _CMP_EQ_OQ);
  __m256d nan_mask = _mm256_cmp_pd(x, x, _CMP_UNORD_Q);

  __m256i bits = _mm256_castpd_si256(x);
  __m256i ebits = _mm256_srli_epi64(bits, 52);
  const __m256d two52 = _mm256_set1_pd(4503599627370496.0);
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(ebits, _mm256_castpd_si256(two52))), two52);
  e = _mm256_sub_pd(e, _mm256_set1_pd(1022.0));
  __m256i mbits = _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000fffffffffffffLL)),
                                  _mm256_set1_epi64x(0x3fe0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mbits);  // [0.5, 1)

  __m256d small = _mm256_cmp_pd(m, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
  e = _mm256_sub_pd(e, _mm256_and_pd(small, _mm256_set1_pd(1.0)));
  __m256d xs = _mm256_blendv_pd(_mm256_sub_pd(m, _mm256_set1_pd(1.0)),
                                _mm256_sub_pd(_mm256_add_pd(m, m), _mm256_set1_pd(1.0)), small);

  __m256d z = _mm256_mul_pd(xs, xs);
  __m256d p = _mm256_fmadd_pd(_mm256_set1_pd(1.01875663804580931796E-4), xs,
                              _mm256_set1_pd(4.97494994976747001425E-1));
  p = _mm256_fmadd_pd(p, xs, _mm256_set1_pd(4.70579119878881725854E0));
  p = _mm256_fmadd_pd(p, xs, _mm256_set1_pd(1.44989225341610930846E1));
  p = _mm256_fmadd_pd(p, xs, _mm256_set1_pd(1.79368678507819816313E1));
  p = _mm256_fmadd_pd(p, xs, _mm256_set1_pd(7.70838733755885391666E0));
  __m256d q = _mm256_add_pd(xs, _mm256_set1_pd(1.12873587189167450590E1));
  q = _mm256_fmadd_pd(q, xs, _mm256_set1_pd(4.52279145837532221105E1));
  q = _mm256_fmadd_pd(q, xs, _mm256_set1_pd(8.29875266912776603211E1));
  q = _mm256_fmadd_pd(q, xs, _mm256_set1_pd(7.11544750618563894466E1));
  q = _mm256_fmadd_pd(q, xs, _mm256_set1_pd(2.31251620126765340583E1));
  __m256d y = _mm256_mul_pd(xs, _mm256_div_pd(_mm256_mul_pd(z, p), q));
  y = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, y);
  __m256d r = _mm256_add_pd(xs, y);
  r = _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);

  r = _mm256_blendv_pd(r, _mm256_set1_pd(-HUGE_VAL), zero_mask);
  r = _mm256_blendv_pd(r, _mm256_set1_pd(HUGE_VAL), inf_mask);
  r = _mm256_blendv_pd(r, _mm256_set1_pd(NAN), _mm256_or_pd(neg_mask, nan_mask));
  return r;
}

AVX2_FN double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

AVX2_FN double radial_sum(const double* s, const double* wt, std::size_t n, double w0, int zero_rate, int sigma,
                          double eps) {
  const __m256d vw0 = _mm256_set1_pd(w0);
  const __m256d rate = _mm256_set1_pd(static_cast<double>(zero_rate - sigma));
  const __m256d pw = _mm256_set1_pd(1.0 + eps);
  const __m256d km1 = _mm256_set1_pd(static_cast<double>(zero_rate - 1));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d sj = _mm256_loadu_pd(s + j);
    __m256d w = _mm256_add_pd(vw0, sj);
    __m256d e = _mm256_mul_pd(rate, _mm256_sub_pd(w, one));
    e = _mm256_fnmadd_pd(pw, log4(w), e);
    if (zero_rate > 1) {
      __m256d t = _mm256_sub_pd(one, exp4(_mm256_xor_pd(sj, sign)));
      e = _mm256_fmadd_pd(km1, log4(t), e);
    }
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(wt + j), exp4(e), acc);
  }
  double total = hsum(acc);
  for (; j < n; ++j) {
    double w = w0 + s[j];
    double e = (zero_rate - sigma) * (w - 1.0) - (1.0 + eps) * std::log(w);
    if (zero_rate > 1) e += (zero_rate - 1) * std::log(1.0 - std::exp(-s[j]));
    total += wt[j] * std::exp(e);
  }
  return total;
}

AVX2_FN void probe_row(const double* c, const double* u, std::size_t n, double c0, double a0, double nu, int sigma,
                       double eps, double* out) {
  const __m256d va0 = _mm256_set1_pd(a0), vnu = _mm256_set1_pd(nu), vc0 = _mm256_set1_pd(c0);
  const __m256d vs = _mm256_set1_pd(static_cast<double>(sigma)), pw = _mm256_set1_pd(1.0 + eps);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d lg = log4(_mm256_fmadd_pd(vnu, _mm256_loadu_pd(u + i), va0));
    __m256d v = _mm256_add_pd(vc0, _mm256_loadu_pd(c + i));
    v = _mm256_fnmadd_pd(vs, lg, v);
    v = _mm256_fnmadd_pd(pw, log4(_mm256_add_pd(one, lg)), v);
    _mm256_storeu_pd(out + i, v);
  }
  for (; i < n; ++i) {
    double lg = std::log(a0 + nu * u[i]);
    out[i] = c0 + c[i] - sigma * lg - (1.0 + eps) * std::log(1.0 + lg);
  }
}

AVX2_FN double sum_exp(const double* x, std::size_t n, double shift) {
  const __m256d vs = _mm256_set1_pd(shift);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, exp4(_mm256_sub_pd(_mm256_loadu_pd(x + i), vs)));
  double total = hsum(acc);
  for (; i < n; ++i) total += std::exp(x[i] - shift);
  return total;
}

AVX2_FN void exp_v(const double* x, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, exp4(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) out[i] = std::exp(x[i]);
}

AVX2_FN void log_v(const double* x, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, log4(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) out[i] = std::log(x[i]);
}

const KernelTable kAvx2{"avx2", radial_sum, probe_row, sum_exp, exp_v, log_v};

}  // namespace

const KernelTable* avx2_table() {
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok ? &kAvx2 : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace adjideal::kernels
