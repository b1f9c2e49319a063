#include "ffperm/kernels.hpp"

#include "ffperm/errors.hpp"

#if defined(FFPERM_HAVE_X86)
#include <immintrin.h>
#endif

namespace ffperm::kernels {

const char* isa_name(Isa isa)
{
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa)
{
  if (isa == Isa::Scalar)
    return true;
#if defined(FFPERM_HAVE_X86)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect_isa()
{
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

void mu_mask_xor_scalar(const std::uint32_t* tables, std::size_t stride, const std::uint32_t* partial,
                        std::size_t npts, std::uint32_t d0, std::size_t n, std::uint32_t* out)
{
  for (std::size_t i = 0; i < n; ++i)
    out[i] = 0;
  for (std::size_t j = 0; j < npts; ++j) {
    const std::uint32_t* t = tables + j * stride;
    const std::uint32_t p = partial[j];
    for (std::size_t i = 0; i < n; ++i)
      out[i] |= t[p ^ (d0 + static_cast<std::uint32_t>(i))];
  }
}

#if defined(FFPERM_HAVE_X86)
namespace {

__attribute__((target("avx2"))) void mu_mask_xor_avx2(const std::uint32_t* tables, std::size_t stride,
                                                      const std::uint32_t* partial, std::size_t npts,
                                                      std::uint32_t d0, std::size_t n, std::uint32_t* out)
{
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(d0 + i)), lane);
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t j = 0; j < npts; ++j) {
      const __m256i idx = _mm256_xor_si256(d, _mm256_set1_epi32(static_cast<int>(partial[j])));
      const int* base = reinterpret_cast<const int*>(tables + j * stride);
      acc = _mm256_or_si256(acc, _mm256_i32gather_epi32(base, idx, 4));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  if (i < n)
    mu_mask_xor_scalar(tables, stride, partial, npts, d0 + static_cast<std::uint32_t>(i), n - i, out + i);
}

}  // namespace
#endif

void mu_mask_xor(Isa isa, const std::uint32_t* tables, std::size_t stride, const std::uint32_t* partial,
                 std::size_t npts, std::uint32_t d0, std::size_t n, std::uint32_t* out)
{
#if defined(FFPERM_HAVE_X86)
  if (isa == Isa::Avx2) {
    if (!isa_available(Isa::Avx2))
      throw Error(Errc::Internal, "AVX2 kernel requested on a CPU without AVX2");
    mu_mask_xor_avx2(tables, stride, partial, npts, d0, n, out);
    return;
  }
#else
  if (isa == Isa::Avx2)
    throw Error(Errc::Internal, "AVX2 kernel not built for this target");
#endif
  mu_mask_xor_scalar(tables, stride, partial, npts, d0, n, out);
}

}  // namespace ffperm::kernels
