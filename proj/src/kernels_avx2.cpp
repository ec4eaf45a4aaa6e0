// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "expsearch/kernels.hpp"

namespace expsearch::kernels {

std::size_t count_unflagged_avx2(std::span<const NodeId> ids, const NodeFlags& flags) {
  const auto* base = reinterpret_cast<const int*>(flags.data());
  const __m256i low_byte = _mm256_set1_epi32(0xFF);
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = _mm256_setzero_si256();

  std::size_t i = 0;
  const std::size_t n = ids.size();
  for (; i + 8 <= n; i += 8) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ids.data() + i));
    // Byte-granular gather: loads 4 bytes at flags[id]; padding keeps the
    // tail reads in bounds.
    __m256i w = _mm256_i32gather_epi32(base, idx, 1);
    w = _mm256_and_si256(w, low_byte);
    // Lanes equal to zero are unflagged; cmpeq yields -1 there.
    acc = _mm256_sub_epi32(acc, _mm256_cmpeq_epi32(w, zero));
  }
  alignas(32) std::uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t count = 0;
  for (std::uint32_t l : lanes) count += l;

  const std::uint8_t* f = flags.data();
  for (; i < n; ++i) count += f[ids[i]] == 0 ? 1 : 0;
  return count;
}

std::size_t count_nonzero_avx2(std::span<const std::uint8_t> bytes) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t count = 0;
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bytes.data() + i));
    const auto zero_mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
    count += 32 - static_cast<std::size_t>(std::popcount(zero_mask));
  }
  for (; i < n; ++i) count += bytes[i] != 0 ? 1 : 0;
  return count;
}

}  // namespace expsearch::kernels
