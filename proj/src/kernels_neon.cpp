#if defined(__aarch64__)
#include <arm_neon.h>

#include "expsearch/kernels.hpp"

namespace expsearch::kernels {

std::size_t count_nonzero_neon(std::span<const std::uint8_t> bytes) {
  std::size_t count = 0;
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t v = vld1q_u8(bytes.data() + i);
    // 0xFF where nonzero; shift to 1 and sum across lanes.
    const uint8x16_t nz = vshrq_n_u8(vtstq_u8(v, v), 7);
    count += vaddvq_u8(nz);
  }
  for (; i < n; ++i) count += bytes[i] != 0 ? 1 : 0;
  return count;
}

}  // namespace expsearch::kernels
#endif
