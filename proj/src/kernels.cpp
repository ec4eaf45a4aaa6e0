#include "expsearch/kernels.hpp"

#include <cstdlib>
#include <string>

namespace expsearch::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

std::size_t count_unflagged_scalar(std::span<const NodeId> ids, const NodeFlags& flags) {
  const std::uint8_t* f = flags.data();
  std::size_t count = 0;
  for (NodeId v : ids) count += f[v] == 0 ? 1 : 0;
  return count;
}

std::size_t count_nonzero_scalar(std::span<const std::uint8_t> bytes) {
  std::size_t count = 0;
  for (std::uint8_t b : bytes) count += b != 0 ? 1 : 0;
  return count;
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa select_isa() {
  if (const char* env = std::getenv("EXPSEARCH_FORCE_SCALAR")) {
    if (std::string(env) != "" && std::string(env) != "0") return Isa::kScalar;
  }
  if (supported(Isa::kAvx2)) return Isa::kAvx2;
  if (supported(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

}  // namespace

Isa dispatch() {
  static const Isa isa = select_isa();
  return isa;
}

std::size_t count_unflagged(std::span<const NodeId> ids, const NodeFlags& flags) {
#if defined(__x86_64__) || defined(_M_X64)
  // Short lists are not worth the gather setup.
  if (ids.size() >= 16 && dispatch() == Isa::kAvx2) return count_unflagged_avx2(ids, flags);
#endif
  return count_unflagged_scalar(ids, flags);
}

std::size_t count_nonzero(std::span<const std::uint8_t> bytes) {
  switch (dispatch()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::kAvx2: return count_nonzero_avx2(bytes);
#endif
#if defined(__aarch64__)
    case Isa::kNeon: return count_nonzero_neon(bytes);
#endif
    default: return count_nonzero_scalar(bytes);
  }
}

}  // namespace expsearch::kernels
