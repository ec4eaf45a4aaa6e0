#pragma once

// Inner loops shared by the greedy and search code: counting how many ids in
// an adjacency list are not yet flagged, and counting set flags. Each kernel
// has a scalar reference and vector variants; `kernels::dispatch()` picks the
// best one the running CPU supports.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "expsearch/graph.hpp"

namespace expsearch {

// One byte per node (0 = clear, 1 = set). The buffer carries trailing
// padding so vector gathers may load a full 32-bit word at any node offset.
class NodeFlags {
 public:
  static constexpr std::size_t kPadding = 8;

  NodeFlags() = default;
  explicit NodeFlags(std::size_t n) : bytes_(n + kPadding, 0), size_(n) {}

  std::size_t size() const { return size_; }
  bool test(NodeId v) const { return bytes_[v] != 0; }
  void set(NodeId v) { bytes_[v] = 1; }
  void reset(NodeId v) { bytes_[v] = 0; }
  void clear() { std::fill(bytes_.begin(), bytes_.end(), std::uint8_t{0}); }

  const std::uint8_t* data() const { return bytes_.data(); }
  std::span<const std::uint8_t> bytes() const { return {bytes_.data(), size_}; }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

namespace kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

// Number of ids in `ids` whose flag is clear.
std::size_t count_unflagged_scalar(std::span<const NodeId> ids, const NodeFlags& flags);
// Number of nonzero bytes.
std::size_t count_nonzero_scalar(std::span<const std::uint8_t> bytes);

#if defined(__x86_64__) || defined(_M_X64)
std::size_t count_unflagged_avx2(std::span<const NodeId> ids, const NodeFlags& flags);
std::size_t count_nonzero_avx2(std::span<const std::uint8_t> bytes);
#endif
#if defined(__aarch64__)
std::size_t count_nonzero_neon(std::span<const std::uint8_t> bytes);
#endif

// Whether `isa` can execute on this machine.
bool supported(Isa isa);

// Selected once per process: the widest supported ISA, unless the
// EXPSEARCH_FORCE_SCALAR environment variable is set to a non-empty value
// other than "0".
Isa dispatch();

std::size_t count_unflagged(std::span<const NodeId> ids, const NodeFlags& flags);
std::size_t count_nonzero(std::span<const std::uint8_t> bytes);

}  // namespace kernels
}  // namespace expsearch
