#include "quadpairs/kernels.hpp"

#include <algorithm>
#include <cassert>

namespace qp::kernels::scalar {

void axpy_i32(std::span<std::int32_t> y, std::int32_t a,
              std::span<const std::int32_t> x) {
  assert(y.size() == x.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] += a * x[i];
}

std::size_t count_equal_i32(std::span<const std::int32_t> x,
                            std::int32_t value) {
  std::size_t n = 0;
  for (auto v : x)
    n += (v == value);
  return n;
}

std::pair<std::int32_t, std::int32_t>
minmax_i32(std::span<const std::int32_t> x) {
  assert(!x.empty());
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return {*lo, *hi};
}

void axpy_mod(std::span<std::uint32_t> y, std::uint32_t a,
              std::span<const std::uint32_t> x, std::uint32_t p) {
  assert(y.size() == x.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(y[i]) +
         static_cast<std::uint64_t>(a) * x[i]) % p);
}

} // namespace qp::kernels::scalar
