#include "quadpairs/kernels.hpp"

#include "quadpairs/errors.hpp"

#include <atomic>
#include <string>

namespace qp::kernels {

const char* isa_name(Isa isa) {
  switch (isa) {
  case Isa::Scalar: return "scalar";
  case Isa::Avx2: return "avx2";
  }
  return "?";
}

bool isa_supported(Isa isa) {
  switch (isa) {
  case Isa::Scalar: return true;
  case Isa::Avx2:
#if QP_HAVE_AVX2_KERNELS
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

namespace {

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

} // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa))
    throw PreconditionError(std::string("instruction set not supported on this CPU: ") +
                            isa_name(isa));
  active().store(isa, std::memory_order_relaxed);
}

void axpy_i32(std::span<std::int32_t> y, std::int32_t a,
              std::span<const std::int32_t> x) {
#if QP_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2)
    return avx2::axpy_i32(y, a, x);
#endif
  scalar::axpy_i32(y, a, x);
}

std::size_t count_equal_i32(std::span<const std::int32_t> x,
                            std::int32_t value) {
#if QP_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2)
    return avx2::count_equal_i32(x, value);
#endif
  return scalar::count_equal_i32(x, value);
}

std::pair<std::int32_t, std::int32_t>
minmax_i32(std::span<const std::int32_t> x) {
#if QP_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2)
    return avx2::minmax_i32(x);
#endif
  return scalar::minmax_i32(x);
}

void axpy_mod(std::span<std::uint32_t> y, std::uint32_t a,
              std::span<const std::uint32_t> x, std::uint32_t p) {
#if QP_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2)
    return avx2::axpy_mod(y, a, x, p);
#endif
  scalar::axpy_mod(y, a, x, p);
}

} // namespace qp::kernels
