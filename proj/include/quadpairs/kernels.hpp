#pragma once

// Data-parallel inner loops used by the orbit-pairing and prime-field matrix
// code. Each kernel has a scalar reference implementation and an AVX2
// variant; the public entry points dispatch at runtime on CPU support.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

namespace qp::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa detected_isa();

Isa active_isa();
// Throws PreconditionError if the CPU cannot run `isa`.
void set_active_isa(Isa isa);

// Moduli handed to axpy_mod must lie in [2, kMaxModulus] so that
// y + a*x fits a signed 32-bit lane.
inline constexpr std::uint32_t kMaxModulus = 32767;

// y[i] += a * x[i]
void axpy_i32(std::span<std::int32_t> y, std::int32_t a,
              std::span<const std::int32_t> x);

// Number of i with x[i] == value.
std::size_t count_equal_i32(std::span<const std::int32_t> x,
                            std::int32_t value);

// (min, max) over x; x must be non-empty.
std::pair<std::int32_t, std::int32_t>
minmax_i32(std::span<const std::int32_t> x);

// y[i] = (y[i] + a * x[i]) mod p, all operands reduced mod p.
void axpy_mod(std::span<std::uint32_t> y, std::uint32_t a,
              std::span<const std::uint32_t> x, std::uint32_t p);

namespace scalar {
void axpy_i32(std::span<std::int32_t> y, std::int32_t a,
              std::span<const std::int32_t> x);
std::size_t count_equal_i32(std::span<const std::int32_t> x,
                            std::int32_t value);
std::pair<std::int32_t, std::int32_t>
minmax_i32(std::span<const std::int32_t> x);
void axpy_mod(std::span<std::uint32_t> y, std::uint32_t a,
              std::span<const std::uint32_t> x, std::uint32_t p);
} // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
#define QP_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy_i32(std::span<std::int32_t> y, std::int32_t a,
              std::span<const std::int32_t> x);
std::size_t count_equal_i32(std::span<const std::int32_t> x,
                            std::int32_t value);
std::pair<std::int32_t, std::int32_t>
minmax_i32(std::span<const std::int32_t> x);
void axpy_mod(std::span<std::uint32_t> y, std::uint32_t a,
              std::span<const std::uint32_t> x, std::uint32_t p);
} // namespace avx2
#else
#define QP_HAVE_AVX2_KERNELS 0
#endif

} // namespace qp::kernels
