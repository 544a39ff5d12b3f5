#pragma once

// Dense square matrices over Q or a prime field F_p with exact arithmetic.
//
// Over Q the matrix is stored as integer numerators over one common
// denominator, kept reduced so that equal matrices have equal storage. Zero
// numerators do not allocate, which keeps sparse unipotent matrices cheap.

#include "quadpairs/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qp {

class Field {
public:
  enum class Kind { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  // p must be prime and at most kernels::kMaxModulus.
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::uint32_t characteristic() const { return p_; }

  friend bool operator==(const Field&, const Field&) = default;

private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 10007;

std::string to_string(const Field& f); // "Q" or "F_p"

class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t dim, Field field); // zero matrix
  ExactMatrix(const ExactMatrix& other);
  ExactMatrix(ExactMatrix&&) noexcept = default;
  ExactMatrix& operator=(const ExactMatrix& other);
  ExactMatrix& operator=(ExactMatrix&&) noexcept = default;

  static ExactMatrix identity(std::size_t dim, Field field);
  // Row-major integer entries, reduced mod p over a prime field.
  static ExactMatrix from_integers(std::size_t dim, std::span<const long> entries, Field field);
  static ExactMatrix from_integers(std::size_t dim, std::span<const BigInt> entries, Field field);

  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }

  mpq_class at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const mpq_class& value);

  // M - 1
  ExactMatrix minus_identity() const;

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzeros() const;
  std::size_t rank() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * dim_ + j; }
  static ExactMatrix combine(const ExactMatrix& a, const ExactMatrix& b, bool subtract);
  void normalize();
  std::uint32_t reduce(const mpq_class& v) const;

  std::size_t dim_ = 0;
  Field field_ = Field::rationals();
  std::vector<BigInt> num_; // over Q
  BigInt den_ = 1;
  std::vector<std::uint32_t> mod_; // over F_p
};

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

std::string to_string(const ExactMatrix& m);

} // namespace qp
