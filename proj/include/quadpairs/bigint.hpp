#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qp {

using BigInt = mpz_class;

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
BigInt pow2(unsigned long e);

// Exact k-th root of x if x is a perfect k-th power, else nullopt.
std::optional<BigInt> exact_root(const BigInt& x, unsigned long k);

// If x == 2^e for some e >= 0, returns e.
std::optional<unsigned long> exact_log2(const BigInt& x);

std::string to_string(const BigInt& x);
BigInt parse_bigint(const std::string& text);

} // namespace qp
