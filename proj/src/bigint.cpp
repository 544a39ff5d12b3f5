#include "quadpairs/bigint.hpp"

#include "quadpairs/errors.hpp"

namespace qp {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

std::optional<BigInt> exact_root(const BigInt& x, unsigned long k) {
  if (x < 0 || k == 0)
    return std::nullopt;
  BigInt r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) != 0)
    return r;
  return std::nullopt;
}

std::optional<unsigned long> exact_log2(const BigInt& x) {
  if (x <= 0)
    return std::nullopt;
  const auto low = mpz_scan1(x.get_mpz_t(), 0);
  if (mpz_sizeinbase(x.get_mpz_t(), 2) != low + 1)
    return std::nullopt;
  return static_cast<unsigned long>(low);
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  BigInt r;
  std::string body = text;
  if (!body.empty() && body.front() == '+')
    body.erase(0, 1);
  if (body.empty() || r.set_str(body, 10) != 0)
    throw InvalidArgument("not an integer: '" + text + "'");
  return r;
}

} // namespace qp
