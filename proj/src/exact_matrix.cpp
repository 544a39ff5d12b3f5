#include "quadpairs/exact_matrix.hpp"

#include "quadpairs/errors.hpp"
#include "quadpairs/kernels.hpp"

#include <algorithm>
#include <sstream>

namespace qp {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is0(const BigInt& x) { return mpz_sgn(x.get_mpz_t()) == 0; }

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

void require_compatible(const ExactMatrix& a, const ExactMatrix& b, bool same_dim) {
  if (!(a.field() == b.field()))
    throw FieldMismatchError("matrices over " + to_string(a.field()) + " and " +
                             to_string(b.field()));
  if (same_dim && a.dim() != b.dim())
    throw PreconditionError("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
}

} // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (p > kernels::kMaxModulus)
    throw PreconditionError("field characteristic must be at most " +
                            std::to_string(kernels::kMaxModulus));
  return Field(Kind::Prime, p);
}

std::string to_string(const Field& f) {
  return f.is_rational() ? "Q" : "F_" + std::to_string(f.characteristic());
}

ExactMatrix::ExactMatrix(std::size_t dim, Field field) : dim_(dim), field_(field) {
  if (field_.is_rational()) num_.resize(dim * dim);
  else mod_.assign(dim * dim, 0);
}

// Copying a zero mpz allocates, so only the nonzero numerators are copied.
ExactMatrix::ExactMatrix(const ExactMatrix& other)
    : dim_(other.dim_), field_(other.field_), den_(other.den_), mod_(other.mod_) {
  num_.resize(other.num_.size());
  for (std::size_t k = 0; k < num_.size(); ++k)
    if (!is0(other.num_[k])) num_[k] = other.num_[k];
}

ExactMatrix& ExactMatrix::operator=(const ExactMatrix& other) {
  if (this != &other) {
    ExactMatrix copy(other);
    *this = std::move(copy);
  }
  return *this;
}

ExactMatrix ExactMatrix::minus_identity() const {
  ExactMatrix c(*this);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (field_.is_rational()) {
      c.num_[index(i, i)] -= den_;
    } else {
      auto& x = c.mod_[index(i, i)];
      x = (x + field_.characteristic() - 1) % field_.characteristic();
    }
  }
  c.normalize();
  return c;
}

ExactMatrix ExactMatrix::identity(std::size_t dim, Field field) {
  ExactMatrix m(dim, field);
  for (std::size_t i = 0; i < dim; ++i) {
    if (field.is_rational()) m.num_[m.index(i, i)] = 1;
    else m.mod_[m.index(i, i)] = 1;
  }
  return m;
}

ExactMatrix ExactMatrix::from_integers(std::size_t dim, std::span<const long> entries, Field field) {
  std::vector<BigInt> big(entries.begin(), entries.end());
  return from_integers(dim, big, field);
}

ExactMatrix ExactMatrix::from_integers(std::size_t dim, std::span<const BigInt> entries,
                                       Field field) {
  if (entries.size() != dim * dim)
    throw PreconditionError("expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(entries.size()));
  ExactMatrix m(dim, field);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (field.is_rational()) {
      m.num_[k] = entries[k];
    } else {
      BigInt r;
      mpz_fdiv_r_ui(r.get_mpz_t(), entries[k].get_mpz_t(), field.characteristic());
      m.mod_[k] = static_cast<std::uint32_t>(r.get_ui());
    }
  }
  m.normalize();
  return m;
}

std::uint32_t ExactMatrix::reduce(const mpq_class& v) const {
  const std::uint32_t p = field_.characteristic();
  BigInt n, d;
  mpz_fdiv_r_ui(n.get_mpz_t(), v.get_num_mpz_t(), p);
  mpz_fdiv_r_ui(d.get_mpz_t(), v.get_den_mpz_t(), p);
  if (d == 0)
    throw PreconditionError("denominator vanishes in " + to_string(field_));
  return mul_mod(static_cast<std::uint32_t>(n.get_ui()),
                 inverse_mod(static_cast<std::uint32_t>(d.get_ui()), p), p);
}

mpq_class ExactMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw PreconditionError("matrix index out of range");
  if (!field_.is_rational()) return mpq_class(mod_[index(i, j)]);
  mpq_class v(num_[index(i, j)], den_);
  v.canonicalize();
  return v;
}

void ExactMatrix::set(std::size_t i, std::size_t j, const mpq_class& value) {
  if (i >= dim_ || j >= dim_) throw PreconditionError("matrix index out of range");
  if (!field_.is_rational()) {
    mod_[index(i, j)] = reduce(value);
    return;
  }
  if (den_ == 1 && value.get_den() == 1) {
    num_[index(i, j)] = value.get_num();
    return;
  }
  BigInt l;
  mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), value.get_den_mpz_t());
  if (l != den_) {
    const BigInt scale = l / den_;
    for (auto& x : num_)
      if (!is0(x)) x *= scale;
    den_ = l;
  }
  num_[index(i, j)] = value.get_num() * (l / value.get_den());
  normalize();
}

void ExactMatrix::normalize() {
  if (!field_.is_rational()) return;
  BigInt g = den_;
  for (const auto& x : num_) {
    if (g == 1) break;
    if (!is0(x)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (den_ < 0) g = -g;
  if (g == 1) return;
  for (auto& x : num_)
    if (!is0(x)) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

bool ExactMatrix::is_zero() const {
  if (field_.is_rational())
    return std::all_of(num_.begin(), num_.end(), is0);
  return std::all_of(mod_.begin(), mod_.end(), [](std::uint32_t x) { return x == 0; });
}

bool ExactMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const bool diag = i == j;
      if (field_.is_rational()) {
        const BigInt& x = num_[index(i, j)];
        if (diag ? x != den_ : !is0(x)) return false;
      } else if (mod_[index(i, j)] != (diag ? 1u : 0u)) {
        return false;
      }
    }
  return true;
}

std::size_t ExactMatrix::nonzeros() const {
  if (field_.is_rational())
    return static_cast<std::size_t>(
        std::count_if(num_.begin(), num_.end(), [](const BigInt& x) { return !is0(x); }));
  return static_cast<std::size_t>(
      std::count_if(mod_.begin(), mod_.end(), [](std::uint32_t x) { return x != 0; }));
}

std::size_t ExactMatrix::rank() const {
  const std::size_t n = dim_;
  std::size_t rank = 0;
  if (field_.is_rational()) {
    // Fraction-free elimination; rows are divided by their content to keep
    // entries small.
    std::vector<BigInt> a;
    std::size_t rows = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool nonzero = false;
      for (std::size_t j = 0; j < n && !nonzero; ++j) nonzero = !is0(num_[i * n + j]);
      if (!nonzero) continue;
      a.resize((rows + 1) * n);
      for (std::size_t j = 0; j < n; ++j)
        if (!is0(num_[i * n + j])) a[rows * n + j] = num_[i * n + j];
      ++rows;
    }
    BigInt g, t;
    for (std::size_t c = 0; c < n && rank < rows; ++c) {
      std::size_t piv = rank;
      while (piv < rows && is0(a[piv * n + c])) ++piv;
      if (piv == rows) continue;
      if (piv != rank)
        for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[rank * n + k]);
      const BigInt p = a[rank * n + c];
      for (std::size_t r = rank + 1; r < rows; ++r) {
        if (is0(a[r * n + c])) continue;
        const BigInt f = a[r * n + c];
        g = 0;
        for (std::size_t k = c; k < n; ++k) {
          BigInt& x = a[r * n + k];
          const BigInt& y = a[rank * n + k];
          if (is0(x) && is0(y)) continue;
          x *= p;
          if (!is0(y)) {
            t = f * y;
            x -= t;
          }
          if (!is0(x)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        }
        if (g > 1)
          for (std::size_t k = c; k < n; ++k)
            if (!is0(a[r * n + k]))
              mpz_divexact(a[r * n + k].get_mpz_t(), a[r * n + k].get_mpz_t(), g.get_mpz_t());
      }
      ++rank;
    }
    return rank;
  }
  const std::uint32_t p = field_.characteristic();
  std::vector<std::uint32_t> a = mod_;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != rank) std::swap_ranges(a.begin() + static_cast<long>(piv * n),
                                      a.begin() + static_cast<long>(piv * n + n),
                                      a.begin() + static_cast<long>(rank * n));
    std::span<std::uint32_t> prow(a.data() + rank * n, n);
    const std::uint32_t inv = inverse_mod(prow[c], p);
    for (auto& x : prow) x = mul_mod(x, inv, p);
    for (std::size_t r = rank + 1; r < n; ++r) {
      const std::uint32_t f = a[r * n + c];
      if (f == 0) continue;
      kernels::axpy_mod(std::span<std::uint32_t>(a.data() + r * n, n), p - f, prow, p);
    }
    ++rank;
  }
  return rank;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field_ == b.field_) || a.dim_ != b.dim_) return false;
  if (a.field_.is_rational()) return a.den_ == b.den_ && a.num_ == b.num_;
  return a.mod_ == b.mod_;
}

ExactMatrix ExactMatrix::combine(const ExactMatrix& a, const ExactMatrix& b, bool subtract) {
  require_compatible(a, b, true);
  const std::size_t n = a.dim_;
  ExactMatrix c(n, a.field_);
  if (a.field_.is_rational()) {
    mpz_lcm(c.den_.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
    const BigInt sa = c.den_ / a.den_, sb = c.den_ / b.den_;
    for (std::size_t k = 0; k < n * n; ++k) {
      if (!is0(a.num_[k])) c.num_[k] = a.num_[k] * sa;
      if (is0(b.num_[k])) continue;
      if (subtract) mpz_submul(c.num_[k].get_mpz_t(), b.num_[k].get_mpz_t(), sb.get_mpz_t());
      else mpz_addmul(c.num_[k].get_mpz_t(), b.num_[k].get_mpz_t(), sb.get_mpz_t());
    }
    c.normalize();
    return c;
  }
  const std::uint32_t p = a.field_.characteristic();
  for (std::size_t k = 0; k < n * n; ++k)
    c.mod_[k] = (a.mod_[k] + (subtract ? (p - b.mod_[k]) % p : b.mod_[k])) % p;
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  return ExactMatrix::combine(a, b, false);
}
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  return ExactMatrix::combine(a, b, true);
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_compatible(a, b, true);
  const std::size_t n = a.dim_;
  ExactMatrix c(n, a.field_);
  if (a.field_.is_rational()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const BigInt& x = a.num_[i * n + k];
        if (is0(x)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const BigInt& y = b.num_[k * n + j];
          if (!is0(y)) mpz_addmul(c.num_[i * n + j].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        }
      }
    c.den_ = a.den_ * b.den_;
    c.normalize();
    return c;
  }
  const std::uint32_t p = a.field_.characteristic();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint32_t x = a.mod_[i * n + k];
      if (x == 0) continue;
      kernels::axpy_mod(std::span<std::uint32_t>(c.mod_.data() + i * n, n), x,
                        std::span<const std::uint32_t>(b.mod_.data() + k * n, n), p);
    }
  return c;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  require_compatible(a, b, false);
  const std::size_t na = a.dim_, nb = b.dim_, n = na * nb;
  ExactMatrix c(n, a.field_);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < na; ++j1)
      for (std::size_t i2 = 0; i2 < nb; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          const std::size_t k = (i1 * nb + i2) * n + (j1 * nb + j2);
          if (a.field_.is_rational()) {
            const BigInt& x = a.num_[i1 * na + j1];
            const BigInt& y = b.num_[i2 * nb + j2];
            if (!is0(x) && !is0(y)) c.num_[k] = x * y;
          } else {
            c.mod_[k] = mul_mod(a.mod_[i1 * na + j1], b.mod_[i2 * nb + j2],
                                a.field_.characteristic());
          }
        }
  if (a.field_.is_rational()) {
    c.den_ = a.den_ * b.den_;
    c.normalize();
  }
  return c;
}

std::string to_string(const ExactMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? "," : "") << m.at(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

} // namespace qp
