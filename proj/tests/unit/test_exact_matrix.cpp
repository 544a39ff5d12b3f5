#include "quadpairs/errors.hpp"
#include "quadpairs/exact_matrix.hpp"

#include <doctest.h>

#include <random>

using namespace qp;

namespace {

using Dense = std::vector<std::vector<mpq_class>>;

Dense to_dense(const ExactMatrix& m) {
  Dense d(m.dim(), std::vector<mpq_class>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) d[i][j] = m.at(i, j);
  return d;
}

// Textbook Gauss-Jordan rank over Q.
std::size_t reference_rank(Dense a) {
  const std::size_t n = a.size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t n, Field f, int density) {
  std::uniform_int_distribution<long> val(-4, 4);
  std::uniform_int_distribution<int> coin(0, 99);
  std::vector<long> e(n * n, 0);
  for (auto& x : e)
    if (coin(rng) < density) x = val(rng);
  return ExactMatrix::from_integers(n, e, f);
}

} // namespace

TEST_CASE("field construction") {
  CHECK(Field::prime(10007).characteristic() == 10007);
  CHECK_THROWS_AS(Field::prime(10), PreconditionError);
  CHECK_THROWS_AS(Field::prime(65537), PreconditionError);
  CHECK(to_string(Field::rationals()) == "Q");
  CHECK(to_string(Field::prime(5)) == "F_5");
}

TEST_CASE("rational entries stay canonical") {
  ExactMatrix a(2, Field::rationals());
  a.set(0, 1, mpq_class(1, 2));
  a.set(1, 0, mpq_class(2, 3));
  CHECK(a.at(0, 1) == mpq_class(1, 2));
  CHECK(a.at(1, 0) == mpq_class(2, 3));
  ExactMatrix b = a + a;
  CHECK(b.at(0, 1) == 1);
  CHECK(b.at(1, 0) == mpq_class(4, 3));
  CHECK(a - a == ExactMatrix(2, Field::rationals()));
  CHECK((a * a).at(0, 0) == mpq_class(1, 3));
  CHECK(a.minus_identity().at(0, 0) == -1);
}

TEST_CASE("product and rank agree with a reference implementation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const int density = 10 + static_cast<int>(rng() % 90);
    auto a = random_matrix(rng, n, Field::rationals(), density);
    auto b = random_matrix(rng, n, Field::rationals(), density);
    auto da = to_dense(a), db = to_dense(b), dc = to_dense(a * b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (std::size_t k = 0; k < n; ++k) s += da[i][k] * db[k][j];
        CHECK(dc[i][j] == s);
      }
    CHECK(a.rank() == reference_rank(da));
    // low-rank product of thin factors
    CHECK((a * b).rank() == reference_rank(dc));
  }
}

TEST_CASE("prime field rank matches rational rank for small integer matrices") {
  std::mt19937_64 rng(12);
  const Field fp = Field::prime(kDefaultPrime);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    std::vector<long> e(n * n);
    for (auto& x : e) x = static_cast<long>(rng() % 5) - 2;
    auto q = ExactMatrix::from_integers(n, e, Field::rationals());
    auto p = ExactMatrix::from_integers(n, e, fp);
    CHECK(q.rank() == p.rank());
    auto qq = q * q;
    auto pp = p * p;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), qq.at(i, j).get_num_mpz_t(), kDefaultPrime);
        CHECK(pp.at(i, j) == mpq_class(r));
      }
  }
}

TEST_CASE("rank over small characteristic") {
  // [[1,1],[1,-1]] has determinant -2
  const std::vector<long> e{1, 1, 1, -1};
  CHECK(ExactMatrix::from_integers(2, e, Field::rationals()).rank() == 2);
  CHECK(ExactMatrix::from_integers(2, e, Field::prime(2)).rank() == 1);
  CHECK(ExactMatrix::from_integers(2, e, Field::prime(3)).rank() == 2);
}

TEST_CASE("kronecker product") {
  const std::vector<long> a{1, 2, 3, 4}, b{0, 1, 1, 0};
  auto k = kronecker(ExactMatrix::from_integers(2, a, Field::rationals()),
                     ExactMatrix::from_integers(2, b, Field::rationals()));
  REQUIRE(k.dim() == 4);
  const long expected[4][4] = {{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(k.at(i, j) == expected[i][j]);
  CHECK(kronecker(ExactMatrix::identity(1, Field::rationals()),
                  ExactMatrix::from_integers(2, a, Field::rationals())) ==
        ExactMatrix::from_integers(2, a, Field::rationals()));
}

TEST_CASE("operations reject mixed fields and sizes") {
  auto q = ExactMatrix::identity(2, Field::rationals());
  auto p = ExactMatrix::identity(2, Field::prime(7));
  CHECK_THROWS_AS(q * p, FieldMismatchError);
  CHECK_THROWS_AS(kronecker(q, p), FieldMismatchError);
  CHECK_THROWS_AS(q + ExactMatrix::identity(3, Field::rationals()), PreconditionError);
  CHECK_THROWS_AS(q.at(2, 0), PreconditionError);
}
