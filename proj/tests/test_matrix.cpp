#include <doctest.h>

#include <algorithm>
#include <random>

#include "ballq/matrix.hpp"

using ballq::exact::Cyclotomic;
using ballq::exact::EchelonResult;
using ballq::exact::ExactMatrix;
using ballq::exact::Rational;
using ballq::exact::echelonize;
using ballq::exact::hermitian_inner;

namespace {

ExactMatrix rational_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Cyclotomic>> lifted;
  for (const auto& r : rows) {
    std::vector<Cyclotomic> row;
    for (long v : r) row.emplace_back(Rational(v));
    lifted.push_back(std::move(row));
  }
  return ExactMatrix::from_rows(lifted);
}

}  // namespace

TEST_CASE("echelonize identity and zero matrices") {
  const EchelonResult id = echelonize(ExactMatrix::identity(4));
  CHECK(id.rank == 4);
  CHECK(id.kernel.empty());
  CHECK(id.reduced == ExactMatrix::identity(4));

  const EchelonResult zero = echelonize(ExactMatrix(4, 4));
  CHECK(zero.rank == 0);
  REQUIRE(zero.kernel.size() == 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      CHECK(zero.kernel[i][j] ==
            (i == j ? Cyclotomic(Rational(1)) : Cyclotomic()));
}

TEST_CASE("echelonize two independent normal vectors") {
  // Two mirror normals from a real reflection arrangement.
  const ExactMatrix m = rational_matrix({{1, -1, 0, 0}, {0, 1, -1, 0}});
  const EchelonResult res = echelonize(m);
  CHECK(res.rank == 2);
  REQUIRE(res.kernel.size() == 2);

  // Every kernel vector is orthogonal to both rows (plain dot product since
  // the rows are real here), verified via brute-force evaluation.
  for (const auto& v : res.kernel) {
    for (size_t r = 0; r < 2; ++r) {
      Cyclotomic dot;
      for (size_t c = 0; c < 4; ++c) dot += m.at(r, c) * v[c];
      CHECK(dot.is_zero());
    }
  }

  // Cross-check rank via the 2x2 minors: some minor must be nonzero.
  bool nonzero_minor = false;
  for (size_t c1 = 0; c1 < 4 && !nonzero_minor; ++c1)
    for (size_t c2 = c1 + 1; c2 < 4 && !nonzero_minor; ++c2) {
      const Cyclotomic det =
          m.at(0, c1) * m.at(1, c2) - m.at(0, c2) * m.at(1, c1);
      nonzero_minor = !det.is_zero();
    }
  CHECK(nonzero_minor);
}

TEST_CASE("echelonize is idempotent and row-order independent") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<std::vector<long>> rows(3, std::vector<long>(4));
    for (auto& r : rows)
      for (auto& v : r) v = entry(rng);
    const ExactMatrix m = rational_matrix(rows);
    const EchelonResult once = echelonize(m);
    CHECK(echelonize(once.reduced).reduced == once.reduced);

    std::vector<std::vector<long>> shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(echelonize(rational_matrix(shuffled)).reduced == once.reduced);
  }
}

TEST_CASE("determinant and trace basics") {
  const ExactMatrix a = rational_matrix({{2, 1}, {1, 1}});
  CHECK(a.determinant() == Cyclotomic(Rational(1)));
  CHECK(a.trace() == Cyclotomic(Rational(3)));

  const ExactMatrix sing = rational_matrix({{1, 2}, {2, 4}});
  CHECK(sing.determinant().is_zero());

  // Complex entries: diag(i, i) has determinant -1.
  ExactMatrix d(2, 2);
  d.at(0, 0) = Cyclotomic::zeta(4);
  d.at(1, 1) = Cyclotomic::zeta(4);
  CHECK(d.determinant() == Cyclotomic(Rational(-1)));
  CHECK(d.is_scalar());
  CHECK_FALSE(d.is_identity());
}

TEST_CASE("unitary reflection matrix behaves correctly") {
  // Reflection in the hyperplane orthogonal to e1 - e2 (a transposition).
  const ExactMatrix r = rational_matrix(
      {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(r * r == ExactMatrix::identity(4));
  CHECK(r.conjugate_transpose() * r == ExactMatrix::identity(4));
  CHECK(r.trace() == Cyclotomic(Rational(2)));
  CHECK(ballq::exact::rank(r - ExactMatrix::identity(4)) == 1);
  CHECK(r.determinant() == Cyclotomic(Rational(-1)));
}

TEST_CASE("matrix keys are canonical") {
  const ExactMatrix a = rational_matrix({{1, 0}, {0, 1}});
  CHECK(a.key() == ExactMatrix::identity(2).key());
  const ExactMatrix b = rational_matrix({{1, 0}, {0, -1}});
  CHECK(a.key() != b.key());
}

TEST_CASE("hermitian inner product conjugates the left slot") {
  const std::vector<Cyclotomic> u{Cyclotomic::zeta(4), Cyclotomic(Rational(1))};
  const std::vector<Cyclotomic> v{Cyclotomic::zeta(4), Cyclotomic(Rational(0))};
  // conj(i)*i + conj(1)*0 = 1.
  CHECK(hermitian_inner(u, v) == Cyclotomic(Rational(1)));
  CHECK(hermitian_inner(u, u) == Cyclotomic(Rational(2)));
}

TEST_CASE("matrix-vector application matches multiplication") {
  const ExactMatrix m = rational_matrix({{1, 2, 0}, {0, 1, -1}});
  const std::vector<Cyclotomic> v{Cyclotomic(Rational(1)),
                                  Cyclotomic(Rational(3)),
                                  Cyclotomic(Rational(5))};
  const auto out = m.apply(v);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == Cyclotomic(Rational(7)));
  CHECK(out[1] == Cyclotomic(Rational(-2)));
}
