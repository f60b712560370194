#include <vector>

#include "doctest.h"
#include "lmg/errors.hpp"
#include "lmg/matrix.hpp"
#include "lmg/numeric.hpp"

using namespace lmg;

TEST_CASE("compensated sum recovers cancelled small terms") {
  const std::vector<double> v{1e16, 1.0, -1e16, 1.0};
  CHECK(compensated_sum(v) == 2.0);
  CompensatedSum s;
  for (int i = 0; i < 10; ++i) s.add(0.1);
  CHECK(s.value() == doctest::Approx(1.0).epsilon(1e-16));
}

TEST_CASE("compensated dot") {
  const std::vector<double> a{1e8, 1.0, -1e8}, b{1e8, 1.0, 1e8};
  CHECK(compensated_dot(a, b) == 1.0);
}

TEST_CASE("matrix basics") {
  Matrix a(2, 3);
  a(0, 1) = 2.0;
  a(1, 2) = -3.0;
  const Matrix t = a.transposed();
  CHECK(t.rows() == 3);
  CHECK(t(1, 0) == 2.0);
  CHECK(t(2, 1) == -3.0);
  const Matrix p = multiply(a, t);
  CHECK(p(0, 0) == 4.0);
  CHECK(p(1, 1) == 9.0);
  CHECK(p(0, 1) == 0.0);
  CHECK(max_abs(a) == 3.0);
  CHECK(multiply(Matrix::identity(2), a) == a);
}

TEST_CASE("symmetric matrix rejects asymmetric input") {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0 + 1e-16 * 4;
  CHECK_THROWS_AS(SymmetricMatrix{m}, DimensionError);
  CHECK_THROWS_AS(SymmetricMatrix{Matrix(2, 3)}, DimensionError);
  m(1, 0) = 1.0;
  CHECK(SymmetricMatrix{m}.order() == 2);
}
