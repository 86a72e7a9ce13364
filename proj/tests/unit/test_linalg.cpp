#include <doctest.h>

#include <cmath>

#include "bifree/bifree.hpp"

using namespace bifree;

TEST_CASE("matrix arithmetic") {
  DenseMatrix<Rational> a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  const auto inv = inverse(a);
  CHECK(a * inv == DenseMatrix<Rational>::identity(2));
  CHECK(inv(0, 1) == -1);
  CHECK(transpose(a) == a);
  CHECK(a * Vector<Rational>{1, -1} == Vector<Rational>{1, 0});
  CHECK(dot(Vector<Rational>{1, 2}, Vector<Rational>{3, 4}) == 11);
  CHECK(max_abs(a - scale(a, Rational(2))) == 2);
  CHECK_THROWS_AS(inverse(DenseMatrix<Rational>(2, 2)), SingularityError);
}

TEST_CASE("symmetric eigenproblem") {
  DenseMatrix<double> a(3, 3);
  a(0, 0) = 2;
  a(1, 1) = 2;
  a(2, 2) = -5;
  a(0, 1) = a(1, 0) = 1;
  const auto eig = eigen_symmetric(a);
  REQUIRE(eig.values.size() == 3);
  CHECK(eig.values[0] == doctest::Approx(-5));
  CHECK(eig.values[1] == doctest::Approx(1));
  CHECK(eig.values[2] == doctest::Approx(3));
  for (std::size_t k = 0; k < 3; ++k) {
    const auto av = a * eig.vectors[k];
    for (std::size_t i = 0; i < 3; ++i) CHECK(av[i] == doctest::Approx(eig.values[k] * eig.vectors[k][i]));
  }
  CHECK(spectral_radius_symmetric(a) == doctest::Approx(5));
}
