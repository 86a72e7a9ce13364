#include <doctest.h>

#include "bifree/bifree.hpp"
#include "support/oracles.hpp"

using namespace bifree;

namespace {

// Symmetric but generally non-commuting model.
FockModel<Rational> random_model(Rng& rng, int dim) {
  FockModel<Rational> model;
  model.dim = dim;
  model.t1 = DenseMatrix<Rational>(dim, dim);
  model.t2 = DenseMatrix<Rational>(dim, dim);
  for (int i = 0; i < dim; ++i) {
    model.f.push_back(random_rational(rng, 2, 2));
    model.g.push_back(random_rational(rng, 2, 2));
    for (int j = 0; j <= i; ++j) {
      model.t1(i, j) = model.t1(j, i) = random_rational(rng, 2, 2);
      model.t2(i, j) = model.t2(j, i) = random_rational(rng, 2, 2);
    }
  }
  model.lambda1 = random_rational(rng, 2, 2);
  model.lambda2 = random_rational(rng, 2, 2);
  return model;
}

}  // namespace

TEST_CASE("vacuum moments match the dense level-indexed space") {
  Rng rng(31);
  for (int dim = 0; dim <= 3; ++dim) {
    const auto model = random_model(rng, dim);
    const auto table = vacuum_moments(model, dim == 3 ? 4 : 5);
    for (int t = 0; t <= table.degree(); ++t)
      for (int m = t; m >= 0; --m) {
        const auto expected = oracle::vacuum_moment(model, m, t - m);
        CHECK(table(m, t - m) == expected);
        CHECK(vacuum_moment(model, m, t - m) == expected);
      }
  }
}

TEST_CASE("elementary operators") {
  const int dim = 2;
  const Vector<Rational> v{1, 2};
  auto vacuum = FockState<Rational>::vacuum(3);
  const auto created = apply_operator<Rational>(OperatorKind::create_left, v, vacuum, dim);
  CHECK(created.amplitude(Word{0}) == 1);
  CHECK(created.amplitude(Word{1}) == 2);
  const auto two = apply_operator<Rational>(OperatorKind::create_right, Vector<Rational>{0, 1}, created, dim);
  CHECK(two.amplitude(Word{0, 1}) == 1);
  CHECK(two.amplitude(Word{1, 1}) == 2);
  const auto back = apply_operator<Rational>(OperatorKind::annihilate_left, v, two, dim);
  CHECK(back.amplitude(Word{1}) == 1 * 1 + 2 * 2);

  DenseMatrix<Rational> swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1;
  const auto gauged = apply_operator<Rational>(OperatorKind::gauge_right, swap, two, dim);
  CHECK(gauged.amplitude(Word{0, 0}) == 1);
  CHECK(gauged.amplitude(Word{1, 0}) == 2);
  CHECK(apply_operator<Rational>(OperatorKind::gauge_left, swap, vacuum, dim).amplitudes().empty());
  CHECK(apply_operator<Rational>(OperatorKind::scalar, Rational(3), vacuum, dim).amplitude(Word{}) == 3);

  CHECK_THROWS_AS(apply_operator<Rational>(OperatorKind::create_left, Vector<Rational>{1}, vacuum, dim), ShapeError);
  CHECK_THROWS_AS(apply_operator<Rational>(OperatorKind::gauge_left, v, vacuum, dim), ShapeError);

  // Creation at the level cap is discarded.
  auto full = FockState<Rational>(1);
  full.add(Word{0}, 1);
  CHECK(apply_operator<Rational>(OperatorKind::create_left, v, full, dim).amplitudes().empty());
}

TEST_CASE("model validation") {
  Rng rng(32);
  auto model = random_model(rng, 2);
  CHECK_NOTHROW(model.validate());
  auto skew = model;
  skew.t1(0, 1) += 1;
  CHECK_THROWS_AS(skew.validate(), DomainError);
  auto short_f = model;
  short_f.f.pop_back();
  CHECK_THROWS_AS(short_f.validate(), ShapeError);
}

TEST_CASE("commutation and closed-form cumulants") {
  Rng rng(33);
  for (int dim = 1; dim <= 4; ++dim) {
    const auto model = random_commuting_model(rng, dim);
    const auto report = check_commutation(model);
    CHECK(report.commute);
    CHECK(report.gauge_residual == 0);
    const auto k = model_cumulants(model, 6);
    CHECK(moments_to_cumulants(vacuum_moments(model, 6)) == k);
    CHECK(k(1, 0) == model.lambda1);
    CHECK(k(2, 0) == dot(model.f, model.f));
    CHECK(k(1, 1) == dot(model.f, model.g));
  }
  auto broken = random_model(rng, 2);
  const auto report = check_commutation(broken);
  CHECK_FALSE(report.commute);
  CHECK_FALSE(report.violations.empty());
  CHECK_THROWS_AS(model_cumulants(broken, 4), CommutationError);
}

TEST_CASE("scalar pair") {
  FockModel<Rational> model;
  model.lambda1 = 2;
  model.lambda2 = -1;
  const auto m = vacuum_moments(model, 4);
  CHECK(m(2, 2) == 4);
  CHECK(m(1, 3) == -2);
  const auto k = model_cumulants(model, 4);
  CHECK(k(1, 0) == 2);
  CHECK(k(1, 1) == 0);
}

TEST_CASE("amplify and Levy marginal models") {
  Rng rng(34);
  const auto model = random_commuting_model(rng, 2);
  const auto k = model_cumulants(model, 5);
  const auto quarter = model_cumulants(amplify(model, 4), 5);
  for (int t = 1; t <= 5; ++t)
    for (int m = t; m >= 0; --m) CHECK(quarter(m, t - m) * 4 == k(m, t - m));
  CHECK_THROWS_AS(amplify(model, 2), DomainError);
  CHECK_NOTHROW(amplify(convert<double>(model), 2));

  const auto nine_quarters = model_cumulants(levy_marginal_model(model, Rational(9, 4)), 5);
  for (int t = 1; t <= 5; ++t)
    for (int m = t; m >= 0; --m) CHECK(nine_quarters(m, t - m) == Rational(9, 4) * k(m, t - m));
  CHECK_THROWS_AS(levy_marginal_model(model, Rational(-1)), DomainError);
  CHECK_THROWS_AS(levy_marginal_model(model, Rational(2)), DomainError);
}
