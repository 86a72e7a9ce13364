#include <doctest.h>

#include "bifree/bifree.hpp"

using namespace bifree;
using bifree::json::Json;

namespace {

template <class T, class Write, class Read>
void check_round_trip(const T& value, Write&& write, Read&& read) {
  const Json doc = write(value);
  const Json reparsed = json::parse(doc.dump(2));
  CHECK(read(reparsed) == value);
  CHECK(write(read(reparsed)).dump() == doc.dump());
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(json::scalar(Rational(-3, 6)) == "-1/2");
  CHECK(json::scalar(Rational(4)) == "4/1");
  CHECK(json::scalar(-0.0).dump() == "0.0");
  CHECK(json::to_scalar<Rational>(Json("3/9")) == Rational(1, 3));
  CHECK(json::to_scalar<Rational>(Json(0.5)) == Rational(1, 2));
  CHECK(json::to_scalar<Rational>(Json(0.1)) == Rational(1, 10));
  CHECK(json::to_scalar<double>(Json("1/4")) == 0.25);
  CHECK(json::to_scalar<Rational>(Json("-2")) == -2);
  CHECK_THROWS_AS(json::to_scalar<Rational>(Json("1/0")), ParseError);
  CHECK_THROWS_AS(json::to_scalar<Rational>(Json(true)), ParseError);
  CHECK_THROWS_AS(json::parse("{\"degree\": "), ParseError);
}

TEST_CASE("tables round trip") {
  Rng rng(51);
  const auto m = random_moment_table(rng, 4);
  check_round_trip(m, [](const auto& x) { return json::from_table(x); }, [](const Json& j) { return json::to_moment_table<Rational>(j); });
  const auto k = random_cumulant_table(rng, 4);
  check_round_trip(k, [](const auto& x) { return json::from_table(x); }, [](const Json& j) { return json::to_cumulant_table<Rational>(j); });
  const auto kd = convert<double>(k);
  check_round_trip(kd, [](const auto& x) { return json::from_table(x); }, [](const Json& j) { return json::to_cumulant_table<double>(j); });

  CHECK(json::is_moment_table(json::from_table(m)));
  CHECK_FALSE(json::is_moment_table(json::from_table(k)));
  CHECK(json::kind_of(json::from_table(kd), ScalarKind::rational) == ScalarKind::floating);
  CHECK(json::kind_of(Json::object(), ScalarKind::rational) == ScalarKind::rational);

  auto series = BivariateSeries<Rational>::constant(2, 1);
  series(1, 1) = Rational(2, 3);
  const auto doc = json::from_series(series);
  CHECK(json::to_series<Rational>(doc) == series);
}

TEST_CASE("malformed tables") {
  auto doc = json::from_table(bifree_poisson<Rational>(1, 1, 1, 2));
  auto duplicate = doc;
  duplicate["entries"].push_back(Json::array({1, 0, "1/1"}));
  CHECK_THROWS_AS(json::to_cumulant_table<Rational>(duplicate), ParseError);
  auto missing = doc;
  missing["entries"].erase(0);
  CHECK_THROWS_AS(json::to_cumulant_table<Rational>(missing), ParseError);
  auto outside = doc;
  outside["entries"].push_back(Json::array({3, 0, "1/1"}));
  CHECK_THROWS_AS(json::to_cumulant_table<Rational>(outside), ParseError);
  auto no_degree = doc;
  no_degree.erase("degree");
  CHECK_THROWS_AS(json::to_cumulant_table<Rational>(no_degree), ParseError);
}

TEST_CASE("partitions, measures, models and LH data round trip") {
  const auto p = Partition::from_blocks(4, {{1, 4}, {2, 3}});
  CHECK(json::from_partition(p).dump() == "[[1,4],[2,3]]");
  CHECK(json::to_partition(json::from_partition(p)) == p);
  CHECK_THROWS_AS(json::to_partition(Json::parse("[[1],[1]]")), ParseError);

  Rng rng(52);
  const auto mu = random_planar_measure(rng, 3);
  check_round_trip(mu, [](const auto& x) { return json::from_measure(x); }, [](const Json& j) { return json::to_planar_measure<Rational>(j); });
  const auto nu = random_measure(rng, 2);
  check_round_trip(nu, [](const auto& x) { return json::from_measure(x); }, [](const Json& j) { return json::to_measure<Rational>(j); });
  const auto model = random_commuting_model(rng, 2);
  check_round_trip(model, [](const auto& x) { return json::from_model(x); }, [](const Json& j) { return json::to_model<Rational>(j); });
  const auto data = random_lh_data(rng, 2);
  check_round_trip(data, [](const auto& x) { return json::from_lh_data(x); }, [](const Json& j) { return json::to_lh_data<Rational>(j); });

  auto bad_model = json::from_model(model);
  bad_model["T1"] = Json::array();
  CHECK_THROWS_AS(json::to_model<Rational>(bad_model), ParseError);
}
