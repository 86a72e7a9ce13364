#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "bifree/bifree.hpp"
#include "support/oracles.hpp"

using namespace bifree;

namespace {

template <class Table>
double max_gap(const Table& x, const Table& y, int from = 1) {
  double worst = 0.0;
  for (int t = from; t <= std::min(x.degree(), y.degree()); ++t)
    for (int m = t; m >= 0; --m) worst = std::max(worst, std::fabs(to_double(x(m, t - m)) - to_double(y(m, t - m))));
  return worst;
}

template <Scalar S>
CumulantTable<S> times(const CumulantTable<S>& k, int copies) {
  auto out = k;
  for (int i = 1; i < copies; ++i) out = bifree_convolve(out, k);
  return out;
}

std::vector<DiscretePlanarMeasure<Rational>> sample_measures(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<DiscretePlanarMeasure<Rational>> out;
  for (int i = 0; i < count; ++i) out.push_back(random_planar_measure(rng, 1 + i % 4));
  return out;
}

std::vector<FockModel<Rational>> sample_models(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<FockModel<Rational>> out;
  for (int i = 0; i < count; ++i) out.push_back(random_commuting_model(rng, 1 + i % 4));
  return out;
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("Catalan cardinalities") {
    for (int n = 1; n <= 9; ++n) CHECK(static_cast<std::int64_t>(enumerate_nc(n).size()) == oracle::catalan(n));
  }

  TEST_CASE("Moebius sums vanish at the top") {
    for (int n = 2; n <= 7; ++n) {
      const auto& mu = mobius_to_top(n);
      CHECK(std::accumulate(mu.begin(), mu.end(), std::int64_t{0}) == 0);
    }
  }

  TEST_CASE("mu(0_n, 1_n) against the lattice recursion") {
    for (int n = 2; n <= 7; ++n) {
      const auto value = mobius_nc(Partition::zero(n), Partition::one(n));
      const std::int64_t sign = (n - 1) % 2 ? -1 : 1;
      CHECK(value == sign * oracle::catalan(n - 1));
      if (n <= 5) {
        oracle::Blocks zero, one(1);
        for (int k = 1; k <= n; ++k) {
          zero.push_back({k});
          one[0].push_back(k);
        }
        CHECK(value == oracle::lattice_mobius(zero, one, n));
      }
    }
  }

  TEST_CASE("relabelling is a bijection onto BNC(chi)") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      std::vector<Face> labels;
      for (int k = 0; k < n; ++k) labels.push_back(rng() % 2 ? Face::left : Face::right);
      const ChiMap chi(labels);
      const auto bnc = enumerate_bnc(chi);
      std::set<Partition> images;
      for (const auto& entry : bnc) images.insert(entry.image);
      CHECK(bnc.size() == enumerate_nc(n).size());
      CHECK(images.size() == bnc.size());
    }
  }
}

TEST_SUITE("cumulants") {
  TEST_CASE("exact round trip") {
    Rng rng(102);
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_moment_table(rng, 1 + trial % 6);
      CHECK(cumulants_to_moments(moments_to_cumulants(m)) == m);
    }
  }

  TEST_CASE("shift covariance") {
    for (const auto& mu : sample_measures(103, 5)) {
      const Rational c(3, 2);
      std::vector<PlanarAtom<Rational>> shifted;
      for (const auto& a : mu.atoms()) shifted.push_back({a.s + c, a.t, a.w});
      const auto k = moments_to_cumulants(moment_table(mu, 6));
      const auto k_shift = moments_to_cumulants(moment_table(DiscretePlanarMeasure<Rational>::from_atoms(shifted), 6));
      CHECK(k_shift(1, 0) == k(1, 0) + c);
      CHECK(k_shift(0, 1) == k(0, 1));
      for (int t = 2; t <= 6; ++t)
        for (int m = t; m >= 0; --m) CHECK(k_shift(m, t - m) == k(m, t - m));
    }
  }

  TEST_CASE("mixed cumulants vanish: coloured partition sums") {
    Rng rng(104);
    for (int trial = 0; trial < 3; ++trial) {
      const auto k1 = random_cumulant_table(rng, 5);
      const auto k2 = random_cumulant_table(rng, 5);
      const auto m = cumulants_to_moments(bifree_convolve(k1, k2));
      for (int t = 1; t <= 5; ++t)
        for (int a = t; a >= 0; --a) CHECK(m(a, t - a) == oracle::coloured_moment(a, t - a, k1, k2));
    }
  }

  TEST_CASE("chi independence for commuting pairs") {
    for (const auto& mu : sample_measures(105, 4)) {
      const auto m = moment_table(mu, 5);
      for (int t = 1; t <= 5; ++t)
        for (int a = t; a >= 0; --a) CHECK(verify_chi_independence(m, a, t - a, 0.0));
    }
    for (const auto& model : sample_models(106, 3)) {
      const auto m = vacuum_moments(model, 5);
      for (int t = 1; t <= 5; ++t)
        for (int a = t; a >= 0; --a) CHECK(verify_chi_independence(m, a, t - a, 0.0));
    }
  }
}

TEST_SUITE("measures") {
  TEST_CASE("product measures have no mixed cumulants") {
    Rng rng(107);
    for (int trial = 0; trial < 4; ++trial) {
      const auto nu1 = random_measure(rng, 2);
      const auto nu2 = random_measure(rng, 3);
      const auto mu = product_measure(nu1, nu2);
      for (int t = 0; t <= 8; ++t)
        for (int m = t; m >= 0; --m) CHECK(measure_moment(mu, m, t - m) == measure_moment(nu1, m) * measure_moment(nu2, t - m));
      const auto k = moments_to_cumulants(moment_table(mu, 6));
      for (int t = 2; t <= 6; ++t)
        for (int m = t - 1; m >= 1; --m) CHECK(k(m, t - m) == 0);
      const auto moments = moment_table(mu, 6);
      CHECK(marginal_moments(moments, Face::left) == moment_sequence(marginal(mu, Axis::first), 6));
      CHECK(marginal_moments(moments, Face::right) == moment_sequence(marginal(mu, Axis::second), 6));
    }
  }
}

TEST_SUITE("series") {
  TEST_CASE("reciprocal") {
    Rng rng(108);
    for (int trial = 0; trial < 5; ++trial) {
      BivariateSeries<Rational> f(6);
      for (int t = 0; t <= 6; ++t)
        for (int m = t; m >= 0; --m) f(m, t - m) = random_rational(rng, 3, 3);
      f(0, 0) = 1;
      CHECK(series_multiply(f, series_reciprocal(f)) == BivariateSeries<Rational>::constant(6, 1));
    }
  }

  TEST_CASE("Voiculescu identity on measures and models") {
    for (const auto& mu : sample_measures(109, 3)) CHECK(verify_voiculescu_identity(moment_table(mu, 8)) == 0);
    for (const auto& model : sample_models(110, 3)) CHECK(verify_voiculescu_identity(vacuum_moments(model, 8)) == 0);
  }

  TEST_CASE("R-transform linearity and marginal projection") {
    Rng rng(111);
    const auto k1 = random_cumulant_table(rng, 6);
    const auto k2 = random_cumulant_table(rng, 6);
    CHECK(r_transform_series(bifree_convolve(k1, k2)) == r_transform_series(k1) + r_transform_series(k2));

    const auto mu = random_planar_measure(rng, 3);
    const auto moments = moment_table(mu, 6);
    const auto r = r_transform_series(moments_to_cumulants(moments));
    const auto left = free_cumulants(marginal_moments(moments, Face::left));
    const auto right = free_cumulants(marginal_moments(moments, Face::right));
    for (int k = 1; k <= 6; ++k) {
      CHECK(r(k, 0) == left[static_cast<std::size_t>(k)]);
      CHECK(r(0, k) == right[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_SUITE("convolution") {
  TEST_CASE("commutative and associative") {
    Rng rng(112);
    const auto a = random_cumulant_table(rng, 8);
    const auto b = random_cumulant_table(rng, 8);
    const auto c = random_cumulant_table(rng, 8);
    CHECK(bifree_convolve(a, b) == bifree_convolve(b, a));
    CHECK(bifree_convolve(bifree_convolve(a, b), c) == bifree_convolve(a, bifree_convolve(b, c)));
  }

  TEST_CASE("marginal consistency") {
    const auto measures = sample_measures(113, 4);
    for (std::size_t i = 0; i + 1 < measures.size(); ++i) {
      const auto m1 = moment_table(measures[i], 6);
      const auto m2 = moment_table(measures[i + 1], 6);
      const auto sum = cumulants_to_moments(bifree_convolve(moments_to_cumulants(m1), moments_to_cumulants(m2)));
      for (Face face : {Face::left, Face::right})
        CHECK(marginal_moments(sum, face) ==
              free_convolve_marginal(marginal_moments(m1, face), marginal_moments(m2, face), 6));
    }
  }

  TEST_CASE("semigroup interpolation") {
    Rng rng(114);
    const auto k = random_cumulant_table(rng, 6);
    for (int q = 1; q <= 4; ++q)
      for (int p = 1; p <= 3; ++p) {
        const auto piece = semigroup_scale(k, Rational(p, q), true).table;
        CHECK(times(piece, q) == semigroup_scale(k, Rational(p), true).table);
      }
  }
}

TEST_SUITE("fock") {
  TEST_CASE("truncation exactness") {
    const auto models = sample_models(115, 3);
    for (const auto& model : models)
      for (int t = 0; t <= 6; ++t)
        for (int m = t; m >= 0; --m) CHECK(vacuum_moment(model, m, t - m) == vacuum_moment(model, m, t - m, t + 2));
  }

  TEST_CASE("commuting models commute on the truncated space") {
    Rng rng(116);
    for (const auto& model : sample_models(117, 4)) {
      REQUIRE(check_commutation(model).commute);
      for (int trial = 0; trial < 50 / 4 + 1; ++trial) {
        FockState<Rational> state(5);
        for (int entries = 0; entries < 6; ++entries) {
          Word word;
          const int length = static_cast<int>(rng() % 5);
          for (int i = 0; i < length; ++i) word.push_back(static_cast<std::uint8_t>(rng() % static_cast<unsigned>(model.dim)));
          state.add(word, random_rational(rng, 3, 3));
        }
        CHECK(apply_a(model, apply_b(model, state)) == apply_b(model, apply_a(model, state)));
      }
    }
  }

  TEST_CASE("cumulants from moments equal the closed form") {
    for (const auto& model : sample_models(118, 8)) CHECK(moments_to_cumulants(vacuum_moments(model, 6)) == model_cumulants(model, 6));
  }

  TEST_CASE("infinite divisibility witness") {
    for (const auto& model : sample_models(119, 3)) {
      const auto k = model_cumulants(model, 6);
      CHECK(times(model_cumulants(amplify(model, 4), 6), 4) == k);
      CHECK(times(model_cumulants(amplify(model, 1), 6), 1) == k);
      const auto kd = convert<double>(k);
      for (int n : {2, 3, 5}) CHECK(max_gap(times(model_cumulants(amplify(convert<double>(model), n), 6), n), kd) < 1e-12);
    }
  }

  TEST_CASE("Levy marginal additivity") {
    for (const auto& model : sample_models(120, 3)) {
      const Rational s(9, 25), t(16, 25);
      const auto ks = model_cumulants(levy_marginal_model(model, s), 6);
      const auto kt = model_cumulants(levy_marginal_model(model, t), 6);
      CHECK(model_cumulants(levy_marginal_model(model, Rational(s + t)), 6) == bifree_convolve(ks, kt));
    }
  }
}

TEST_SUITE("levy_hincin") {
  TEST_CASE("commuting models are infinitely divisible") {
    for (const auto& model : sample_models(121, 6)) {
      const auto k = convert<double>(model_cumulants(model, 8));
      for (int d = 1; d <= 3; ++d) {
        CHECK(check_cpsd(k, d).passed);
        CHECK(check_cond_bounded(k, d).passed);
      }
    }
  }

  TEST_CASE("validated data gives CPSD tables and bounded shifts") {
    Rng rng(122);
    for (int trial = 0; trial < 8; ++trial) {
      const auto data = random_lh_data(rng, 1 + trial % 4);
      REQUIRE(validate_lh(data).passed());
      const auto k = convert<double>(lh_to_cumulants(data, 8));
      CHECK(check_cpsd(k, 3).passed);
      const auto bounded = check_cond_bounded(k, 3);
      CHECK(bounded.passed);
      double support = 0.0;
      for (const auto* mu : {&data.rho1, &data.rho2})
        for (const auto& a : mu->atoms()) support = std::max({support, std::fabs(to_double(a.s)), std::fabs(to_double(a.t))});
      CHECK(bounded.witness >= support - 1e-8);
    }
  }

  TEST_CASE("overlapping formulas agree on validated data") {
    Rng rng(123);
    for (int trial = 0; trial < 8; ++trial) {
      const auto data = random_lh_data(rng, 1 + trial % 4);
      for (int t = 2; t <= 6; ++t)
        for (int m = t - 1; m >= 1; --m) {
          const int n = t - m;
          // kappa(m, n) via rho1 and via rho2, on atoms off the origin.
          Rational via_rho1 = 0, via_rho2 = 0, via_rho = 0;
          for (const auto& a : data.rho1.atoms())
            if (a.s != 0) via_rho1 += pow_int(a.s, m - 2) * pow_int(a.t, n) * a.w;
          for (const auto& a : data.rho2.atoms())
            if (a.t != 0) via_rho2 += pow_int(a.s, m) * pow_int(a.t, n - 2) * a.w;
          for (const auto& a : data.rho.atoms())
            if (a.s != 0 && a.t != 0) via_rho += pow_int(a.s, m - 1) * pow_int(a.t, n - 1) * a.w;
          if (m >= 2) CHECK(via_rho1 == via_rho);
          if (n >= 2) CHECK(via_rho2 == via_rho);
        }
    }
  }

  TEST_CASE("round trips through GNS and spectral extraction") {
    Rng rng(124);
    for (int trial = 0; trial < 6; ++trial) {
      const auto data = random_lh_data(rng, 1 + trial % 4);
      const auto k = convert<double>(lh_to_cumulants(data, 8));
      const auto recovered = extract_levy_measures(gns_reconstruct(k, 3), 0);
      CHECK(max_gap(lh_to_cumulants(recovered, 6, 1e-8), k) < 1e-8);
      const auto expected = convert<double>(data);
      for (const auto& [mine, theirs] : {std::pair{&recovered.rho1, &expected.rho1}, std::pair{&recovered.rho2, &expected.rho2},
                                         std::pair{&recovered.rho, &expected.rho}}) {
        REQUIRE(mine->atoms().size() == theirs->atoms().size());
        for (std::size_t i = 0; i < mine->atoms().size(); ++i) {
          CHECK(std::fabs(mine->atoms()[i].s - theirs->atoms()[i].s) < 1e-8);
          CHECK(std::fabs(mine->atoms()[i].t - theirs->atoms()[i].t) < 1e-8);
          CHECK(std::fabs(mine->atoms()[i].w - theirs->atoms()[i].w) < 1e-8);
        }
      }
    }
  }
}

TEST_SUITE("limits") {
  TEST_CASE("constructors are infinitely divisible") {
    const auto nu = DiscretePlanarMeasure<Rational>::from_atoms({{1, 1, Rational(1, 2)}, {-1, Rational(1, 2), Rational(1, 2)}});
    for (const auto& k : {bifree_gaussian<Rational>(1, 2, 1, 8), bifree_poisson<Rational>(2, 1, -1, 8),
                          compound_bifree_poisson(Rational(1), nu, 8)}) {
      CHECK(check_cpsd(convert<double>(k), 3).passed);
      CHECK(check_cond_bounded(convert<double>(k), 3).passed);
    }
  }

  TEST_CASE("compound Poisson marginals are free compound Poisson") {
    const auto nu = DiscretePlanarMeasure<Rational>::from_atoms({{2, 1, Rational(1, 3)}, {-1, 3, Rational(2, 3)}});
    const Rational lambda(3, 2);
    const auto k = compound_bifree_poisson(lambda, nu, 6);
    const auto first = moment_sequence(marginal(nu, Axis::first), 6);
    const auto second = moment_sequence(marginal(nu, Axis::second), 6);
    for (int j = 1; j <= 6; ++j) {
      CHECK(k(j, 0) == lambda * first[static_cast<std::size_t>(j)]);
      CHECK(k(0, j) == lambda * second[static_cast<std::size_t>(j)]);
    }
  }

  TEST_CASE("convergence order 1/N") {
    const auto nu = DiscretePlanarMeasure<Rational>::from_atoms({{1, 1, Rational(1, 2)}, {-1, Rational(1, 2), Rational(1, 2)}});
    const std::vector<std::pair<MeasureFamily<Rational>, CumulantTable<Rational>>> cases{
        {poisson_family<Rational>(1, 1, -1), bifree_poisson<Rational>(1, 1, -1, 5)},
        {compound_poisson_family<Rational>(1, nu), compound_bifree_poisson<Rational>(1, nu, 5)}};
    for (const auto& [family, target] : cases) {
      const auto limit = cumulants_to_moments(target);
      std::vector<double> errors;
      for (int copies : {10, 100, 1000}) errors.push_back(max_gap(row_sum_moments(family(copies), copies, 5), limit));
      CHECK(errors[0] / errors[1] > 8.0);
      CHECK(errors[0] / errors[1] < 12.0);
      CHECK(errors[1] / errors[2] > 8.0);
      CHECK(errors[1] / errors[2] < 12.0);
    }
  }
}
