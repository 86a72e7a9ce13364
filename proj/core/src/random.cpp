#include "bifree/random.hpp"

#include <algorithm>

namespace bifree {

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational nonzero_rational(Rng& rng, int max_numerator, int max_denominator) {
  Rational x;
  do {
    x = random_rational(rng, max_numerator, max_denominator);
  } while (x == 0);
  return x;
}

std::vector<Rational> probability_weights(Rng& rng, int count) {
  std::vector<Rational> w;
  Rational total{0};
  for (int i = 0; i < count; ++i) {
    w.emplace_back(uniform_int(rng, 1, 5));
    total += w.back();
  }
  for (auto& x : w) x /= total;
  return w;
}

// Rational orthogonal matrix (I - A)(I + A)^{-1} for a random skew-symmetric A.
DenseMatrix<Rational> random_orthogonal(Rng& rng, int dim) {
  DenseMatrix<Rational> a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      a(i, j) = random_rational(rng, 2, 2);
      a(j, i) = -a(i, j);
    }
  const auto id = DenseMatrix<Rational>::identity(dim);
  return (id - a) * inverse(id + a);
}

}  // namespace

Rational random_rational(Rng& rng, int max_numerator, int max_denominator) {
  return Rational(uniform_int(rng, -max_numerator, max_numerator)) / Rational(uniform_int(rng, 1, max_denominator));
}

DiscretePlanarMeasure<Rational> random_planar_measure(Rng& rng, int atoms) {
  std::vector<PlanarAtom<Rational>> out;
  const auto weights = probability_weights(rng, atoms);
  while (static_cast<int>(out.size()) < atoms) {
    const Rational s = random_rational(rng, 3, 2);
    const Rational t = random_rational(rng, 3, 2);
    if (std::any_of(out.begin(), out.end(), [&](const auto& a) { return a.s == s && a.t == t; })) continue;
    out.push_back({s, t, weights[out.size()]});
  }
  return DiscretePlanarMeasure<Rational>::from_atoms(std::move(out));
}

DiscreteMeasure<Rational> random_measure(Rng& rng, int atoms) {
  std::vector<Atom<Rational>> out;
  const auto weights = probability_weights(rng, atoms);
  while (static_cast<int>(out.size()) < atoms) {
    const Rational x = random_rational(rng, 3, 2);
    if (std::any_of(out.begin(), out.end(), [&](const auto& a) { return a.x == x; })) continue;
    out.push_back({x, weights[out.size()]});
  }
  return DiscreteMeasure<Rational>::from_atoms(std::move(out));
}

MomentTable<Rational> random_moment_table(Rng& rng, int degree) {
  MomentTable<Rational> out(degree);
  for (int t = 1; t <= degree; ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = random_rational(rng, 5, 4);
  return out;
}

CumulantTable<Rational> random_cumulant_table(Rng& rng, int degree) {
  CumulantTable<Rational> out(degree);
  for (int t = 1; t <= degree; ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = random_rational(rng, 5, 4);
  return out;
}

FockModel<Rational> random_commuting_model(Rng& rng, int dim) {
  std::vector<Rational> s, t, fhat, ghat;
  for (int k = 0; k < dim; ++k) {
    // Mostly generic joint eigenvalues; occasionally an origin component where f, g are free.
    if (uniform_int(rng, 0, 4) == 0) {
      s.emplace_back(0);
      t.emplace_back(0);
      fhat.push_back(random_rational(rng, 2, 2));
      ghat.push_back(random_rational(rng, 2, 2));
    } else {
      s.push_back(random_rational(rng, 2, 2));
      t.push_back(random_rational(rng, 2, 2));
      const Rational c = random_rational(rng, 2, 2);
      fhat.push_back(c * s.back());
      ghat.push_back(c * t.back());
    }
  }
  const auto q = random_orthogonal(rng, dim);
  const auto qt = transpose(q);
  FockModel<Rational> model;
  model.dim = dim;
  model.t1 = q * DenseMatrix<Rational>::diagonal(s) * qt;
  model.t2 = q * DenseMatrix<Rational>::diagonal(t) * qt;
  model.f = q * fhat;
  model.g = q * ghat;
  model.lambda1 = random_rational(rng, 2, 2);
  model.lambda2 = random_rational(rng, 2, 2);
  return model;
}

LevyHincinData<Rational> random_lh_data(Rng& rng, int atoms) {
  LevyHincinData<Rational> data;
  data.kappa10 = random_rational(rng, 2, 2);
  data.kappa01 = random_rational(rng, 2, 2);
  const Rational var1 = Rational(uniform_int(rng, 1, 4)) / uniform_int(rng, 1, 3);
  const Rational var2 = Rational(uniform_int(rng, 1, 4)) / uniform_int(rng, 1, 3);
  // |c| <= min(var1, var2) keeps c^2 <= var1 var2.
  const Rational c = std::min(var1, var2) * Rational(uniform_int(rng, -3, 3)) / 4;
  std::vector<PlanarAtom<Rational>> r1{{0, 0, var1}}, r2{{0, 0, var2}}, r{{0, 0, c}};
  std::vector<Rational> used_s, used_t;
  while (static_cast<int>(used_s.size()) < atoms) {
    const Rational s = nonzero_rational(rng, 3, 2);
    const Rational t = nonzero_rational(rng, 3, 2);
    if (std::find(used_s.begin(), used_s.end(), s) != used_s.end()) continue;
    if (std::find(used_t.begin(), used_t.end(), t) != used_t.end()) continue;
    used_s.push_back(s);
    used_t.push_back(t);
    const Rational w = Rational(uniform_int(rng, 1, 4)) / uniform_int(rng, 1, 4);
    r1.push_back({s, t, w * s * s});
    r2.push_back({s, t, w * t * t});
    r.push_back({s, t, w * s * t});
  }
  data.rho1 = DiscretePlanarMeasure<Rational>::from_atoms(std::move(r1));
  data.rho2 = DiscretePlanarMeasure<Rational>::from_atoms(std::move(r2));
  data.rho = DiscretePlanarMeasure<Rational>::from_atoms(std::move(r), true);
  return data;
}

}  // namespace bifree
