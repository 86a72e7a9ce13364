#include "bifree/fock.hpp"

#include <cmath>
#include <sstream>

namespace bifree {

namespace {

template <Scalar S>
S checked_sqrt(const S& x, const char* what) {
  if (x < S{0}) throw DomainError(std::string(what) + " must be nonnegative");
  if constexpr (ScalarTraits<S>::exact) {
    auto root = exact_sqrt(x);
    if (!root) throw DomainError(std::string(what) + " has no rational square root; use float mode");
    return *root;
  } else {
    return std::sqrt(x);
  }
}

template <Scalar S>
bool within(const S& residual, double tolerance) {
  if constexpr (ScalarTraits<S>::exact) {
    return residual == 0;
  } else {
    return residual <= tolerance;
  }
}

template <Scalar S>
void check_letters(const FockState<S>& state, int dim) {
  for (const auto& [word, amp] : state.amplitudes())
    for (auto letter : word)
      if (letter >= dim) throw ShapeError("state uses a letter outside the model dimension");
}

// Words longer than max_length cannot return to the vacuum within the remaining steps.
template <Scalar S>
FockState<S> prune(const FockState<S>& state, int max_length) {
  FockState<S> out(state.level_cap());
  for (const auto& [word, amp] : state.amplitudes())
    if (static_cast<int>(word.size()) <= max_length) out.add(word, amp);
  return out;
}

// One face of the model: creation, annihilation and gauge with the given vector and matrix,
// plus the scalar shift. `left` selects the end of the word the operators act on.
template <Scalar S>
FockState<S> apply_face(const Vector<S>& v, const DenseMatrix<S>& t, const S& lambda, bool left,
                        const FockState<S>& state) {
  FockState<S> out(state.level_cap());
  const auto dim = v.size();
  Word scratch;
  for (const auto& [word, amp] : state.amplitudes()) {
    if (!is_zero(lambda)) out.add(word, lambda * amp);
    if (static_cast<int>(word.size()) < state.level_cap()) {
      for (std::size_t i = 0; i < dim; ++i) {
        if (is_zero(v[i])) continue;
        scratch.clear();
        if (left) scratch.push_back(static_cast<std::uint8_t>(i));
        scratch.insert(scratch.end(), word.begin(), word.end());
        if (!left) scratch.push_back(static_cast<std::uint8_t>(i));
        out.add(scratch, v[i] * amp);
      }
    }
    if (word.empty()) continue;
    const std::size_t edge = left ? 0 : word.size() - 1;
    const auto letter = word[edge];
    if (!is_zero(v[letter])) {
      Word rest = left ? Word(word.begin() + 1, word.end()) : Word(word.begin(), word.end() - 1);
      out.add(rest, v[letter] * amp);
    }
    scratch = word;
    for (std::size_t i = 0; i < dim; ++i) {
      const S& coeff = t(static_cast<int>(i), letter);
      if (is_zero(coeff)) continue;
      scratch[edge] = static_cast<std::uint8_t>(i);
      out.add(scratch, coeff * amp);
    }
  }
  return out;
}

}  // namespace

template <Scalar S>
void FockModel<S>::validate() const {
  const auto d = static_cast<std::size_t>(dim);
  if (dim < 0) throw ShapeError("negative model dimension");
  if (f.size() != d || g.size() != d) throw ShapeError("f and g must have length dim");
  if (t1.rows() != dim || t1.cols() != dim || t2.rows() != dim || t2.cols() != dim)
    throw ShapeError("T1 and T2 must be dim x dim");
  for (const auto* t : {&t1, &t2}) {
    const S asym = max_abs(*t - transpose(*t));
    if (!within(asym, 1e-12)) throw DomainError("T1 and T2 must be symmetric");
  }
}

template <Scalar S>
void FockState<S>::add(const Word& word, const S& value) {
  if (static_cast<int>(word.size()) > level_cap_) return;
  if (is_zero(value)) return;
  auto [it, inserted] = amplitudes_.try_emplace(word, value);
  if (!inserted) {
    it->second += value;
    if (is_zero(it->second)) amplitudes_.erase(it);
  }
}

template <Scalar S>
FockState<S> apply_operator(OperatorKind kind, const OperatorPayload<S>& payload, const FockState<S>& state, int dim) {
  check_letters(state, dim);
  const bool left = kind == OperatorKind::create_left || kind == OperatorKind::annihilate_left ||
                    kind == OperatorKind::gauge_left;
  FockState<S> out(state.level_cap());
  switch (kind) {
    case OperatorKind::scalar: {
      const S* c = std::get_if<S>(&payload);
      if (!c) throw ShapeError("scalar operator needs a scalar payload");
      for (const auto& [word, amp] : state.amplitudes()) out.add(word, *c * amp);
      return out;
    }
    case OperatorKind::create_left:
    case OperatorKind::create_right:
    case OperatorKind::annihilate_left:
    case OperatorKind::annihilate_right: {
      const auto* v = std::get_if<Vector<S>>(&payload);
      if (!v || static_cast<int>(v->size()) != dim) throw ShapeError("creation/annihilation needs a vector of length dim");
      const bool create = kind == OperatorKind::create_left || kind == OperatorKind::create_right;
      for (const auto& [word, amp] : state.amplitudes()) {
        if (create) {
          if (static_cast<int>(word.size()) >= state.level_cap()) continue;
          for (int i = 0; i < dim; ++i) {
            Word next;
            if (left) next.push_back(static_cast<std::uint8_t>(i));
            next.insert(next.end(), word.begin(), word.end());
            if (!left) next.push_back(static_cast<std::uint8_t>(i));
            out.add(next, (*v)[static_cast<std::size_t>(i)] * amp);
          }
        } else if (!word.empty()) {
          const auto letter = left ? word.front() : word.back();
          Word rest = left ? Word(word.begin() + 1, word.end()) : Word(word.begin(), word.end() - 1);
          out.add(rest, (*v)[letter] * amp);
        }
      }
      return out;
    }
    case OperatorKind::gauge_left:
    case OperatorKind::gauge_right: {
      const auto* t = std::get_if<DenseMatrix<S>>(&payload);
      if (!t || t->rows() != dim || t->cols() != dim) throw ShapeError("gauge operator needs a dim x dim matrix");
      for (const auto& [word, amp] : state.amplitudes()) {
        if (word.empty()) continue;
        const std::size_t edge = left ? 0 : word.size() - 1;
        Word next = word;
        for (int i = 0; i < dim; ++i) {
          next[edge] = static_cast<std::uint8_t>(i);
          out.add(next, (*t)(i, word[edge]) * amp);
        }
      }
      return out;
    }
  }
  return out;
}

template <Scalar S>
FockState<S> apply_a(const FockModel<S>& model, const FockState<S>& state) {
  return apply_face(model.f, model.t1, model.lambda1, true, state);
}

template <Scalar S>
FockState<S> apply_b(const FockModel<S>& model, const FockState<S>& state) {
  return apply_face(model.g, model.t2, model.lambda2, false, state);
}

template <Scalar S>
S vacuum_moment(const FockModel<S>& model, int m, int n, int level_cap) {
  if (m < 0 || n < 0) throw DomainError("negative moment index");
  model.validate();
  auto state = FockState<S>::vacuum(std::max(m + n, level_cap));
  for (int k = 0; k < n; ++k) state = apply_b(model, state);
  for (int k = 0; k < m; ++k) state = apply_a(model, state);
  return state.amplitude(Word{});
}

template <Scalar S>
MomentTable<S> vacuum_moments(const FockModel<S>& model, int degree) {
  model.validate();
  MomentTable<S> out(degree);
  auto right = FockState<S>::vacuum(degree);
  for (int n = 0; n <= degree; ++n) {
    if (n > 0) right = prune(apply_b(model, right), degree - n);
    auto state = right;
    if (n > 0) out(0, n) = state.amplitude(Word{});
    for (int m = 1; m + n <= degree; ++m) {
      state = prune(apply_a(model, state), degree - n - m);
      out(m, n) = state.amplitude(Word{});
    }
  }
  return out;
}

template <Scalar S>
CommutationReport<S> check_commutation(const FockModel<S>& model, double tolerance) {
  model.validate();
  CommutationReport<S> report;
  report.gauge_residual = max_abs(model.t1 * model.g - model.t2 * model.f);
  report.commutator_residual = max_abs(model.t1 * model.t2 - model.t2 * model.t1);
  auto describe = [](const char* what, const S& residual) {
    std::ostringstream text;
    text << what << " (residual " << to_double(residual) << ")";
    return text.str();
  };
  if (!within(report.gauge_residual, tolerance)) report.violations.push_back(describe("T1 g != T2 f", report.gauge_residual));
  if (!within(report.commutator_residual, tolerance))
    report.violations.push_back(describe("T1 T2 != T2 T1", report.commutator_residual));
  report.commute = report.violations.empty();
  return report;
}

template <Scalar S>
CumulantTable<S> model_cumulants(const FockModel<S>& model, int degree, double tolerance) {
  const auto report = check_commutation(model, tolerance);
  if (!report.commute) throw CommutationError("model does not commute: " + report.violations.front());
  // left[k] = T1^k f, right[k] = T2^k g.
  std::vector<Vector<S>> left{model.f}, right{model.g};
  for (int k = 1; k < degree; ++k) {
    left.push_back(model.t1 * left.back());
    right.push_back(model.t2 * right.back());
  }
  CumulantTable<S> out(degree);
  if (degree >= 1) {
    out(1, 0) = model.lambda1;
    out(0, 1) = model.lambda2;
  }
  for (int t = 2; t <= degree; ++t)
    for (int m = t; m >= 0; --m) {
      const int n = t - m;
      const auto um = static_cast<std::size_t>(m);
      const auto un = static_cast<std::size_t>(n);
      if (n == 0) {
        out(m, n) = dot(left[um - 2], model.f);
      } else if (m == 0) {
        out(m, n) = dot(right[un - 2], model.g);
      } else {
        out(m, n) = dot(left[um - 1], right[un - 1]);
      }
    }
  return out;
}

template <Scalar S>
FockModel<S> amplify(const FockModel<S>& model, int n) {
  if (n < 1) throw DomainError("amplify needs n >= 1");
  const S inv_n = S{1} / static_cast<S>(n);
  const S factor = checked_sqrt(inv_n, "1/n");
  FockModel<S> out = model;
  out.f = scale(model.f, factor);
  out.g = scale(model.g, factor);
  out.lambda1 = model.lambda1 * inv_n;
  out.lambda2 = model.lambda2 * inv_n;
  return out;
}

template <Scalar S>
FockModel<S> levy_marginal_model(const FockModel<S>& model, const S& t) {
  const S factor = checked_sqrt(t, "t");
  FockModel<S> out = model;
  out.f = scale(model.f, factor);
  out.g = scale(model.g, factor);
  out.lambda1 = model.lambda1 * t;
  out.lambda2 = model.lambda2 * t;
  return out;
}

#define BIFREE_INSTANTIATE(S)                                                                               \
  template struct FockModel<S>;                                                                             \
  template class FockState<S>;                                                                              \
  template FockState<S> apply_operator(OperatorKind, const OperatorPayload<S>&, const FockState<S>&, int);  \
  template FockState<S> apply_a(const FockModel<S>&, const FockState<S>&);                                  \
  template FockState<S> apply_b(const FockModel<S>&, const FockState<S>&);                                  \
  template S vacuum_moment(const FockModel<S>&, int, int, int);                                             \
  template MomentTable<S> vacuum_moments(const FockModel<S>&, int);                                         \
  template CommutationReport<S> check_commutation(const FockModel<S>&, double);                             \
  template CumulantTable<S> model_cumulants(const FockModel<S>&, int, double);                              \
  template FockModel<S> amplify(const FockModel<S>&, int);                                                  \
  template FockModel<S> levy_marginal_model(const FockModel<S>&, const S&);

BIFREE_INSTANTIATE(Rational)
BIFREE_INSTANTIATE(double)

#undef BIFREE_INSTANTIATE

}  // namespace bifree
