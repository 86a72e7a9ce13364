#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bifree/cumulants.hpp"
#include "bifree/linalg.hpp"
#include "bifree/scalar.hpp"

namespace bifree {

/// (f, g, T1, T2, lambda1, lambda2) on R^d with T1, T2 symmetric.
///
/// a = l(f) + l(f)* + Lambda_l(T1) + lambda1 acts on the left of tensors and
/// b = r(g) + r(g)* + Lambda_r(T2) + lambda2 on the right. dim may be 0 (scalar pair).
template <Scalar S>
struct FockModel {
  int dim = 0;
  Vector<S> f;
  Vector<S> g;
  DenseMatrix<S> t1;
  DenseMatrix<S> t2;
  S lambda1{0};
  S lambda2{0};

  /// Throws ShapeError on inconsistent sizes, DomainError on non-symmetric T
  /// (exact for rationals, 1e-12 for doubles).
  void validate() const;

  friend bool operator==(const FockModel&, const FockModel&) = default;
};

template <Scalar To, Scalar From>
FockModel<To> convert(const FockModel<From>& model) {
  return {model.dim, convert<To>(model.f), convert<To>(model.g), convert<To>(model.t1), convert<To>(model.t2),
          scalar_cast<To>(model.lambda1), scalar_cast<To>(model.lambda2)};
}

/// Word over the letters 0..d-1; the empty word is the vacuum.
using Word = std::vector<std::uint8_t>;

/// Sparse vector of the full Fock space truncated at tensor level `level_cap`.
template <Scalar S>
class FockState {
 public:
  FockState() = default;
  explicit FockState(int level_cap) : level_cap_(level_cap) {}
  static FockState vacuum(int level_cap) {
    FockState out(level_cap);
    out.add(Word{}, S{1});
    return out;
  }

  int level_cap() const noexcept { return level_cap_; }
  const std::map<Word, S>& amplitudes() const noexcept { return amplitudes_; }
  S amplitude(const Word& word) const {
    auto it = amplitudes_.find(word);
    return it == amplitudes_.end() ? S{0} : it->second;
  }
  /// Adds to an amplitude; drops words beyond the level cap and entries that become zero.
  void add(const Word& word, const S& value);

  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  int level_cap_ = 0;
  std::map<Word, S> amplitudes_;
};

enum class OperatorKind { create_left, annihilate_left, create_right, annihilate_right, gauge_left, gauge_right, scalar };

template <Scalar S>
using OperatorPayload = std::variant<Vector<S>, DenseMatrix<S>, S>;

/// Applies one elementary operator. Creation at the level cap is discarded. Throws ShapeError
/// when the payload does not fit the kind or the letter dimension.
template <Scalar S>
FockState<S> apply_operator(OperatorKind kind, const OperatorPayload<S>& payload, const FockState<S>& state, int dim);

/// a psi and b psi for a model.
template <Scalar S>
FockState<S> apply_a(const FockModel<S>& model, const FockState<S>& state);
template <Scalar S>
FockState<S> apply_b(const FockModel<S>& model, const FockState<S>& state);

/// phi(a^m b^n) = <a^m b^n Omega, Omega>; level cap m + n unless `level_cap` is larger.
template <Scalar S>
S vacuum_moment(const FockModel<S>& model, int m, int n, int level_cap = 0);

/// All vacuum moments with m + n <= D, sharing the b^n Omega prefixes.
template <Scalar S>
MomentTable<S> vacuum_moments(const FockModel<S>& model, int degree);

template <Scalar S>
struct CommutationReport {
  bool commute = false;
  S gauge_residual{0};        ///< max |T1 g - T2 f|
  S commutator_residual{0};   ///< max |T1 T2 - T2 T1|
  std::vector<std::string> violations;
};

/// a and b commute iff T1 g = T2 f and T1 T2 = T2 T1 (exact for rationals, `tolerance` for doubles).
template <Scalar S>
CommutationReport<S> check_commutation(const FockModel<S>& model, double tolerance = 1e-10);

/// Closed-form cumulants; throws CommutationError when the model does not commute.
template <Scalar S>
CumulantTable<S> model_cumulants(const FockModel<S>& model, int degree, double tolerance = 1e-10);

/// (f/sqrt(n), g/sqrt(n), T1, T2, lambda1/n, lambda2/n). Rational models need n to be a
/// perfect square; otherwise DomainError.
template <Scalar S>
FockModel<S> amplify(const FockModel<S>& model, int n);

/// (sqrt(t) f, sqrt(t) g, T1, T2, t lambda1, t lambda2). Rational models need t to be a
/// perfect square of a rational; t < 0 is a DomainError.
template <Scalar S>
FockModel<S> levy_marginal_model(const FockModel<S>& model, const S& t);

}  // namespace bifree
