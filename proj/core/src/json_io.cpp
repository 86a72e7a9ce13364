#include "bifree/json_io.hpp"

#include <charconv>
#include <cmath>

namespace bifree::json {

namespace {

const Json& field(const Json& value, const char* key) {
  if (!value.is_object() || !value.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return value.at(key);
}

int to_int(const Json& value, const char* what) {
  if (!value.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return value.get<int>();
}

template <Scalar S>
Json table_json(const TriangularTable<S>& table, bool with_origin) {
  Json out;
  out["degree"] = table.degree();
  out["kind"] = std::string(to_string(ScalarTraits<S>::kind));
  Json entries = Json::array();
  for (int t = with_origin ? 0 : 1; t <= table.degree(); ++t)
    for (int m = t; m >= 0; --m) entries.push_back(Json::array({m, t - m, scalar(table(m, t - m))}));
  out["entries"] = std::move(entries);
  return out;
}

// Reads entries into `out`; every (m, n) with first <= m + n <= D must appear exactly once.
template <Scalar S, class Table>
void read_entries(const Json& value, Table& out, int first) {
  const Json& entries = field(value, "entries");
  if (!entries.is_array()) throw ParseError("\"entries\" must be an array");
  std::vector<bool> seen(TriangularTable<S>::index(0, out.degree()) + 1, false);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) throw ParseError("table entries must be [m, n, value]");
    const int m = to_int(e[0], "m");
    const int n = to_int(e[1], "n");
    if (m < 0 || n < 0 || m + n > out.degree() || m + n < first)
      throw ParseError("entry (" + std::to_string(m) + "," + std::to_string(n) + ") outside the table");
    auto slot = TriangularTable<S>::index(m, n);
    if (seen[slot]) throw ParseError("duplicate entry (" + std::to_string(m) + "," + std::to_string(n) + ")");
    seen[slot] = true;
    out(m, n) = to_scalar<S>(e[2]);
  }
  for (int t = first; t <= out.degree(); ++t)
    for (int m = t; m >= 0; --m)
      if (!seen[TriangularTable<S>::index(m, t - m)])
        throw ParseError("missing entry (" + std::to_string(m) + "," + std::to_string(t - m) + ")");
}

int read_degree(const Json& value) {
  const int degree = to_int(field(value, "degree"), "degree");
  if (degree < 0) throw ParseError("degree must be nonnegative");
  return degree;
}

template <Scalar S>
Vector<S> to_vector(const Json& value, const char* what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  Vector<S> out;
  for (const auto& x : value) out.push_back(to_scalar<S>(x));
  return out;
}

template <Scalar S>
Json from_vector(const Vector<S>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar(x));
  return out;
}

template <Scalar S>
DenseMatrix<S> to_matrix(const Json& value, int dim, const char* what) {
  if (!value.is_array() || static_cast<int>(value.size()) != dim)
    throw ParseError(std::string(what) + " must be a dim x dim array");
  DenseMatrix<S> out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto row = to_vector<S>(value[static_cast<std::size_t>(i)], what);
    if (static_cast<int>(row.size()) != dim) throw ParseError(std::string(what) + " must be a dim x dim array");
    for (int j = 0; j < dim; ++j) out(i, j) = row[static_cast<std::size_t>(j)];
  }
  return out;
}

template <Scalar S>
Json from_matrix(const DenseMatrix<S>& x) {
  Json out = Json::array();
  for (int i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < x.cols(); ++j) row.push_back(scalar(x(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json scalar(const Rational& x) { return format_rational(x); }

Json scalar(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value cannot be serialized");
  return x == 0.0 ? 0.0 : x;
}

template <>
Rational to_scalar<Rational>(const Json& value) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_number_float()) {
      // Shortest round-trip text, so 0.1 reads as 1/10 rather than its binary expansion.
      char buffer[64];
      auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value.get<double>());
      if (ec != std::errc{}) throw ParseError("unprintable number");
      return parse_rational(std::string_view(buffer, static_cast<std::size_t>(end - buffer)));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected a number or a rational string");
}

template <>
double to_scalar<double>(const Json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    try {
      return to_double(parse_rational(value.get<std::string>()));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected a number or a rational string");
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json from_partition(const Partition& p) {
  Json out = Json::array();
  for (const auto& block : p.blocks()) out.push_back(block);
  return out;
}

Partition to_partition(const Json& value) {
  if (!value.is_array()) throw ParseError("partition must be an array of blocks");
  std::vector<std::vector<int>> blocks;
  int n = 0;
  for (const auto& b : value) {
    if (!b.is_array()) throw ParseError("partition block must be an array");
    std::vector<int> block;
    for (const auto& e : b) block.push_back(to_int(e, "partition element"));
    n += static_cast<int>(block.size());
    blocks.push_back(std::move(block));
  }
  try {
    return Partition::from_blocks(n, blocks);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

ScalarKind kind_of(const Json& value, ScalarKind fallback) {
  if (!value.is_object() || !value.contains("kind")) return fallback;
  try {
    return parse_scalar_kind(value.at("kind").get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad \"kind\": ") + e.what());
  }
}

bool is_moment_table(const Json& value) {
  if (!value.is_object() || !value.contains("entries") || !value.at("entries").is_array()) return false;
  for (const auto& e : value.at("entries"))
    if (e.is_array() && e.size() == 3 && e[0] == 0 && e[1] == 0) return true;
  return false;
}

template <Scalar S>
Json from_table(const MomentTable<S>& table) {
  return table_json(table, true);
}

template <Scalar S>
Json from_table(const CumulantTable<S>& table) {
  return table_json(table, false);
}

template <Scalar S>
Json from_series(const BivariateSeries<S>& series) {
  Json out = table_json(series, false);
  out["constant"] = scalar(series(0, 0));
  return out;
}

template <Scalar S>
MomentTable<S> to_moment_table(const Json& value) {
  MomentTable<S> out(read_degree(value));
  read_entries<S>(value, out, 0);
  if (out(0, 0) != S{1}) throw ParseError("moment table entry (0,0) must be 1");
  return out;
}

template <Scalar S>
CumulantTable<S> to_cumulant_table(const Json& value) {
  CumulantTable<S> out(read_degree(value));
  read_entries<S>(value, out, 1);
  return out;
}

template <Scalar S>
BivariateSeries<S> to_series(const Json& value) {
  BivariateSeries<S> out(read_degree(value));
  read_entries<S>(value, out, 1);
  out(0, 0) = value.contains("constant") ? to_scalar<S>(value.at("constant")) : S{0};
  return out;
}

template <Scalar S>
Json from_measure(const DiscretePlanarMeasure<S>& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms()) atoms.push_back(Json::array({scalar(a.s), scalar(a.t), scalar(a.w)}));
  Json out;
  out["atoms"] = std::move(atoms);
  out["signed"] = mu.is_signed();
  return out;
}

template <Scalar S>
Json from_measure(const DiscreteMeasure<S>& nu) {
  Json out = Json::array();
  for (const auto& a : nu.atoms()) out.push_back(Json::array({scalar(a.x), scalar(a.w)}));
  return out;
}

template <Scalar S>
DiscretePlanarMeasure<S> to_planar_measure(const Json& value) {
  const Json& atoms = field(value, "atoms");
  if (!atoms.is_array()) throw ParseError("\"atoms\" must be an array");
  const bool is_signed = value.contains("signed") && value.at("signed").is_boolean() && value.at("signed").get<bool>();
  std::vector<PlanarAtom<S>> out;
  for (const auto& a : atoms) {
    if (!a.is_array() || a.size() != 3) throw ParseError("planar atoms must be [s, t, w]");
    out.push_back({to_scalar<S>(a[0]), to_scalar<S>(a[1]), to_scalar<S>(a[2])});
  }
  try {
    return DiscretePlanarMeasure<S>::from_atoms(std::move(out), is_signed);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

template <Scalar S>
DiscreteMeasure<S> to_measure(const Json& value) {
  if (!value.is_array()) throw ParseError("1-D measure must be an array of [x, w]");
  std::vector<Atom<S>> out;
  for (const auto& a : value) {
    if (!a.is_array() || a.size() != 2) throw ParseError("1-D atoms must be [x, w]");
    out.push_back({to_scalar<S>(a[0]), to_scalar<S>(a[1])});
  }
  try {
    return DiscreteMeasure<S>::from_atoms(std::move(out));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

template <Scalar S>
Json from_model(const FockModel<S>& model) {
  Json out;
  out["dim"] = model.dim;
  out["kind"] = std::string(to_string(ScalarTraits<S>::kind));
  out["f"] = from_vector(model.f);
  out["g"] = from_vector(model.g);
  out["T1"] = from_matrix(model.t1);
  out["T2"] = from_matrix(model.t2);
  out["lambda1"] = scalar(model.lambda1);
  out["lambda2"] = scalar(model.lambda2);
  return out;
}

template <Scalar S>
FockModel<S> to_model(const Json& value) {
  FockModel<S> model;
  model.dim = to_int(field(value, "dim"), "dim");
  if (model.dim < 0) throw ParseError("dim must be nonnegative");
  model.f = to_vector<S>(field(value, "f"), "f");
  model.g = to_vector<S>(field(value, "g"), "g");
  model.t1 = to_matrix<S>(field(value, "T1"), model.dim, "T1");
  model.t2 = to_matrix<S>(field(value, "T2"), model.dim, "T2");
  model.lambda1 = to_scalar<S>(field(value, "lambda1"));
  model.lambda2 = to_scalar<S>(field(value, "lambda2"));
  try {
    model.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return model;
}

template <Scalar S>
Json from_lh_data(const LevyHincinData<S>& data) {
  Json out;
  out["kind"] = std::string(to_string(ScalarTraits<S>::kind));
  out["kappa10"] = scalar(data.kappa10);
  out["kappa01"] = scalar(data.kappa01);
  out["rho1"] = from_measure(data.rho1);
  out["rho2"] = from_measure(data.rho2);
  out["rho"] = from_measure(data.rho);
  return out;
}

template <Scalar S>
LevyHincinData<S> to_lh_data(const Json& value) {
  LevyHincinData<S> data;
  data.kappa10 = to_scalar<S>(field(value, "kappa10"));
  data.kappa01 = to_scalar<S>(field(value, "kappa01"));
  data.rho1 = to_planar_measure<S>(field(value, "rho1"));
  data.rho2 = to_planar_measure<S>(field(value, "rho2"));
  // rho is signed by nature, whatever its flag says.
  auto rho = to_planar_measure<S>(field(value, "rho"));
  data.rho = DiscretePlanarMeasure<S>::from_atoms(rho.atoms(), true);
  return data;
}

#define BIFREE_INSTANTIATE(S)                                               \
  template Json from_table(const MomentTable<S>&);                          \
  template Json from_table(const CumulantTable<S>&);                        \
  template Json from_series(const BivariateSeries<S>&);                     \
  template MomentTable<S> to_moment_table(const Json&);                     \
  template CumulantTable<S> to_cumulant_table(const Json&);                 \
  template BivariateSeries<S> to_series(const Json&);                       \
  template Json from_measure(const DiscretePlanarMeasure<S>&);              \
  template Json from_measure(const DiscreteMeasure<S>&);                    \
  template DiscretePlanarMeasure<S> to_planar_measure(const Json&);         \
  template DiscreteMeasure<S> to_measure(const Json&);                      \
  template Json from_model(const FockModel<S>&);                            \
  template FockModel<S> to_model(const Json&);                              \
  template Json from_lh_data(const LevyHincinData<S>&);                     \
  template LevyHincinData<S> to_lh_data(const Json&);

BIFREE_INSTANTIATE(Rational)
BIFREE_INSTANTIATE(double)

#undef BIFREE_INSTANTIATE

}  // namespace bifree::json
