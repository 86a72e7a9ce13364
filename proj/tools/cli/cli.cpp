#include "cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bifree/bifree.hpp"

namespace bifree::cli {

namespace {

using json::Json;

struct Options {
  int degree = -1;
  std::string kind;
  std::uint64_t seed = 0;
  int threads = 1;
  double tolerance = -1.0;
  int window = -1;
  std::vector<std::string> files;

  int size = 0;
  std::string chi;
  bool mobius = false;

  std::string family;
  std::string lambda = "1";
  std::string alpha = "1";
  std::string beta = "1";
  std::string s1 = "1";
  std::string s2 = "1";
  std::string c = "0";
  std::string nu;
  std::string t = "1";
  std::string s = "1";
  bool cpsd_verified = false;
  bool closed_form = false;

  std::string suite;
  std::string model;
};

/// Verdict-false outcome that still prints its document.
struct Outcome {
  Json doc;
  bool verdict = true;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  Json read(const std::string& path) const {
    std::string text;
    if (path.empty() || path == "-") {
      std::ostringstream buffer;
      buffer << in_.rdbuf();
      text = buffer.str();
    } else {
      std::ifstream file(path);
      if (!file) throw ParseError("cannot open " + path);
      std::ostringstream buffer;
      buffer << file.rdbuf();
      text = buffer.str();
    }
    return json::parse(text);
  }

  std::ostream& out() const { return out_; }
  std::ostream& err() const { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

ScalarKind resolve_kind(const Options& o, ScalarKind fallback) {
  return o.kind.empty() ? fallback : parse_scalar_kind(o.kind);
}

template <class F>
auto with_kind(ScalarKind kind, F&& f) {
  return kind == ScalarKind::rational ? f(Rational{}) : f(double{});
}

template <Scalar S>
S parameter(const std::string& text, const char* name) {
  try {
    return scalar_cast<S>(parse_rational(text));
  } catch (const Error& e) {
    throw ParseError(std::string("--") + name + ": " + e.what());
  }
}

double default_tolerance(const Options& o, ScalarKind kind) {
  if (o.tolerance >= 0.0) return o.tolerance;
  return kind == ScalarKind::rational ? 0.0 : 1e-9;
}

std::string input_path(const Options& o, std::size_t index = 0) {
  return index < o.files.size() ? o.files[index] : std::string("-");
}

enum class DocType { moment_table, cumulant_table, measure, model, lh_data };

DocType doc_type(const Json& doc) {
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  if (doc.contains("atoms")) return DocType::measure;
  if (doc.contains("dim")) return DocType::model;
  if (doc.contains("kappa10")) return DocType::lh_data;
  if (doc.contains("entries")) return json::is_moment_table(doc) ? DocType::moment_table : DocType::cumulant_table;
  throw ParseError("unrecognized input document");
}

const char* doc_name(DocType type) {
  switch (type) {
    case DocType::moment_table: return "moment-table";
    case DocType::cumulant_table: return "cumulant-table";
    case DocType::measure: return "measure";
    case DocType::model: return "fock-model";
    case DocType::lh_data: return "levy-hincin";
  }
  return "unknown";
}

template <class Table>
Table truncate(const Table& table, int degree) {
  if (degree > table.degree())
    throw ParseError("input degree " + std::to_string(table.degree()) + " is below the requested " + std::to_string(degree));
  Table out(degree);
  for (int t = 0; t <= degree; ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = table(m, t - m);
  return out;
}

int table_degree_or(const Json& doc, int fallback) {
  return doc.contains("degree") && doc.at("degree").is_number_integer() ? doc.at("degree").get<int>() : fallback;
}

template <Scalar S>
MomentTable<S> moments_from(const Json& doc, int degree) {
  switch (doc_type(doc)) {
    case DocType::moment_table: return truncate(json::to_moment_table<S>(doc), degree);
    case DocType::cumulant_table: return cumulants_to_moments(truncate(json::to_cumulant_table<S>(doc), degree));
    case DocType::measure: return moment_table(json::to_planar_measure<S>(doc), degree);
    case DocType::model: return vacuum_moments(json::to_model<S>(doc), degree);
    case DocType::lh_data: return cumulants_to_moments(lh_to_cumulants(json::to_lh_data<S>(doc), degree));
  }
  throw ParseError("unrecognized input document");
}

template <Scalar S>
CumulantTable<S> cumulants_from(const Json& doc, int degree) {
  switch (doc_type(doc)) {
    case DocType::cumulant_table: return truncate(json::to_cumulant_table<S>(doc), degree);
    case DocType::model: return model_cumulants(json::to_model<S>(doc), degree);
    case DocType::lh_data: return lh_to_cumulants(json::to_lh_data<S>(doc), degree);
    default: return moments_to_cumulants(moments_from<S>(doc, degree));
  }
}

int requested_degree(const Options& o, const Json& doc, int fallback) {
  return o.degree >= 0 ? o.degree : table_degree_or(doc, fallback);
}

int default_window(const Options& o, int degree) {
  return o.window > 0 ? o.window : std::max(1, (degree - 2) / 2);
}

// ---- subcommands ---------------------------------------------------------------------------

Outcome cmd_partitions(const Options& o) {
  Json doc;
  if (!o.chi.empty()) {
    const auto chi = ChiMap::parse(o.chi);
    const auto& mobius = mobius_to_top(chi.size());
    const auto bnc = enumerate_bnc(chi);
    doc["chi"] = chi.to_string();
    doc["n"] = chi.size();
    doc["count"] = bnc.size();
    Json list = Json::array();
    for (std::size_t i = 0; i < bnc.size(); ++i) {
      Json entry;
      entry["blocks"] = json::from_partition(bnc[i].image);
      entry["source"] = json::from_partition(bnc[i].source);
      if (o.mobius) entry["mobius"] = mobius[i];
      list.push_back(std::move(entry));
    }
    doc["partitions"] = std::move(list);
    return {doc};
  }
  if (o.size < 1) throw ParseError("partitions needs a size N >= 1 or --chi");
  const auto& lattice = nc_lattice(o.size);
  doc["n"] = o.size;
  doc["count"] = lattice.size();
  Json list = Json::array();
  if (o.mobius) {
    const auto& mobius = mobius_to_top(o.size);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      Json entry;
      entry["blocks"] = json::from_partition(lattice[i]);
      entry["mobius"] = mobius[i];
      list.push_back(std::move(entry));
    }
  } else {
    for (const auto& p : lattice) list.push_back(json::from_partition(p));
  }
  doc["partitions"] = std::move(list);
  return {doc};
}

Outcome cmd_cumulants(const Options& o, const Io& io) {
  const Json input = io.read(input_path(o));
  const auto kind = resolve_kind(o, json::kind_of(input, ScalarKind::rational));
  return with_kind(kind, [&](auto tag) -> Outcome {
    using S = decltype(tag);
    const int degree = requested_degree(o, input, 6);
    return {json::from_table(moments_to_cumulants(moments_from<S>(input, degree), o.threads))};
  });
}

Outcome cmd_moments(const Options& o, const Io& io) {
  const Json input = io.read(input_path(o));
  const auto kind = resolve_kind(o, json::kind_of(input, ScalarKind::rational));
  return with_kind(kind, [&](auto tag) -> Outcome {
    using S = decltype(tag);
    const int degree = requested_degree(o, input, 6);
    if (doc_type(input) == DocType::cumulant_table)
      return {json::from_table(cumulants_to_moments(truncate(json::to_cumulant_table<S>(input), degree), o.threads))};
    return {json::from_table(moments_from<S>(input, degree))};
  });
}

Outcome cmd_convolve(const Options& o, const Io& io) {
  if (o.files.size() != 2) throw ParseError("convolve needs exactly two input files");
  const Json a = io.read(o.files[0]);
  const Json b = io.read(o.files[1]);
  const auto kind = resolve_kind(o, json::kind_of(a, ScalarKind::rational));
  return with_kind(kind, [&](auto tag) -> Outcome {
    using S = decltype(tag);
    const int degree = o.degree >= 0 ? o.degree : std::min(table_degree_or(a, 6), table_degree_or(b, 6));
    const auto sum = bifree_convolve(cumulants_from<S>(a, degree), cumulants_from<S>(b, degree));
    // Two moment-level inputs give a moment-level answer.
    const bool moment_level = doc_type(a) != DocType::cumulant_table && doc_type(b) != DocType::cumulant_table &&
                              doc_type(a) != DocType::model && doc_type(b) != DocType::model &&
                              doc_type(a) != DocType::lh_data && doc_type(b) != DocType::lh_data;
    if (moment_level) return {json::from_table(cumulants_to_moments(sum, o.threads))};
    return {json::from_table(sum)};
  });
}

Outcome cmd_semigroup(const Options& o, const Io& io) {
  const Json input = io.read(input_path(o));
  const auto kind = resolve_kind(o, json::kind_of(input, ScalarKind::rational));
  return with_kind(kind, [&](auto tag) -> Outcome {
    using S = decltype(tag);
    const int degree = requested_degree(o, input, 6);
    const auto scaled = semigroup_scale(cumulants_from<S>(input, degree), parameter<S>(o.t, "t"), o.cpsd_verified);
    Json doc = json::from_table(scaled.table);
    doc["warning"] = scaled.warning;
    if (scaled.warning) {
      doc["message"] = scaled.message;
      io.err() << "warning: " << scaled.message << "\n";
    }
    return {doc};
  });
}

Outcome cmd_make(const Options& o, const Io& io) {
  const auto kind = resolve_kind(o, ScalarKind::rational);
  const int degree = o.degree >= 0 ? o.degree : 6;
  return with_kind(kind, [&](auto tag) -> Outcome {
    using S = decltype(tag);
    if (o.family == "gaussian")
      return {json::from_table(bifree_gaussian(parameter<S>(o.s1, "s1"), parameter<S>(o.s2, "s2"), parameter<S>(o.c, "c"), degree))};
    if (o.family == "poisson")
      return {json::from_table(
          bifree_poisson(parameter<S>(o.lambda, "lambda"), parameter<S>(o.alpha, "alpha"), parameter<S>(o.beta, "beta"), degree))};
    if (o.nu.empty()) throw ParseError("make compound needs --nu FILE");
    const auto nu = json::to_planar_measure<S>(io.read(o.nu));
    return {json::from_table(compound_bifree_poisson(parameter<S>(o.lambda, "lambda"), nu, degree))};
  });
}

Outcome cmd_lh_cumulants(const Options& o, const Io& io) {
  const Json input = io.read(input_path(o));
  const auto kind = resolve_kind(o, json::kind_of(input, ScalarKind::rational));
  return with_kind(kind, [&](auto tag) -> Outcome {
    using S = decltype(tag);
    const int degree = o.degree >= 0 ? o.degree : 6;
    return {json::from_table(lh_to_cumulants(json::to_lh_data<S>(input), degree, o.tolerance >= 0.0 ? o.tolerance : 1e-10))};
  });
}

Outcome cmd_lh_validate(const Options& o, const Io& io) {
  const Json input = io.read(input_path(o));
  const auto kind = resolve_kind(o, json::kind_of(input, ScalarKind::rational));
  return with_kind(kind, [&](auto tag) -> Outcome {
    using S = decltype(tag);
    const double tol = o.tolerance >= 0.0 ? o.tolerance : 1e-10;
    const auto report = validate_lh(json::to_lh_data<S>(input), tol);
    Json doc;
    doc["passed"] = report.passed();
    Json checks = Json::array();
    for (const auto& check : report.checks) {
      Json c;
      c["name"] = check.name;
      c["passed"] = check.passed;
      c["residual"] = json::scalar(check.residual);
      checks.push_back(std::move(c));
    }
    doc["checks"] = std::move(checks);
    return {doc, report.passed()};
  });
}

Outcome cmd_check_id(const Options& o, const Io& io) {
  const Json input = io.read(input_path(o));
  const int degree = requested_degree(o, input, 8);
  const auto cumulants = with_kind(resolve_kind(o, ScalarKind::floating), [&](auto tag) {
    using S = decltype(tag);
    return convert<double>(cumulants_from<S>(input, degree));
  });
  const int window = default_window(o, degree);
  const auto cpsd = check_cpsd(cumulants, window);
  const auto bounded = check_cond_bounded(cumulants, window);
  Json doc;
  doc["window"] = window;
  doc["degree"] = degree;
  doc["cpsd"]["passed"] = cpsd.passed;
  doc["cpsd"]["min_eigenvalue"] = json::scalar(cpsd.min_eigenvalue);
  if (!cpsd.passed) doc["cpsd"]["reason"] = cpsd.reason;
  doc["bounded"]["passed"] = bounded.passed;
  doc["bounded"]["witness"] = json::scalar(bounded.witness);
  if (!bounded.passed) doc["bounded"]["reason"] = bounded.reason;
  const bool verdict = cpsd.passed && bounded.passed;
  doc["infinitely_divisible"] = verdict;
  return {doc, verdict};
}

Outcome cmd_gns(const Options& o, const Io& io) {
  const Json input = io.read(input_path(o));
  const int degree = requested_degree(o, input, 8);
  const auto cumulants = with_kind(resolve_kind(o, ScalarKind::floating), [&](auto tag) {
    using S = decltype(tag);
    return convert<double>(cumulants_from<S>(input, degree));
  });
  const int window = default_window(o, degree);
  const auto bounded = check_cond_bounded(cumulants, window);
  if (!bounded.passed) {
    Json doc;
    doc["window"] = window;
    doc["error"] = "table is not certified infinitely divisible: " + bounded.reason;
    return {doc, false};
  }
  return {json::from_model(gns_reconstruct(cumulants, window))};
}

Outcome cmd_extract(const Options& o, const Io& io) {
  const Json input = io.read(input_path(o));
  const auto model = with_kind(resolve_kind(o, ScalarKind::floating), [&](auto tag) {
    using S = decltype(tag);
    return convert<double>(json::to_model<S>(input));
  });
  return {json::from_lh_data(extract_levy_measures(model, o.seed))};
}

Outcome cmd_fock_moments(const Options& o, const Io& io) {
  const Json input = io.read(input_path(o));
  const auto kind = resolve_kind(o, ScalarKind::rational);
  return with_kind(kind, [&](auto tag) -> Outcome {
    using S = decltype(tag);
    const int degree = o.degree >= 0 ? o.degree : 6;
    const auto model = json::to_model<S>(input);
    if (o.closed_form) return {json::from_table(model_cumulants(model, degree))};
    return {json::from_table(vacuum_moments(model, degree))};
  });
}

// ---- verify suites ---------------------------------------------------------------------------

template <Scalar S, class Table>
double max_difference(const Table& x, const Table& y, int first) {
  double worst = 0.0;
  for (int t = first; t <= std::min(x.degree(), y.degree()); ++t)
    for (int m = t; m >= 0; --m) worst = std::max(worst, std::fabs(to_double(S(x(m, t - m) - y(m, t - m)))));
  return worst;
}

Outcome verify_voiculescu(const Options& o, const Io& io, ScalarKind kind) {
  const Json input = io.read(o.model.empty() ? input_path(o) : o.model);
  const int degree = o.degree >= 0 ? o.degree : 6;
  const double residual = with_kind(kind, [&](auto tag) {
    using S = decltype(tag);
    return to_double(verify_voiculescu_identity(moments_from<S>(input, degree)));
  });
  Json doc;
  doc["suite"] = "voiculescu";
  doc["input"] = doc_name(doc_type(input));
  doc["degree"] = degree;
  doc["max_residual"] = json::scalar(residual);
  return {doc, residual <= default_tolerance(o, kind)};
}

Outcome verify_chi(const Options& o, const Io& io, ScalarKind kind) {
  const Json input = io.read(o.model.empty() ? input_path(o) : o.model);
  const int degree = std::min(o.degree >= 0 ? o.degree : 5, kChiDegreeCap);
  int maps = 0;
  const double residual = with_kind(kind, [&](auto tag) {
    using S = decltype(tag);
    const auto moments = moments_from<S>(input, degree);
    double worst = 0.0;
    for (int t = 1; t <= degree; ++t)
      for (int m = t; m >= 0; --m) {
        const auto values = chi_cumulants(moments, m, t - m);
        maps += static_cast<int>(values.size());
        for (const auto& v : values) worst = std::max(worst, std::fabs(to_double(S(v - values.front()))));
      }
    return worst;
  });
  Json doc;
  doc["suite"] = "chi";
  doc["input"] = doc_name(doc_type(input));
  doc["degree"] = degree;
  doc["maps_checked"] = maps;
  doc["max_residual"] = json::scalar(residual);
  return {doc, residual <= default_tolerance(o, kind)};
}

Outcome verify_roundtrip(const Options& o, const Io& io, ScalarKind kind) {
  const Json input = io.read(o.model.empty() ? input_path(o) : o.model);
  const auto type = doc_type(input);
  Json doc;
  doc["suite"] = "roundtrip";
  doc["input"] = doc_name(type);
  double residual = 0.0;
  if (type == DocType::lh_data) {
    // lh -> cumulants -> GNS -> spectral extraction -> cumulants, in double precision.
    const int window = o.window > 0 ? o.window : 3;
    const int degree = o.degree >= 0 ? o.degree : 6;
    const auto data = json::to_lh_data<double>(input);
    const auto cumulants = lh_to_cumulants(data, std::max(degree, 2 * window + 2), 1e-10);
    const auto recovered = extract_levy_measures(gns_reconstruct(cumulants, window), o.seed);
    residual = max_difference<double>(truncate(lh_to_cumulants(recovered, degree, 1e-8), degree), truncate(cumulants, degree), 1);
    doc["window"] = window;
    doc["degree"] = degree;
    kind = ScalarKind::floating;
  } else {
    const int degree = requested_degree(o, input, 6);
    doc["degree"] = degree;
    residual = with_kind(kind, [&](auto tag) {
      using S = decltype(tag);
      switch (type) {
        case DocType::cumulant_table: {
          const auto k = truncate(json::to_cumulant_table<S>(input), degree);
          return max_difference<S>(moments_to_cumulants(cumulants_to_moments(k)), k, 1);
        }
        case DocType::model: {
          const auto model = json::to_model<S>(input);
          return max_difference<S>(moments_to_cumulants(vacuum_moments(model, degree)), model_cumulants(model, degree), 1);
        }
        default: {
          const auto m = moments_from<S>(input, degree);
          return max_difference<S>(cumulants_to_moments(moments_to_cumulants(m)), m, 0);
        }
      }
    });
  }
  doc["max_residual"] = json::scalar(residual);
  return {doc, residual <= std::max(default_tolerance(o, kind), kind == ScalarKind::floating ? 1e-8 : 0.0)};
}

Outcome verify_limits(const Options& o, const Io& io) {
  const int degree = o.degree >= 0 ? o.degree : 5;
  const std::vector<int> sizes{10, 100, 1000};
  const Rational lambda = parameter<Rational>(o.lambda, "lambda");
  DiscretePlanarMeasure<Rational> nu =
      o.nu.empty() ? DiscretePlanarMeasure<Rational>::dirac(parameter<Rational>(o.alpha, "alpha"), parameter<Rational>(o.beta, "beta"))
                   : json::to_planar_measure<Rational>(io.read(o.nu));
  const auto family = compound_poisson_family(lambda, nu);
  const auto target = compound_bifree_poisson(lambda, nu, degree);
  const auto limit = cumulants_to_moments(target);

  Rational scaling{0};
  for (int t = 1; t <= degree; ++t)
    for (int m = t; m >= 0; --m)
      for (const auto& v : triangular_limit_estimate(family, m, t - m, sizes))
        scaling = std::max(scaling, abs_value(Rational(v - target(m, t - m))));

  Json errors = Json::array(), ratios = Json::array();
  std::vector<double> errs;
  for (int copies : sizes) {
    errs.push_back(max_difference<Rational>(row_sum_moments(family(copies), copies, degree), limit, 1));
    errors.push_back(json::scalar(errs.back()));
  }
  bool ratios_ok = true;
  for (std::size_t i = 1; i < errs.size(); ++i) {
    const double ratio = errs[i] > 0.0 ? errs[i - 1] / errs[i] : 0.0;
    ratios.push_back(json::scalar(ratio));
    ratios_ok = ratios_ok && ratio >= 8.0 && ratio <= 12.0;
  }
  Json doc;
  doc["suite"] = "limits";
  doc["degree"] = degree;
  doc["lambda"] = json::scalar(lambda);
  doc["jump"] = json::from_measure(nu);
  doc["sizes"] = sizes;
  doc["scaling_residual"] = json::scalar(to_double(scaling));
  doc["errors"] = std::move(errors);
  doc["ratios"] = std::move(ratios);
  doc["max_residual"] = json::scalar(to_double(scaling));
  return {doc, scaling == 0 && ratios_ok};
}

Outcome verify_semigroup(const Options& o, const Io& io, ScalarKind kind) {
  const Json input = io.read(o.model.empty() ? input_path(o) : o.model);
  const int degree = std::min(requested_degree(o, input, 6), 6);
  Json doc;
  doc["suite"] = "semigroup";
  doc["degree"] = degree;
  double law = 0.0, marginal = 0.0;
  with_kind(kind, [&](auto tag) {
    using S = decltype(tag);
    const auto k = cumulants_from<S>(input, degree);
    const S s = parameter<S>(o.s, "s");
    const S t = parameter<S>(o.t, "t");
    const auto lhs = bifree_convolve(semigroup_scale(k, s, true).table, semigroup_scale(k, t, true).table);
    law = max_difference<S>(lhs, semigroup_scale(k, S(s + t), true).table, 1);
    const auto moments = cumulants_to_moments(k);
    const auto doubled = cumulants_to_moments(bifree_convolve(k, k));
    for (Face face : {Face::left, Face::right}) {
      const auto single = marginal_moments(moments, face);
      const auto expected = free_convolve_marginal(single, single, degree);
      const auto actual = marginal_moments(doubled, face);
      for (std::size_t i = 0; i < actual.size(); ++i)
        marginal = std::max(marginal, std::fabs(to_double(S(actual[i] - expected[i]))));
    }
    return 0;
  });
  doc["semigroup_residual"] = json::scalar(law);
  doc["marginal_residual"] = json::scalar(marginal);
  doc["max_residual"] = json::scalar(std::max(law, marginal));
  return {doc, std::max(law, marginal) <= default_tolerance(o, kind)};
}

Outcome cmd_verify(const Options& o, const Io& io) {
  const auto kind = resolve_kind(o, ScalarKind::rational);
  if (o.suite == "voiculescu") return verify_voiculescu(o, io, kind);
  if (o.suite == "chi") return verify_chi(o, io, kind);
  if (o.suite == "roundtrip") return verify_roundtrip(o, io, kind);
  if (o.suite == "limits") return verify_limits(o, io);
  return verify_semigroup(o, io, kind);
}

// ---- wiring ----------------------------------------------------------------------------------

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--degree", o.degree, "Maximal total degree D")->check(CLI::Range(0, 64));
  cmd->add_option("--kind", o.kind, "Scalar kind")->check(CLI::IsMember({"rational", "float"}));
  cmd->add_option("--seed", o.seed, "Seed for randomized steps");
  cmd->add_option("--threads", o.threads, "Worker threads for partition sums")->check(CLI::Range(1, 64));
  cmd->add_option("--tolerance", o.tolerance, "Verdict tolerance");
}

void add_files(CLI::App* cmd, Options& o, const std::string& help) {
  cmd->add_option("files", o.files, help);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bi-free probability toolkit: partitions, cumulants, convolution, Fock models, Levy-Hincin data"};
  app.name("bifree");
  app.require_subcommand(1);

  auto* partitions = app.add_subcommand("partitions", "Enumerate NC(n) or BNC(chi)");
  partitions->add_option("n", o.size, "Ground set size");
  partitions->add_option("--chi", o.chi, "Left/right labelling such as LRRL");
  partitions->add_flag("--mobius", o.mobius, "Include mu(pi, 1_n)");

  auto* cumulants = app.add_subcommand("cumulants", "Moments (table, measure, model) to cumulants");
  add_common(cumulants, o);
  add_files(cumulants, o, "Input document (default stdin)");

  auto* moments = app.add_subcommand("moments", "Cumulants (or measure, model) to moments");
  add_common(moments, o);
  add_files(moments, o, "Input document (default stdin)");

  auto* convolve = app.add_subcommand("convolve", "Additive bi-free convolution of two inputs");
  add_common(convolve, o);
  add_files(convolve, o, "Two input documents");

  auto* semigroup = app.add_subcommand("semigroup", "Scale cumulants by t");
  add_common(semigroup, o);
  add_files(semigroup, o, "Input document (default stdin)");
  semigroup->add_option("--t", o.t, "Positive rational t")->required();
  semigroup->add_flag("--cpsd-verified", o.cpsd_verified, "Input is known to be conditionally PSD");

  auto* make = app.add_subcommand("make", "Build a Gaussian, Poisson or compound Poisson cumulant table");
  add_common(make, o);
  make->add_option("family", o.family, "gaussian | poisson | compound")
      ->required()
      ->check(CLI::IsMember({"gaussian", "poisson", "compound"}));
  make->add_option("--s1", o.s1, "Gaussian kappa20");
  make->add_option("--s2", o.s2, "Gaussian kappa02");
  make->add_option("--c", o.c, "Gaussian kappa11");
  make->add_option("--lambda", o.lambda, "Poisson rate");
  make->add_option("--alpha", o.alpha, "Poisson jump, first coordinate");
  make->add_option("--beta", o.beta, "Poisson jump, second coordinate");
  make->add_option("--nu", o.nu, "Jump distribution file for compound Poisson");

  auto* lh_cumulants = app.add_subcommand("lh-cumulants", "Levy-Hincin data to cumulants");
  add_common(lh_cumulants, o);
  add_files(lh_cumulants, o, "Input document (default stdin)");

  auto* lh_validate = app.add_subcommand("lh-validate", "Check the Levy-Hincin measure relations");
  add_common(lh_validate, o);
  add_files(lh_validate, o, "Input document (default stdin)");

  auto* check_id = app.add_subcommand("check-id", "Conditional PSD and boundedness on a degree window");
  add_common(check_id, o);
  add_files(check_id, o, "Input document (default stdin)");
  check_id->add_option("--window", o.window, "Monomial degree d (needs 2d + 2 <= D)")->check(CLI::Range(1, 16));

  auto* gns = app.add_subcommand("gns", "Reconstruct a Fock model from a cumulant table");
  add_common(gns, o);
  add_files(gns, o, "Input document (default stdin)");
  gns->add_option("--window", o.window, "Monomial degree d (needs 2d + 2 <= D)")->check(CLI::Range(1, 16));

  auto* extract = app.add_subcommand("extract", "Levy measures of a commuting Fock model");
  add_common(extract, o);
  add_files(extract, o, "Input document (default stdin)");

  auto* fock_moments = app.add_subcommand("fock-moments", "Vacuum moments of a Fock model");
  add_common(fock_moments, o);
  add_files(fock_moments, o, "Input document (default stdin)");
  fock_moments->add_flag("--closed-form", o.closed_form, "Emit the closed-form cumulants instead");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite and report residuals");
  add_common(verify, o);
  verify->add_option("suite", o.suite, "voiculescu | chi | roundtrip | limits | semigroup")
      ->required()
      ->check(CLI::IsMember({"voiculescu", "chi", "roundtrip", "limits", "semigroup"}));
  add_files(verify, o, "Input document (default stdin)");
  verify->add_option("--model", o.model, "Input document");
  verify->add_option("--window", o.window, "GNS window for roundtrip on Levy-Hincin data")->check(CLI::Range(1, 16));
  verify->add_option("--lambda", o.lambda, "Poisson rate (limits)");
  verify->add_option("--alpha", o.alpha, "Poisson jump, first coordinate (limits)");
  verify->add_option("--beta", o.beta, "Poisson jump, second coordinate (limits)");
  verify->add_option("--nu", o.nu, "Jump distribution file (limits)");
  verify->add_option("--s", o.s, "First semigroup parameter");
  verify->add_option("--t", o.t, "Second semigroup parameter");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const Io io(in, out, err);
  try {
    Outcome outcome;
    if (partitions->parsed()) outcome = cmd_partitions(o);
    else if (cumulants->parsed()) outcome = cmd_cumulants(o, io);
    else if (moments->parsed()) outcome = cmd_moments(o, io);
    else if (convolve->parsed()) outcome = cmd_convolve(o, io);
    else if (semigroup->parsed()) outcome = cmd_semigroup(o, io);
    else if (make->parsed()) outcome = cmd_make(o, io);
    else if (lh_cumulants->parsed()) outcome = cmd_lh_cumulants(o, io);
    else if (lh_validate->parsed()) outcome = cmd_lh_validate(o, io);
    else if (check_id->parsed()) outcome = cmd_check_id(o, io);
    else if (gns->parsed()) outcome = cmd_gns(o, io);
    else if (extract->parsed()) outcome = cmd_extract(o, io);
    else if (fock_moments->parsed()) outcome = cmd_fock_moments(o, io);
    else outcome = cmd_verify(o, io);
    out << outcome.doc.dump(2) << "\n";
    return outcome.verdict ? kExitOk : kExitVerdictFalse;
  } catch (const std::exception& e) {
    err << "bifree: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace bifree::cli
