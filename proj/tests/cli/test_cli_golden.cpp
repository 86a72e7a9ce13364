#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "bifree/bifree.hpp"
#include "cli/cli.hpp"
#include "support/golden.hpp"

using namespace bifree;
using bifree::json::Json;

namespace {

using golden::invoke;
using golden::slurp;

const std::filesystem::path kGoldenDir = BIFREE_GOLDEN_DIR;

std::vector<golden::Case> load_cases() { return golden::load_cases(kGoldenDir); }

Json typed(const Json& doc) {
  const auto kind = json::kind_of(doc, ScalarKind::rational);
  if (doc.contains("entries")) {
    if (kind == ScalarKind::rational)
      return json::is_moment_table(doc) ? json::from_table(json::to_moment_table<Rational>(doc))
                                        : json::from_table(json::to_cumulant_table<Rational>(doc));
    return json::is_moment_table(doc) ? json::from_table(json::to_moment_table<double>(doc))
                                      : json::from_table(json::to_cumulant_table<double>(doc));
  }
  if (doc.contains("T1")) {
    if (kind == ScalarKind::rational) return json::from_model(json::to_model<Rational>(doc));
    return json::from_model(json::to_model<double>(doc));
  }
  if (doc.contains("kappa10")) {
    if (kind == ScalarKind::rational) return json::from_lh_data(json::to_lh_data<Rational>(doc));
    return json::from_lh_data(json::to_lh_data<double>(doc));
  }
  return doc;
}

// Re-serialises the typed part of a document through the library types; extra keys are kept.
std::string reprint(const Json& doc) {
  Json out = doc;
  const Json fields = typed(doc);
  for (const auto& [key, value] : fields.items()) out[key] = value;
  return out.dump(2);
}

}  // namespace

TEST_CASE("golden outputs") {
  const bool update = std::getenv("BIFREE_UPDATE_GOLDEN") != nullptr;
  const auto cases = load_cases();
  REQUIRE(cases.size() >= 13);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto first = invoke(c);
    CHECK(first.code == c.code);
    if (c.code == cli::kExitInputError) {
      CHECK(first.out.empty());
      CHECK_FALSE(first.err.empty());
      continue;
    }
    const auto expected = golden::expected_path(kGoldenDir, c);
    if (update) std::ofstream(expected, std::ios::binary) << first.out;
    REQUIRE(std::filesystem::exists(expected));
    CHECK(first.out == slurp(expected));
  }
}

TEST_CASE("reruns are byte-identical") {
  for (const auto& c : load_cases()) {
    CAPTURE(c.name);
    const auto first = invoke(c);
    const auto second = invoke(c);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}

TEST_CASE("seed and thread flags do not change results") {
  const std::vector<std::string> base{"verify", "limits", "--lambda", "1", "--alpha", "1", "--beta", "1"};
  const auto reference = invoke(base, "");
  for (const auto& extra : std::vector<std::vector<std::string>>{{"--seed", "7"}, {"--threads", "4"}}) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    CHECK(invoke(args, "").out == reference.out);
  }
}

TEST_CASE("outputs round-trip through their own format") {
  for (const auto& c : load_cases()) {
    if (c.code != cli::kExitOk) continue;
    CAPTURE(c.name);
    const auto r = invoke(c);
    const Json doc = json::parse(r.out);
    CHECK(reprint(doc) + "\n" == r.out);
  }
}

TEST_CASE("pipelines compose") {
  const auto poisson = invoke({"make", "poisson", "--lambda", "1/2", "--alpha", "2", "--beta", "-1", "--degree", "5"}, "");
  const auto moments = invoke({"moments"}, poisson.out);
  const auto back = invoke({"cumulants"}, moments.out);
  CHECK(back.code == 0);
  CHECK(back.out == poisson.out);

  const auto lh = slurp(kGoldenDir / "inputs" / "lh.json");
  const auto model = invoke({"gns", "--degree", "8", "--window", "3"}, invoke({"lh-cumulants", "--degree", "8"}, lh).out);
  REQUIRE(model.code == 0);
  const auto extracted = invoke({"extract"}, model.out);
  REQUIRE(extracted.code == 0);
  const auto data = json::to_lh_data<double>(json::parse(extracted.out));
  CHECK(data.kappa10 == doctest::Approx(0.5));
  CHECK(data.rho.weight_at(1.0, 2.0) == doctest::Approx(2.0));
}
