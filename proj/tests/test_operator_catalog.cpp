#include <cmath>

#include <gtest/gtest.h>

#include "weylkit/operator_catalog.hpp"
#include "weylkit/weyl_checker.hpp"

using namespace weylkit;

namespace {

CatalogEntry entry(const std::string& name) { return make_catalog_entry(name, default_catalog_params(name)); }

const std::set<std::string> kClosureKeys{"in_HP_closure", "in_SP_closure"};

}  // namespace

TEST(Catalog, ExampleABrowderSpectrum) {
  const auto e = make_catalog_entry("exampleA", {});
  EXPECT_TRUE(equal(e.picture.sigma_b, Region::points({0.0})));
}

TEST(Catalog, Ex29TruncationEntry) {
  const auto e = make_catalog_entry("ex29", {{"J", 2.0}});
  ASSERT_TRUE(e.has_truncation());
  EXPECT_NEAR(e.truncation(3).entries(0, 1).real(), 0.117851, 1e-6);
}

TEST(Catalog, HarmonicMonomialWeylSpectrumIsCircle) {
  const auto e = make_catalog_entry("harmonicMonomial", {{"n", 3.0}});
  EXPECT_TRUE(equal(e.picture.sigma_w, Region::circle(0.0, 1.0)));
  EXPECT_FALSE(e.has_truncation());
  EXPECT_EQ(e.picture.flags.is_hyponormal, std::optional<bool>(false));
}

TEST(Catalog, UnknownAndMissingParameters) {
  EXPECT_THROW(make_catalog_entry("nope"), UnknownName);
  EXPECT_THROW(make_catalog_entry("ex29", {}), InvalidInput);
  EXPECT_THROW(make_catalog_entry("ex29", {{"J", 1.0}}), InvalidInput);
  EXPECT_THROW(make_catalog_entry("harmonicMonomial", {{"n", 2.5}}), InvalidInput);
}

TEST(Catalog, TruncationGenerators) {
  for (const auto& name : catalog_names()) {
    const bool expected = name == "ex29" || name == "cho" || name == "zbarPlusZsqOver3";
    EXPECT_EQ(entry(name).has_truncation(), expected) << name;
  }
  EXPECT_THROW(entry("exampleA").truncation(4), InvalidInput);
}

TEST(Catalog, GoldenVerdicts) {
  for (const auto& name : catalog_names()) {
    const auto e = entry(name);
    const auto report = evaluate_properties(e.picture);
    for (const auto& [key, value] : e.recorded_verdicts) {
      if (kClosureKeys.contains(key)) continue;
      EXPECT_EQ(report.get(key), value) << name << "." << key;
    }
  }
}

TEST(Catalog, HPClosureVerdicts) {
  for (const auto& name : catalog_names()) {
    const auto e = entry(name);
    auto it = e.recorded_verdicts.find("in_HP_closure");
    if (it == e.recorded_verdicts.end()) continue;
    EXPECT_EQ(closure_hp_connectedness(e.picture, 512), it->second) << name;
  }
}

TEST(Catalog, VerdictKeysAreKnown) {
  const std::set<std::string> allowed{"weyl", "browder", "property_w", "uwe", "ve", "we", "in_HP_closure",
                                      "in_SP_closure"};
  for (const auto& name : catalog_names())
    for (const auto& [key, value] : entry(name).recorded_verdicts) EXPECT_TRUE(allowed.contains(key)) << name << key;
}

TEST(Catalog, ChoHasNoIsolatedWeylPoints) {
  const auto e = entry("cho");
  EXPECT_TRUE(isolated_points(e.picture.sigma_w).empty());
  EXPECT_TRUE(isolated_points(e.picture.sigma_uw).empty());
}

TEST(Catalog, Ex29TruncationsAreNilpotent) {
  const auto e = entry("ex29");
  for (int n : {16, 64, 128})
    for (auto v : eigenvalues(e.truncation(n))) EXPECT_LE(std::abs(v), 1e-10) << n;
}

TEST(Catalog, Ex29IsUnstableUnderCompacts) { EXPECT_FALSE(uwe_stable_under_compacts(entry("ex29").picture, 512)); }
