#include "nilstab/stability.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace nilstab;

namespace {

FinAbPresentation gl_coinvariants(const char *spec, unsigned r) {
  BasedModule m = eval_module(parse_module_spec(spec), r);
  std::vector<IntMatrix> gens;
  for (const auto &a : gl_generators(r))
    gens.push_back(m.action(a));
  return coinvariants(gens, m.dimension(), m.relations);
}

std::vector<std::string> values(const ScanReport &report) {
  std::vector<std::string> out;
  for (const auto &e : report.entries)
    out.push_back(e.h0.to_string());
  return out;
}

} // namespace

TEST(Coinvariants, Examples) {
  EXPECT_EQ(gl_coinvariants("std", 1).to_string(), "Z/2");
  for (unsigned r = 2; r <= 4; ++r) {
    EXPECT_EQ(gl_coinvariants("std", r).to_string(), "0");
    EXPECT_EQ(gl_coinvariants("dual", r).to_string(), "0");
    EXPECT_EQ(gl_coinvariants("std (x) dual", r).to_string(), "Z");
  }
  EXPECT_EQ(gl_coinvariants("dual", 1).to_string(), "Z/2");
  EXPECT_EQ(gl_coinvariants("const", 3).to_string(), "Z");
  EXPECT_EQ(gl_coinvariants("const(Z/4)", 2).to_string(), "Z/4");
  EXPECT_EQ(coinvariants({}, 2).to_string(), "Z^2");
  EXPECT_EQ(coinvariants({IntMatrix{{0, 1}, {1, 0}}}, 2).to_string(), "Z");
  EXPECT_THROW(coinvariants({IntMatrix{{1}}}, 2), std::invalid_argument);
}

TEST(Coinvariants, GeneratorSets) {
  EXPECT_EQ(gl_generators(1).size(), 1u);
  for (unsigned r = 1; r <= 4; ++r) {
    std::size_t gl = r * (r - 1) + r * (r - 1) / 2 + 1;
    EXPECT_EQ(gl_generators(r).size(), gl);
    for (unsigned c = 1; c <= 3; ++c) {
      std::size_t expected = gl;
      for (unsigned k = 2; k <= c; ++k)
        expected += r * witt_rank(r, k).get_ui();
      EXPECT_EQ(aut_generators(r, c).size(), expected) << r << "," << c;
      for (const auto &g : aut_generators(r, c))
        EXPECT_TRUE(is_automorphism(g));
    }
  }
}

TEST(InducedMap, Examples) {
  IntMatrix none(1, 0);
  auto iso = check_induced_map(IntMatrix{{1}}, IntMatrix{{2}}, IntMatrix{{2}});
  EXPECT_TRUE(iso.is_iso());
  auto quotient = check_induced_map(IntMatrix{{1}}, none, IntMatrix{{2}});
  EXPECT_TRUE(quotient.well_defined);
  EXPECT_TRUE(quotient.surjective);
  EXPECT_FALSE(quotient.injective);
  auto bad = check_induced_map(IntMatrix{{2}}, IntMatrix{{2}}, none);
  EXPECT_FALSE(bad.well_defined);
  EXPECT_FALSE(bad.is_iso());
  auto doubling = check_induced_map(IntMatrix{{2}}, none, none);
  EXPECT_TRUE(doubling.well_defined);
  EXPECT_TRUE(doubling.injective);
  EXPECT_FALSE(doubling.surjective);
  auto into_zero = check_induced_map(IntMatrix(0, 1), none, IntMatrix(0, 0));
  EXPECT_TRUE(into_zero.well_defined);
  EXPECT_FALSE(into_zero.injective);
  EXPECT_TRUE(into_zero.surjective);
}

TEST(Scan, StandardModule) {
  for (unsigned c = 1; c <= 2; ++c) {
    ScanReport report = stability_scan(ModuleSpec::standard(), c, 1, 4);
    EXPECT_EQ(values(report), (std::vector<std::string>{"Z/2", "0", "0", "0"}));
    ASSERT_TRUE(report.stabilized_from.has_value());
    EXPECT_EQ(*report.stabilized_from, 2u);
    EXPECT_EQ(report.entries[0].map_to_next_is_iso, false);
    EXPECT_EQ(report.entries[1].map_to_next_is_iso, true);
    EXPECT_FALSE(report.entries[3].map_to_next_is_iso.has_value());
    // The new coordinate survives in the middle group.
    EXPECT_EQ(report.entries[1].first_map_is_iso, false);
  }
}

TEST(Scan, ConstantModule) {
  ScanReport report = stability_scan(ModuleSpec::constant(), 3, 1, 3);
  EXPECT_EQ(values(report), (std::vector<std::string>{"Z", "Z", "Z"}));
  EXPECT_EQ(report.stabilized_from, 1u);
  for (std::size_t i = 0; i + 1 < report.entries.size(); ++i) {
    EXPECT_EQ(report.entries[i].first_map_is_iso, true);
    EXPECT_EQ(report.entries[i].second_map_is_iso, true);
  }
}

TEST(Scan, TraceModule) {
  ScanReport report = stability_scan(parse_module_spec("std (x) dual"), 2, 1, 4);
  EXPECT_EQ(values(report), (std::vector<std::string>{"Z", "Z", "Z", "Z"}));
  EXPECT_EQ(report.stabilized_from, 1u);
}

TEST(Scan, RangeHandling) {
  ScanReport single = stability_scan(ModuleSpec::standard(), 1, 3, 3);
  EXPECT_EQ(single.entries.size(), 1u);
  EXPECT_FALSE(single.stabilized_from.has_value());
  EXPECT_THROW(stability_scan(ModuleSpec::standard(), 1, 3, 2), std::invalid_argument);
  EXPECT_THROW(stability_scan(ModuleSpec::standard(), 0, 1, 2), std::invalid_argument);
}

TEST(KernelHomology, Ranks) {
  EXPECT_EQ(kernel_homology_rank(1, 0, ModuleSpec::constant(), 3), 1);
  EXPECT_EQ(kernel_homology_rank(1, 2, ModuleSpec::constant(), 2), 1);
  EXPECT_EQ(kernel_homology_rank(2, 1, ModuleSpec::standard(), 2), 8);
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned c = 1; c <= 2; ++c)
      for (unsigned t = 0; t <= 3; ++t) {
        Integer hom = r * witt_rank(r, c + 1);
        EXPECT_EQ(kernel_homology_rank(c, t, ModuleSpec::standard(), r), binomial(hom, t) * r);
      }
}
