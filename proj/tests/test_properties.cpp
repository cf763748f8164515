#include <gtest/gtest.h>

#include "qzf/acceptance.hpp"

using namespace qzf;

// Seeds disjoint from those used by the acceptance run.
constexpr int kSeeds = 100;
constexpr std::uint64_t kBase = 10007;

TEST(Properties, FieldAxioms) {
  const PropertyResult r = property_field_axioms(kSeeds, kBase);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_EQ(r.seeds, kSeeds);
}

TEST(Properties, SplitForm) {
  const PropertyResult r = property_split_form(kSeeds, kBase);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, CharacterOrthogonality) {
  const PropertyResult r = property_character_orthogonality(kSeeds, kBase);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, Groebner) {
  const PropertyResult r = property_groebner(kSeeds, kBase);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, HyperplaneDedup) {
  const PropertyResult r = property_hyperplane_dedup(kSeeds, kBase);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
