#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qzf/groups.hpp"

namespace qzf {

/// Groups used for rank-one checks: cyclic 2..8, binary dihedral 2..5, bt, bo, bi.
std::vector<GroupSpec> catalogue();

struct WreathCase {
  GroupSpec gamma;
  std::string delta;
  int n;
};
/// Gamma in cyclic 2..6, bd 2..3, bt; Delta in whole, comm and (binary dihedral only) cyc2; n in 1..3.
std::vector<WreathCase> numerology_cases();

struct PropertyResult {
  std::string name;
  int seeds = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && seeds > 0; }
};

PropertyResult property_field_axioms(int seeds, std::uint64_t base = 1);
PropertyResult property_split_form(int seeds, std::uint64_t base = 1);
PropertyResult property_character_orthogonality(int seeds, std::uint64_t base = 1);
PropertyResult property_groebner(int seeds, std::uint64_t base = 1);
PropertyResult property_hyperplane_dedup(int seeds, std::uint64_t base = 1);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

}  // namespace qzf
