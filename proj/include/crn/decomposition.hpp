#pragma once

#include "crn/kinetics.hpp"

namespace crn {

struct Decomposition {
  std::vector<std::vector<int>> parts;  // disjoint reaction-index sets covering R
};

struct Subnetwork {
  KineticSystem sys;
  std::vector<int> reaction_map;  // sub index -> parent index
  std::vector<int> species_map;
  std::vector<int> complex_map;
};

/// Induced subnetwork on a reaction subset: complexes occurring in the
/// chosen reactions, species occurring in those complexes, F-rows restricted.
Subnetwork subnetwork_of(const KineticSystem& sys, const std::vector<int>& reactions);

struct DecompositionReport {
  StructuralSummary whole;
  std::vector<StructuralSummary> parts;
  int s_sum = 0;
  int nl_sum = 0;        // sum of (n_i - l_i)
  int delta_sum = 0;
  bool independent = false;
  bool incidence_independent = false;
  bool bi_independent = false;
  bool c_decomposition = false;
  std::string deficiency_relation;  // "<=", ">=", "=" vs sum of part deficiencies
};

/// Verifies independence (exact rank additivity), incidence independence
/// ((n - l) additivity), bi-independence and the C-property, and checks the
/// applicable deficiency inequality. Throws on a non-partition.
DecompositionReport check_decomposition(const KineticSystem& sys,
                                        const Decomposition& decomp);

/// Partition of reactions by the linkage class of their endpoints; always a
/// C-decomposition, hence always incidence independent.
Decomposition linkage_class_decomposition(const KineticSystem& sys);

}  // namespace crn
