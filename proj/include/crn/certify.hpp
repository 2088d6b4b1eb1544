#pragma once

#include "crn/decomposition.hpp"

#include <optional>

namespace crn {

enum class Evidence { Asserted, NumericEvidence, Unknown };

struct AssumptionLedger {
  Evidence positive_equilibrium = Evidence::Unknown;
  Evidence complex_balanced = Evidence::Unknown;
  // Witness backing a NumericEvidence entry.
  std::optional<std::vector<double>> witness_state;
  double witness_residual = 0.0;
  double witness_g_residual = 0.0;
};

enum class TheoremPath {
  SF_PLRDK_Deficiency1,    // deficiency-one SF theorem for PL-RDK
  DeficiencyZero,          // deficiency-zero SF-type theorem
  MonospeciesCorollary,    // monospecies NDK node corollary
  AppendixRestricted,      // deficiency-zero, SF-pair within one linkage class
  DecompositionACR,
  DecompositionBCR,
};

std::string theorem_name(TheoremPath path);

struct RobustnessCertificate {
  enum class Kind { ACR, BCR };
  Kind kind = Kind::ACR;
  std::string species;
  TheoremPath theorem = TheoremPath::DeficiencyZero;
  std::optional<SFPair> sf_pair;
  std::optional<int> ndk_node_complex;
  std::optional<int> part_index;   // witnessing part, decomposition paths only
  std::optional<int> parent_delta; // recorded for decomposition paths
  bool conditional = false;        // required equilibrium assumption unknown
  std::string notes;
  AssumptionLedger assumptions;
};

struct CertifyResult {
  std::vector<RobustnessCertificate> certificates;
  std::vector<std::string> reasons;  // why rules did not fire
};

/// Fires the single-network ACR rules in order and emits one certificate per
/// (species, theorem path). Certificates are conditional when the required
/// equilibrium assumption is Unknown.
CertifyResult certify_single(const KineticSystem& sys, const AssumptionLedger& ledger);

/// ACR/BCR via a verified decomposition: an independent (resp. incidence
/// independent) decomposition with a low-deficiency SF-type part yields
/// ACR (resp. BCR) in the pair's species for the whole system.
CertifyResult certify_with_decomposition(const KineticSystem& sys,
                                         const Decomposition& decomp,
                                         const AssumptionLedger& ledger);

/// True iff every species carries an ACR certificate (sufficient direction
/// only; absence of certificates proves nothing).
bool birch_check(const std::vector<RobustnessCertificate>& certs,
                 const KineticSystem& sys);

struct SFPairStructure {
  // For each species Y != X: Y in supp y  <=>  Y in supp y'.
  std::vector<std::pair<std::string, bool>> shared_species_support;
  bool x_in_union = false;
  bool reactants_differ_only_in_x = false;  // asserted only for 0/1 stoichiometry
  bool zero_one_stoichiometry = false;
  std::vector<std::string> warnings;
};

/// Evaluates the structural properties of an SF-pair's reactant complexes.
/// Throws if the pair is not an SF-pair of the system.
SFPairStructure sf_pair_structure(const KineticSystem& sys, const SFPair& pair);

}  // namespace crn
