#pragma once

#include "crn/kinetics.hpp"

namespace crn {

struct TranslationMove {
  std::string reaction_label;
  int multiplier = 1;
  Complex new_reactant;
  Complex new_product;
};

struct TransformRecord {
  KineticSystem source;
  KineticSystem result;
  std::vector<TranslationMove> moves;
};

/// Replaces reaction y -> y' by (1+a)y -> y' + ay. The F-row and rate are
/// carried over; the reaction vector is unchanged.
KineticSystem translate_reaction(const KineticSystem& sys, int reaction, int multiplier);

struct CfRmOptions {
  /// For PL-RDK inputs: translate this reaction anyway (by label), producing
  /// a dynamically equivalent deficiency +1 realization.
  std::optional<std::string> force_translate;
};

/// CF-RM+ method: at each NDK node one maximal CF-subset is retained
/// (ties broken by smallest member reaction index) and every reaction in the
/// other CF-subsets is translated with the smallest multiplier making both
/// new complexes fresh. The result is PL-RDK and dynamically equivalent to
/// the input. PL-RDK input yields a no-op record unless force_translate is set.
TransformRecord cf_rm_plus(const KineticSystem& sys, const CfRmOptions& options = {});

struct EquivalenceReport {
  bool equivalent = false;
  std::vector<std::string> discrepancies;  // one entry per disagreeing species
};

/// True iff both systems generate the same ODEs. Rate labels are compared
/// symbolically (identical labels denote identical values); numeric rates
/// exactly. Reactions without a rate are treated as carrying a symbol
/// derived from their label.
EquivalenceReport dynamically_equivalent(const KineticSystem& a, const KineticSystem& b);

}  // namespace crn
