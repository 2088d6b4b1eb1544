#pragma once

#include "crn/model.hpp"

#include <optional>

namespace crn {

/// Rate constant attached to a reaction: a positive rational, a symbolic
/// label (identical labels denote identical values), or absent.
struct Rate {
  enum class Kind { None, Symbol, Number };
  Kind kind = Kind::None;
  std::string symbol;
  Rational value = 0;

  static Rate none() { return {}; }
  static Rate sym(std::string s) { return {Kind::Symbol, std::move(s), 0}; }
  static Rate num(Rational v) { return {Kind::Number, {}, std::move(v)}; }
};

struct KineticSystem {
  Network net;
  RationalMatrix F;          // r x m kinetic orders, one row per reaction
  std::vector<Rate> rates;   // size r

  int reaction_index(const std::string& label) const;
};

KineticSystem make_kinetic_system(Network net, RationalMatrix F,
                                  std::vector<Rate> rates = {});

/// Mass action: each F-row equals the reactant complex's coefficient vector.
KineticSystem mass_action_system(Network net, std::vector<Rate> rates = {});

struct NdkNode {
  int reactant_complex = -1;
  std::vector<std::vector<int>> cf_subsets;  // reaction indices, grouped by F-row
  bool minimal = false;
  bool binary = false;
  bool monospecies_reactant = false;
};

struct KineticsClassification {
  enum class Kind { PL_RDK, PL_NDK };
  Kind kind = Kind::PL_RDK;
  std::vector<NdkNode> ndk_nodes;
  bool minimally_ndk = false;

  bool is_rdk() const { return kind == Kind::PL_RDK; }
};

KineticsClassification classify_kinetics(const KineticSystem& sys);

struct SFPair {
  int reaction_a = -1;
  int reaction_b = -1;
  int species = -1;
  std::string species_id;
  bool both_nonterminal_reactants = false;
  bool same_linkage_class = false;
};

enum class SFPairFilter { All, NonterminalOnly, SameLinkageClass };

/// All unordered reaction pairs whose F-rows differ in exactly one
/// coordinate. Pairs sharing a reactant complex are admissible.
std::vector<SFPair> find_sf_pairs(const KineticSystem& sys,
                                  SFPairFilter filter = SFPairFilter::All);

/// m x n matrix whose column at each reactant complex is the (unique,
/// PL-RDK) F-row of its outgoing reactions; zero for non-reactant complexes.
/// Throws ValidationError for PL-NDK input.
RationalMatrix t_tilde(const KineticSystem& sys);

}  // namespace crn
