#include "crn/kinetics.hpp"

#include <algorithm>
#include <map>

namespace crn {

int KineticSystem::reaction_index(const std::string& label) const {
  for (std::size_t j = 0; j < net.reactions.size(); ++j)
    if (net.reactions[j].label == label) return static_cast<int>(j);
  return -1;
}

KineticSystem make_kinetic_system(Network net, RationalMatrix F,
                                  std::vector<Rate> rates) {
  if (F.size() != net.reactions.size())
    throw ValidationError("kinetic order matrix must have one row per reaction");
  for (const auto& row : F)
    if (row.size() != net.species.size())
      throw ValidationError("kinetic order row width must equal species count");
  if (rates.empty()) rates.assign(net.reactions.size(), Rate::none());
  if (rates.size() != net.reactions.size())
    throw ValidationError("rate vector must have one entry per reaction");
  for (const auto& rate : rates)
    if (rate.kind == Rate::Kind::Number && rate.value <= 0)
      throw ValidationError("rate constants must be positive");
  return {std::move(net), std::move(F), std::move(rates)};
}

KineticSystem mass_action_system(Network net, std::vector<Rate> rates) {
  RationalMatrix F;
  for (const auto& rx : net.reactions) {
    RationalVector row(net.species.size(), Rational(0));
    for (const auto& [sp, c] : net.complexes[rx.reactant].coeffs) row[sp] = c;
    F.push_back(std::move(row));
  }
  return make_kinetic_system(std::move(net), std::move(F), std::move(rates));
}

KineticsClassification classify_kinetics(const KineticSystem& sys) {
  KineticsClassification cls;
  // Group each reactant complex's outgoing reactions by exact F-row.
  std::map<int, std::vector<int>> outgoing;
  for (std::size_t j = 0; j < sys.net.reactions.size(); ++j)
    outgoing[sys.net.reactions[j].reactant].push_back(static_cast<int>(j));

  for (const auto& [cx, rxns] : outgoing) {
    std::vector<std::vector<int>> subsets;
    for (int j : rxns) {
      bool placed = false;
      for (auto& subset : subsets)
        if (sys.F[subset.front()] == sys.F[j]) {
          subset.push_back(j);
          placed = true;
          break;
        }
      if (!placed) subsets.push_back({j});
    }
    if (subsets.size() < 2) continue;
    NdkNode node;
    node.reactant_complex = cx;
    node.cf_subsets = std::move(subsets);
    node.binary = node.cf_subsets.size() == 2 &&
                  node.cf_subsets[0].size() == 1 && node.cf_subsets[1].size() == 1;
    node.monospecies_reactant = sys.net.complexes[cx].support().size() == 1;
    cls.ndk_nodes.push_back(std::move(node));
  }

  cls.kind = cls.ndk_nodes.empty() ? KineticsClassification::Kind::PL_RDK
                                   : KineticsClassification::Kind::PL_NDK;
  if (cls.ndk_nodes.size() == 1) {
    auto& node = cls.ndk_nodes.front();
    bool has_singleton = std::any_of(
        node.cf_subsets.begin(), node.cf_subsets.end(),
        [](const auto& s) { return s.size() == 1; });
    if (node.cf_subsets.size() == 2 && has_singleton) {
      node.minimal = true;
      cls.minimally_ndk = true;
    }
  }
  return cls;
}

std::vector<SFPair> find_sf_pairs(const KineticSystem& sys, SFPairFilter filter) {
  const auto parts = linkage_partitions(sys.net);
  const std::size_t r = sys.net.reactions.size();
  std::vector<SFPair> pairs;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      int diff = -1;
      int count = 0;
      for (std::size_t sp = 0; sp < sys.net.species.size(); ++sp) {
        if (sys.F[a][sp] != sys.F[b][sp]) {
          diff = static_cast<int>(sp);
          if (++count > 1) break;
        }
      }
      if (count != 1) continue;
      SFPair p;
      p.reaction_a = static_cast<int>(a);
      p.reaction_b = static_cast<int>(b);
      p.species = diff;
      p.species_id = sys.net.species[diff].id;
      int ra = sys.net.reactions[a].reactant;
      int rb = sys.net.reactions[b].reactant;
      p.both_nonterminal_reactants =
          !parts.complex_is_terminal[ra] && !parts.complex_is_terminal[rb];
      p.same_linkage_class =
          parts.linkage_of_complex[ra] == parts.linkage_of_complex[rb];
      if (filter == SFPairFilter::NonterminalOnly && !p.both_nonterminal_reactants)
        continue;
      if (filter == SFPairFilter::SameLinkageClass && !p.same_linkage_class)
        continue;
      pairs.push_back(std::move(p));
    }
  }
  return pairs;
}

RationalMatrix t_tilde(const KineticSystem& sys) {
  if (!classify_kinetics(sys).is_rdk())
    throw ValidationError("T-tilde undefined for NDK nodes");
  const std::size_t m = sys.net.species.size();
  const std::size_t n = sys.net.complexes.size();
  RationalMatrix T(m, RationalVector(n, Rational(0)));
  for (std::size_t j = 0; j < sys.net.reactions.size(); ++j) {
    int cx = sys.net.reactions[j].reactant;
    for (std::size_t sp = 0; sp < m; ++sp) T[sp][cx] = sys.F[j][sp];
  }
  return T;
}

}  // namespace crn
