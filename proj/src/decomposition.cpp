#include "crn/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace crn {

Subnetwork subnetwork_of(const KineticSystem& sys, const std::vector<int>& reactions) {
  if (reactions.empty())
    throw ValidationError("subnetwork_of: empty reaction set");
  std::vector<int> chosen = reactions;
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (int j : chosen)
    if (j < 0 || j >= static_cast<int>(sys.net.reactions.size()))
      throw ValidationError("subnetwork_of: invalid reaction index");

  Subnetwork sub;
  sub.reaction_map = chosen;

  std::set<int> complex_set, species_set;
  for (int j : chosen) {
    complex_set.insert(sys.net.reactions[j].reactant);
    complex_set.insert(sys.net.reactions[j].product);
  }
  for (int cx : complex_set)
    for (const auto& [sp, c] : sys.net.complexes[cx].coeffs) species_set.insert(sp);

  sub.complex_map.assign(complex_set.begin(), complex_set.end());
  sub.species_map.assign(species_set.begin(), species_set.end());

  std::vector<int> species_back(sys.net.species.size(), -1);
  for (std::size_t i = 0; i < sub.species_map.size(); ++i)
    species_back[sub.species_map[i]] = static_cast<int>(i);
  std::vector<int> complex_back(sys.net.complexes.size(), -1);
  for (std::size_t i = 0; i < sub.complex_map.size(); ++i)
    complex_back[sub.complex_map[i]] = static_cast<int>(i);

  std::vector<Species> species;
  for (int sp : sub.species_map) species.push_back(sys.net.species[sp]);
  std::vector<Complex> complexes;
  for (int cx : sub.complex_map) {
    Complex c;
    for (const auto& [sp, v] : sys.net.complexes[cx].coeffs)
      c.coeffs[species_back[sp]] = v;
    complexes.push_back(std::move(c));
  }
  std::vector<Reaction> rxns;
  RationalMatrix F;
  std::vector<Rate> rates;
  for (int j : chosen) {
    const auto& rx = sys.net.reactions[j];
    rxns.push_back({complex_back[rx.reactant], complex_back[rx.product], rx.label});
    RationalVector row;
    for (int sp : sub.species_map) row.push_back(sys.F[j][sp]);
    F.push_back(std::move(row));
    rates.push_back(sys.rates[j]);
  }

  Network net = build_network(std::move(species), std::move(complexes), std::move(rxns));
  sub.sys = make_kinetic_system(std::move(net), std::move(F), std::move(rates));
  return sub;
}

DecompositionReport check_decomposition(const KineticSystem& sys,
                                        const Decomposition& decomp) {
  const int r = static_cast<int>(sys.net.reactions.size());
  std::vector<int> cover(r, 0);
  for (const auto& part : decomp.parts) {
    if (part.empty()) throw ValidationError("decomposition has an empty part");
    for (int j : part) {
      if (j < 0 || j >= r)
        throw ValidationError("decomposition references invalid reaction index");
      ++cover[j];
    }
  }
  std::ostringstream bad;
  for (int j = 0; j < r; ++j) {
    if (cover[j] == 0) bad << " missing:" << sys.net.reactions[j].label;
    if (cover[j] > 1) bad << " overlapping:" << sys.net.reactions[j].label;
  }
  if (!bad.str().empty())
    throw ValidationError("not a partition of the reaction set:" + bad.str());

  // Parts ordered by least reaction index.
  auto parts = decomp.parts;
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  DecompositionReport report;
  report.whole = structural_summary(sys.net);
  std::vector<std::set<int>> complex_sets;
  for (const auto& part : parts) {
    Subnetwork sub = subnetwork_of(sys, part);
    report.parts.push_back(structural_summary(sub.sys.net));
    complex_sets.emplace_back(sub.complex_map.begin(), sub.complex_map.end());
  }
  for (const auto& ps : report.parts) {
    report.s_sum += ps.s;
    report.nl_sum += ps.n - ps.l;
    report.delta_sum += ps.delta;
  }
  report.independent = report.whole.s == report.s_sum;
  report.incidence_independent = report.whole.n - report.whole.l == report.nl_sum;
  report.bi_independent = report.independent && report.incidence_independent;

  report.c_decomposition = true;
  for (std::size_t i = 0; i < complex_sets.size() && report.c_decomposition; ++i)
    for (std::size_t j = i + 1; j < complex_sets.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(complex_sets[i].begin(), complex_sets[i].end(),
                            complex_sets[j].begin(), complex_sets[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        report.c_decomposition = false;
        break;
      }
    }

  if (report.bi_independent)
    report.deficiency_relation = "=";
  else if (report.independent)
    report.deficiency_relation = "<=";
  else if (report.incidence_independent)
    report.deficiency_relation = ">=";
  else
    report.deficiency_relation = "none";
  return report;
}

Decomposition linkage_class_decomposition(const KineticSystem& sys) {
  const auto parts = linkage_partitions(sys.net);
  Decomposition decomp;
  decomp.parts.assign(parts.linkage_classes.size(), {});
  for (std::size_t j = 0; j < sys.net.reactions.size(); ++j)
    decomp.parts[parts.linkage_of_complex[sys.net.reactions[j].reactant]]
        .push_back(static_cast<int>(j));
  return decomp;
}

}  // namespace crn
