#include "crn/transform.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace crn {

namespace {

/// Rebuilds a KineticSystem from a working complex list and reaction
/// endpoint indices, pruning complexes no reaction touches.
KineticSystem rebuild(const KineticSystem& sys,
                      const std::vector<Complex>& complexes,
                      const std::vector<Reaction>& reactions) {
  std::vector<bool> used(complexes.size(), false);
  for (const auto& rx : reactions) {
    used[rx.reactant] = true;
    used[rx.product] = true;
  }
  std::vector<Complex> kept;
  std::vector<int> remap(complexes.size(), -1);
  for (std::size_t i = 0; i < complexes.size(); ++i) {
    if (!used[i]) continue;
    remap[i] = static_cast<int>(kept.size());
    kept.push_back(complexes[i]);
  }
  std::vector<Reaction> remapped = reactions;
  for (auto& rx : remapped) {
    rx.reactant = remap[rx.reactant];
    rx.product = remap[rx.product];
  }
  Network net = build_network(sys.net.species, std::move(kept), std::move(remapped));
  return make_kinetic_system(std::move(net), sys.F, sys.rates);
}

int add_complex(std::vector<Complex>& complexes, const Complex& c) {
  auto it = std::find(complexes.begin(), complexes.end(), c);
  if (it != complexes.end()) return static_cast<int>(it - complexes.begin());
  complexes.push_back(c);
  return static_cast<int>(complexes.size() - 1);
}

}  // namespace

KineticSystem translate_reaction(const KineticSystem& sys, int reaction, int multiplier) {
  if (reaction < 0 || reaction >= static_cast<int>(sys.net.reactions.size()))
    throw ValidationError("translate_reaction: no such reaction");
  if (multiplier < 1)
    throw ValidationError("translate_reaction: multiplier must be >= 1");
  std::vector<Complex> complexes = sys.net.complexes;
  std::vector<Reaction> reactions = sys.net.reactions;
  const Complex& y = sys.net.complexes[reactions[reaction].reactant];
  const Complex& yp = sys.net.complexes[reactions[reaction].product];
  Complex shift = complex_scale(y, Rational(multiplier));
  reactions[reaction].reactant = add_complex(complexes, complex_sum(y, shift));
  reactions[reaction].product = add_complex(complexes, complex_sum(yp, shift));
  return rebuild(sys, complexes, reactions);
}

TransformRecord cf_rm_plus(const KineticSystem& sys, const CfRmOptions& options) {
  TransformRecord record;
  record.source = sys;

  const auto cls = classify_kinetics(sys);
  std::vector<int> to_translate;
  if (cls.is_rdk()) {
    if (options.force_translate) {
      int j = sys.reaction_index(*options.force_translate);
      if (j < 0)
        throw ValidationError("force_translate: no reaction labeled " +
                              *options.force_translate);
      to_translate.push_back(j);
    } else {
      record.result = sys;  // already PL-RDK, nothing to do
      return record;
    }
  } else {
    for (const auto& node : cls.ndk_nodes) {
      auto subsets = node.cf_subsets;
      // Retain a maximal CF-subset; tie-break by smallest reaction index.
      std::stable_sort(subsets.begin(), subsets.end(),
                       [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return *std::min_element(a.begin(), a.end()) <
                                *std::min_element(b.begin(), b.end());
                       });
      for (std::size_t i = 1; i < subsets.size(); ++i)
        for (int j : subsets[i]) to_translate.push_back(j);
    }
    std::sort(to_translate.begin(), to_translate.end());
  }

  std::vector<Complex> complexes = sys.net.complexes;
  std::vector<Reaction> reactions = sys.net.reactions;
  for (int j : to_translate) {
    const Complex y = complexes[reactions[j].reactant];
    const Complex yp = complexes[reactions[j].product];
    int a = 0;
    Complex new_reactant, new_product;
    for (a = 1;; ++a) {
      Complex shift = complex_scale(y, Rational(a));
      new_reactant = complex_sum(y, shift);
      new_product = complex_sum(yp, shift);
      bool fresh =
          std::find(complexes.begin(), complexes.end(), new_reactant) == complexes.end() &&
          std::find(complexes.begin(), complexes.end(), new_product) == complexes.end();
      if (fresh) break;
    }
    reactions[j].reactant = add_complex(complexes, new_reactant);
    reactions[j].product = add_complex(complexes, new_product);
    record.moves.push_back({sys.net.reactions[j].label, a, new_reactant, new_product});
  }

  record.result = rebuild(sys, complexes, reactions);
  return record;
}

namespace {

// Coefficient of one monomial in one species' ODE: a linear combination of
// rate symbols, with numeric rates folded into the "" key.
using LinearComb = std::map<std::string, Rational>;

void accumulate(LinearComb& comb, const Rate& rate, const std::string& label,
                const Rational& coeff) {
  std::string key;
  Rational value = coeff;
  switch (rate.kind) {
    case Rate::Kind::Number:
      key = "";
      value *= rate.value;
      break;
    case Rate::Kind::Symbol:
      key = rate.symbol;
      break;
    case Rate::Kind::None:
      key = "k[" + label + "]";
      break;
  }
  Rational v = comb[key] + value;
  if (v == 0)
    comb.erase(key);
  else
    comb[key] = v;
}

// species id -> (F-row in canonical species order -> net coefficient)
using OdeForm = std::map<std::string, std::map<RationalVector, LinearComb>>;

OdeForm canonical_ode(const KineticSystem& sys,
                      const std::vector<std::string>& species_order) {
  OdeForm form;
  std::vector<int> local(species_order.size(), -1);
  for (std::size_t i = 0; i < species_order.size(); ++i)
    local[i] = sys.net.species_index(species_order[i]);
  for (std::size_t j = 0; j < sys.net.reactions.size(); ++j) {
    RationalVector row(species_order.size(), Rational(0));
    for (std::size_t i = 0; i < species_order.size(); ++i)
      row[i] = sys.F[j][local[i]];
    RationalVector rv = reaction_vector(sys.net, static_cast<int>(j));
    for (std::size_t i = 0; i < species_order.size(); ++i) {
      const Rational& coeff = rv[local[i]];
      if (coeff == 0) continue;
      accumulate(form[species_order[i]][row], sys.rates[j],
                 sys.net.reactions[j].label, coeff);
    }
  }
  // Drop monomials whose coefficients all cancelled.
  for (auto& [sp, monomials] : form)
    for (auto it = monomials.begin(); it != monomials.end();)
      it = it->second.empty() ? monomials.erase(it) : std::next(it);
  return form;
}

}  // namespace

EquivalenceReport dynamically_equivalent(const KineticSystem& a, const KineticSystem& b) {
  std::vector<std::string> ids_a, ids_b;
  for (const auto& sp : a.net.species) ids_a.push_back(sp.id);
  for (const auto& sp : b.net.species) ids_b.push_back(sp.id);
  std::sort(ids_a.begin(), ids_a.end());
  std::sort(ids_b.begin(), ids_b.end());
  if (ids_a != ids_b)
    throw ValidationError("dynamically_equivalent: species sets differ");

  EquivalenceReport report;
  OdeForm fa = canonical_ode(a, ids_a);
  OdeForm fb = canonical_ode(b, ids_a);
  for (const auto& id : ids_a) {
    if (fa[id] != fb[id]) {
      std::ostringstream os;
      os << "d" << id << "/dt differs (" << fa[id].size() << " vs "
         << fb[id].size() << " monomials after cancellation)";
      report.discrepancies.push_back(os.str());
    }
  }
  report.equivalent = report.discrepancies.empty();
  return report;
}

}  // namespace crn
