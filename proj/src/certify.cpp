#include "crn/certify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace crn {

std::string theorem_name(TheoremPath path) {
  switch (path) {
    case TheoremPath::SF_PLRDK_Deficiency1: return "SF-PLRDK-d1";
    case TheoremPath::DeficiencyZero: return "DZ-d0";
    case TheoremPath::MonospeciesCorollary: return "DZ-monospecies-corollary";
    case TheoremPath::AppendixRestricted: return "DZ-appendix-restricted";
    case TheoremPath::DecompositionACR: return "decomp-ACR";
    case TheoremPath::DecompositionBCR: return "decomp-BCR";
  }
  return "?";
}

namespace {

bool already_emitted(const std::vector<RobustnessCertificate>& certs,
                     const std::string& species, TheoremPath path,
                     RobustnessCertificate::Kind kind) {
  return std::any_of(certs.begin(), certs.end(), [&](const auto& c) {
    return c.species == species && c.theorem == path && c.kind == kind;
  });
}

RobustnessCertificate make_cert(RobustnessCertificate::Kind kind,
                                std::string species, TheoremPath path,
                                const AssumptionLedger& ledger, Evidence required) {
  RobustnessCertificate cert;
  cert.kind = kind;
  cert.species = std::move(species);
  cert.theorem = path;
  cert.assumptions = ledger;
  cert.conditional = (required == Evidence::Unknown);
  return cert;
}

}  // namespace

CertifyResult certify_single(const KineticSystem& sys, const AssumptionLedger& ledger) {
  CertifyResult result;
  const StructuralSummary sum = structural_summary(sys.net);
  const KineticsClassification cls = classify_kinetics(sys);
  const std::vector<SFPair> pairs = find_sf_pairs(sys);

  auto note_ledger = [&](RobustnessCertificate& cert, Evidence required,
                         const char* which) {
    if (required == Evidence::Unknown)
      cert.notes = std::string("conditional: ") + which +
                   " equilibrium existence not established";
  };

  // (a) deficiency one, PL-RDK, nonterminal SF condition.
  if (sum.delta == 1 && cls.is_rdk()) {
    for (const auto& pair : pairs) {
      if (!pair.both_nonterminal_reactants) continue;
      if (already_emitted(result.certificates, pair.species_id,
                          TheoremPath::SF_PLRDK_Deficiency1,
                          RobustnessCertificate::Kind::ACR))
        continue;
      auto cert = make_cert(RobustnessCertificate::Kind::ACR, pair.species_id,
                            TheoremPath::SF_PLRDK_Deficiency1, ledger,
                            ledger.positive_equilibrium);
      cert.sf_pair = pair;
      note_ledger(cert, ledger.positive_equilibrium, "positive");
      result.certificates.push_back(std::move(cert));
    }
  }

  // (b) deficiency zero, PL-RDK or minimally PL-NDK, any SF-pair.
  if (sum.delta == 0 && (cls.is_rdk() || cls.minimally_ndk)) {
    for (const auto& pair : pairs) {
      if (already_emitted(result.certificates, pair.species_id,
                          TheoremPath::DeficiencyZero,
                          RobustnessCertificate::Kind::ACR))
        continue;
      auto cert = make_cert(RobustnessCertificate::Kind::ACR, pair.species_id,
                            TheoremPath::DeficiencyZero, ledger,
                            ledger.positive_equilibrium);
      cert.sf_pair = pair;
      if (!cls.is_rdk()) cert.ndk_node_complex = cls.ndk_nodes.front().reactant_complex;
      note_ledger(cert, ledger.positive_equilibrium, "positive");
      result.certificates.push_back(std::move(cert));
    }
  } else if (sum.delta == 0 && !pairs.empty()) {
    result.reasons.push_back(
        "deficiency zero but neither PL-RDK nor minimally PL-NDK");
  }

  // (c) deficiency zero, minimally PL-NDK, monospecies NDK reactant.
  if (sum.delta == 0 && cls.minimally_ndk &&
      cls.ndk_nodes.front().monospecies_reactant) {
    const auto& node = cls.ndk_nodes.front();
    int sp = sys.net.complexes[node.reactant_complex].support().front();
    const std::string& id = sys.net.species[sp].id;
    if (!already_emitted(result.certificates, id, TheoremPath::MonospeciesCorollary,
                         RobustnessCertificate::Kind::ACR)) {
      auto cert = make_cert(RobustnessCertificate::Kind::ACR, id,
                            TheoremPath::MonospeciesCorollary, ledger,
                            ledger.complex_balanced);
      cert.ndk_node_complex = node.reactant_complex;
      note_ledger(cert, ledger.complex_balanced, "complex balanced");
      result.certificates.push_back(std::move(cert));
    }
  }

  // (d) deficiency zero, PL-RDK, SF-pair within one linkage class; recorded
  // separately from (b) for traceability.
  if (sum.delta == 0 && cls.is_rdk()) {
    for (const auto& pair : pairs) {
      if (!pair.same_linkage_class) continue;
      if (already_emitted(result.certificates, pair.species_id,
                          TheoremPath::AppendixRestricted,
                          RobustnessCertificate::Kind::ACR))
        continue;
      auto cert = make_cert(RobustnessCertificate::Kind::ACR, pair.species_id,
                            TheoremPath::AppendixRestricted, ledger,
                            ledger.positive_equilibrium);
      cert.sf_pair = pair;
      note_ledger(cert, ledger.positive_equilibrium, "positive");
      result.certificates.push_back(std::move(cert));
    }
  }

  if (result.certificates.empty()) {
    if (pairs.empty()) result.reasons.push_back("no SF-pair in any species");
    if (sum.delta > 1)
      result.reasons.push_back("deficiency " + std::to_string(sum.delta) +
                               " > 1: no single-network rule applies");
    if (sum.delta == 1 && !cls.is_rdk())
      result.reasons.push_back("deficiency one but PL-NDK");
  }
  return result;
}

CertifyResult certify_with_decomposition(const KineticSystem& sys,
                                         const Decomposition& decomp,
                                         const AssumptionLedger& ledger) {
  CertifyResult result;
  const DecompositionReport report = check_decomposition(sys, decomp);
  if (!report.independent && !report.incidence_independent) {
    result.reasons.push_back(
        "decomposition is neither independent nor incidence independent");
    return result;
  }

  // Parts in the same canonical order check_decomposition uses.
  auto parts = decomp.parts;
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Subnetwork sub = subnetwork_of(sys, parts[i]);
    const StructuralSummary& psum = report.parts[i];
    const KineticsClassification pcls = classify_kinetics(sub.sys);
    const std::vector<SFPair> ppairs = find_sf_pairs(sub.sys);
    for (const auto& pair : ppairs) {
      bool low_dz = psum.delta == 0 && (pcls.is_rdk() || pcls.minimally_ndk);
      // For the deficiency-one path the pair's reactants must additionally be
      // nonterminal in the part (deficiency-one theorem hypothesis).
      bool low_d1 = psum.delta == 1 && pcls.is_rdk() && pair.both_nonterminal_reactants;
      if (!low_dz && !low_d1) continue;

      if (report.independent &&
          !already_emitted(result.certificates, pair.species_id,
                           TheoremPath::DecompositionACR,
                           RobustnessCertificate::Kind::ACR)) {
        auto cert = make_cert(RobustnessCertificate::Kind::ACR, pair.species_id,
                              TheoremPath::DecompositionACR, ledger,
                              ledger.positive_equilibrium);
        cert.sf_pair = pair;
        cert.part_index = static_cast<int>(i);
        cert.parent_delta = report.whole.delta;
        if (report.whole.delta >= 2)
          cert.notes = "parent network has higher deficiency (delta = " +
                       std::to_string(report.whole.delta) + ")";
        if (ledger.positive_equilibrium == Evidence::Unknown)
          cert.notes += (cert.notes.empty() ? "" : "; ") +
                        std::string("conditional: positive equilibrium unknown");
        result.certificates.push_back(std::move(cert));
      }
      if (report.incidence_independent &&
          !already_emitted(result.certificates, pair.species_id,
                           TheoremPath::DecompositionBCR,
                           RobustnessCertificate::Kind::BCR)) {
        auto cert = make_cert(RobustnessCertificate::Kind::BCR, pair.species_id,
                              TheoremPath::DecompositionBCR, ledger,
                              ledger.complex_balanced);
        cert.kind = RobustnessCertificate::Kind::BCR;
        cert.sf_pair = pair;
        cert.part_index = static_cast<int>(i);
        cert.parent_delta = report.whole.delta;
        // Hypothesis as stated requires only incidence independence; the
        // paper's proof text mentions independence, noted for audit.
        cert.notes = "incidence-independent hypothesis applied";
        if (ledger.complex_balanced == Evidence::Unknown)
          cert.notes += "; conditional: complex balanced equilibrium unknown";
        result.certificates.push_back(std::move(cert));
      }
    }
  }
  if (result.certificates.empty())
    result.reasons.push_back("no part satisfies the low-deficiency SF-type hypotheses");
  return result;
}

bool birch_check(const std::vector<RobustnessCertificate>& certs,
                 const KineticSystem& sys) {
  for (const auto& sp : sys.net.species) {
    bool covered = std::any_of(certs.begin(), certs.end(), [&](const auto& c) {
      return c.kind == RobustnessCertificate::Kind::ACR && c.species == sp.id;
    });
    if (!covered) return false;
  }
  return !sys.net.species.empty();
}

SFPairStructure sf_pair_structure(const KineticSystem& sys, const SFPair& pair) {
  const auto pairs = find_sf_pairs(sys);
  bool valid = std::any_of(pairs.begin(), pairs.end(), [&](const SFPair& p) {
    return ((p.reaction_a == pair.reaction_a && p.reaction_b == pair.reaction_b) ||
            (p.reaction_a == pair.reaction_b && p.reaction_b == pair.reaction_a)) &&
           p.species == pair.species;
  });
  if (!valid)
    throw ValidationError("sf_pair_structure: not an SF-pair of this system");

  const Complex& y = sys.net.complexes[sys.net.reactions[pair.reaction_a].reactant];
  const Complex& yp = sys.net.complexes[sys.net.reactions[pair.reaction_b].reactant];

  SFPairStructure st;
  auto in_supp = [](const Complex& c, int sp) { return c.coeff(sp) != 0; };
  for (std::size_t sp = 0; sp < sys.net.species.size(); ++sp) {
    if (static_cast<int>(sp) == pair.species) continue;
    bool shared = in_supp(y, static_cast<int>(sp)) == in_supp(yp, static_cast<int>(sp));
    st.shared_species_support.emplace_back(sys.net.species[sp].id, shared);
    if (!shared)
      st.warnings.push_back("support of " + sys.net.species[sp].id +
                            " differs between reactant complexes");
  }
  st.x_in_union = in_supp(y, pair.species) || in_supp(yp, pair.species);
  if (!st.x_in_union)
    st.warnings.push_back("inconsistency: " + pair.species_id +
                          " absent from both reactant supports");

  st.zero_one_stoichiometry = true;
  for (const auto& cx : sys.net.complexes)
    for (const auto& [sp, c] : cx.coeffs)
      if (c != 0 && c != 1) st.zero_one_stoichiometry = false;
  if (st.zero_one_stoichiometry) {
    bool differ_only_x = true;
    for (std::size_t sp = 0; sp < sys.net.species.size(); ++sp) {
      if (static_cast<int>(sp) == pair.species) continue;
      if (y.coeff(static_cast<int>(sp)) != yp.coeff(static_cast<int>(sp)))
        differ_only_x = false;
    }
    st.reactants_differ_only_in_x = differ_only_x;
  }
  return st;
}

}  // namespace crn
