#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <algorithm>

using namespace crn;

namespace {

bool has_cert(const std::vector<RobustnessCertificate>& certs,
              const std::string& species, TheoremPath path,
              RobustnessCertificate::Kind kind = RobustnessCertificate::Kind::ACR) {
  return std::any_of(certs.begin(), certs.end(), [&](const auto& c) {
    return c.species == species && c.theorem == path && c.kind == kind;
  });
}

const RobustnessCertificate& get_cert(const std::vector<RobustnessCertificate>& certs,
                                      const std::string& species, TheoremPath path) {
  for (const auto& c : certs)
    if (c.species == species && c.theorem == path) return c;
  throw std::runtime_error("certificate not found");
}

AssumptionLedger asserted_positive() {
  AssumptionLedger ledger;
  ledger.positive_equilibrium = Evidence::Asserted;
  return ledger;
}

AssumptionLedger asserted_balanced() {
  AssumptionLedger ledger;
  ledger.positive_equilibrium = Evidence::Asserted;
  ledger.complex_balanced = Evidence::Asserted;
  return ledger;
}

SFPair pair_of(const KineticSystem& sys, const char* la, const char* lb,
               const char* species) {
  int a = sys.reaction_index(la), b = sys.reaction_index(lb);
  for (const auto& p : find_sf_pairs(sys)) {
    bool same = (p.reaction_a == a && p.reaction_b == b) ||
                (p.reaction_a == b && p.reaction_b == a);
    if (same && p.species_id == species) return p;
  }
  throw std::runtime_error("pair not found");
}

}  // namespace

TEST_CASE("Example 1 certifies ACR in A2 through the deficiency-zero rule") {
  KineticSystem sys = load_fixture("example1.json");
  CertifyResult res = certify_single(sys, asserted_positive());
  CHECK(has_cert(res.certificates, "A2", TheoremPath::DeficiencyZero));
  const auto& cert = get_cert(res.certificates, "A2", TheoremPath::DeficiencyZero);
  CHECK_FALSE(cert.conditional);
  REQUIRE(cert.sf_pair.has_value());
  CHECK(cert.sf_pair->species_id == "A2");
}

TEST_CASE("IDHKP certifies ACR in I") {
  KineticSystem sys = load_fixture("idhkp.json");
  CertifyResult res = certify_single(sys, asserted_positive());
  CHECK(has_cert(res.certificates, "I", TheoremPath::DeficiencyZero));
}

TEST_CASE("Schmitz certifies ACR in M1 two ways") {
  KineticSystem sys = load_fixture("schmitz.json");
  CertifyResult res = certify_single(sys, asserted_balanced());
  CHECK(has_cert(res.certificates, "M1", TheoremPath::DeficiencyZero));
  CHECK(has_cert(res.certificates, "M1", TheoremPath::MonospeciesCorollary));
  const auto& mono =
      get_cert(res.certificates, "M1", TheoremPath::MonospeciesCorollary);
  CHECK_FALSE(mono.conditional);
  REQUIRE(mono.ndk_node_complex.has_value());
  CHECK(format_complex(sys.net.complexes[*mono.ndk_node_complex], sys.net.species) ==
        "M1");
}

TEST_CASE("Example 4 certifies ACR in X1 and X3") {
  KineticSystem sys = load_fixture("example4.json");
  CertifyResult res = certify_single(sys, asserted_positive());
  CHECK(has_cert(res.certificates, "X1", TheoremPath::DeficiencyZero));
  CHECK(has_cert(res.certificates, "X3", TheoremPath::DeficiencyZero));
}

TEST_CASE("unknown assumptions make certificates conditional") {
  KineticSystem sys = load_fixture("example1.json");
  CertifyResult res = certify_single(sys, AssumptionLedger{});
  REQUIRE(has_cert(res.certificates, "A2", TheoremPath::DeficiencyZero));
  const auto& cert = get_cert(res.certificates, "A2", TheoremPath::DeficiencyZero);
  CHECK(cert.conditional);
  CHECK(cert.notes.find("conditional") != std::string::npos);
}

TEST_CASE("theorem names are stable") {
  CHECK(theorem_name(TheoremPath::SF_PLRDK_Deficiency1) == "SF-PLRDK-d1");
  CHECK(theorem_name(TheoremPath::DeficiencyZero) == "DZ-d0");
  CHECK(theorem_name(TheoremPath::MonospeciesCorollary) ==
        "DZ-monospecies-corollary");
  CHECK(theorem_name(TheoremPath::AppendixRestricted) == "DZ-appendix-restricted");
}

TEST_CASE("restricted same-linkage-class rule never fires beyond the general one") {
  for (const char* file : {"example1.json", "idhkp.json"}) {
    CAPTURE(file);
    KineticSystem sys = load_fixture(file);
    CertifyResult res = certify_single(sys, asserted_positive());
    for (const auto& c : res.certificates)
      if (c.theorem == TheoremPath::AppendixRestricted)
        CHECK(has_cert(res.certificates, c.species, TheoremPath::DeficiencyZero));
  }
}

TEST_CASE("no rule fires without an SF-pair") {
  KineticSystem sys = load_fixture("ab_mass_action.json");
  CertifyResult res = certify_single(sys, asserted_positive());
  CHECK(res.certificates.empty());
  REQUIRE_FALSE(res.reasons.empty());
  CHECK(res.reasons[0].find("no SF-pair") != std::string::npos);
}

TEST_CASE("birch_check requires ACR in every species") {
  KineticSystem ex4 = load_fixture("example4.json");
  CertifyResult res = certify_single(ex4, asserted_positive());
  // X2 carries no certificate, so the sufficient condition fails.
  CHECK_FALSE(birch_check(res.certificates, ex4));

  auto certs = res.certificates;
  RobustnessCertificate extra = certs.front();
  extra.species = "X2";
  certs.push_back(extra);
  CHECK(birch_check(certs, ex4));
  CHECK_FALSE(birch_check({}, ex4));
}

TEST_CASE("SF-pair structure evaluation") {
  SUBCASE("IDHKP {R1,R5} reports the differing E support honestly") {
    KineticSystem sys = load_fixture("idhkp.json");
    SFPairStructure st = sf_pair_structure(sys, pair_of(sys, "R1", "R5", "I"));
    CHECK(st.x_in_union);
    CHECK_FALSE(st.zero_one_stoichiometry);  // 2EIp appears as a complex
    CHECK_FALSE(st.reactants_differ_only_in_x);
    bool e_flagged = false;
    for (const auto& [id, shared] : st.shared_species_support)
      if (id == "E" && !shared) e_flagged = true;
    CHECK(e_flagged);
    CHECK_FALSE(st.warnings.empty());
  }
  SUBCASE("0/1 mass action pair differs only in the named species") {
    std::vector<Species> sp{{"A"}, {"B"}, {"C"}};
    Complex ab, a, c;
    ab.coeffs[0] = 1;
    ab.coeffs[1] = 1;
    a.coeffs[0] = 1;
    c.coeffs[2] = 1;
    Network net = build_network(sp, {ab, a, c, a, c},
                                {{0, 2, "R1"}, {3, 4, "R2"}});
    KineticSystem sys = mass_action_system(net);
    SFPairStructure st = sf_pair_structure(sys, pair_of(sys, "R1", "R2", "B"));
    CHECK(st.zero_one_stoichiometry);
    CHECK(st.reactants_differ_only_in_x);
    CHECK(st.x_in_union);
    CHECK(st.warnings.empty());
  }
  SUBCASE("non-SF-pairs are rejected") {
    KineticSystem sys = load_fixture("example1.json");
    SFPair bogus = pair_of(sys, "R1", "R2", "A2");
    bogus.reaction_b = sys.reaction_index("R3");
    CHECK_THROWS_AS(sf_pair_structure(sys, bogus), ValidationError);
  }
}

TEST_CASE("decomposition-based certificates") {
  SUBCASE("Example 1 linkage classes give ACR and BCR in A2") {
    KineticSystem sys = load_fixture("example1.json");
    CertifyResult res = certify_with_decomposition(
        sys, linkage_class_decomposition(sys), asserted_balanced());
    CHECK(has_cert(res.certificates, "A2", TheoremPath::DecompositionACR));
    CHECK(has_cert(res.certificates, "A2", TheoremPath::DecompositionBCR,
                   RobustnessCertificate::Kind::BCR));
    const auto& acr = get_cert(res.certificates, "A2", TheoremPath::DecompositionACR);
    CHECK(acr.parent_delta == 0);
    CHECK(acr.part_index == 0);
  }
  SUBCASE("higher-deficiency parent still certifies through a clean part") {
    KineticSystem sys = load_fixture("ex1_plus_block.json");
    Decomposition decomp =
        load_decomposition_file(fixture_path("ex1_block_decomposition.json"), sys);
    CertifyResult res = certify_with_decomposition(sys, decomp, asserted_positive());
    REQUIRE(has_cert(res.certificates, "A2", TheoremPath::DecompositionACR));
    const auto& cert = get_cert(res.certificates, "A2", TheoremPath::DecompositionACR);
    CHECK(cert.parent_delta == 2);
    CHECK(cert.notes.find("higher deficiency") != std::string::npos);
    // The deficiency-two block part must not certify anything.
    for (const auto& c : res.certificates) CHECK(c.part_index == 0);
  }
  SUBCASE("a dependent decomposition yields reasons, not certificates") {
    KineticSystem sys = load_fixture("schmitz.json");
    std::vector<int> rest;
    for (std::size_t j = 1; j < sys.net.reactions.size(); ++j)
      rest.push_back(static_cast<int>(j));
    CertifyResult res =
        certify_with_decomposition(sys, {{{0}, rest}}, asserted_positive());
    CHECK(res.certificates.empty());
    REQUIRE_FALSE(res.reasons.empty());
  }
}
