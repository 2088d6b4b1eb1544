#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <algorithm>

using namespace crn;

namespace {

bool has_pair(const std::vector<SFPair>& pairs, const KineticSystem& sys,
              const char* la, const char* lb, const char* species) {
  int a = sys.reaction_index(la), b = sys.reaction_index(lb);
  return std::any_of(pairs.begin(), pairs.end(), [&](const SFPair& p) {
    bool same = (p.reaction_a == a && p.reaction_b == b) ||
                (p.reaction_a == b && p.reaction_b == a);
    return same && p.species_id == species;
  });
}

}  // namespace

TEST_CASE("Example 1 classifies PL-RDK") {
  auto cls = classify_kinetics(load_fixture("example1.json"));
  CHECK(cls.is_rdk());
  CHECK(cls.ndk_nodes.empty());
  CHECK_FALSE(cls.minimally_ndk);
}

TEST_CASE("Schmitz classifies minimally PL-NDK with binary monospecies node M1") {
  KineticSystem sys = load_fixture("schmitz.json");
  auto cls = classify_kinetics(sys);
  CHECK_FALSE(cls.is_rdk());
  CHECK(cls.minimally_ndk);
  REQUIRE(cls.ndk_nodes.size() == 1);
  const auto& node = cls.ndk_nodes[0];
  CHECK(node.binary);
  CHECK(node.minimal);
  CHECK(node.monospecies_reactant);
  // The node is the complex M1; its CF-subsets are {R2} and {R8}.
  const Complex& cx = sys.net.complexes[node.reactant_complex];
  CHECK(format_complex(cx, sys.net.species) == "M1");
  REQUIRE(node.cf_subsets.size() == 2);
  std::vector<std::string> labels;
  for (const auto& subset : node.cf_subsets) {
    REQUIRE(subset.size() == 1);
    labels.push_back(sys.net.reactions[subset[0]].label);
  }
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"R2", "R8"});
}

TEST_CASE("Example 4 classifies PL-NDK with binary node X1") {
  KineticSystem sys = load_fixture("example4.json");
  auto cls = classify_kinetics(sys);
  CHECK_FALSE(cls.is_rdk());
  REQUIRE(cls.ndk_nodes.size() == 1);
  CHECK(cls.ndk_nodes[0].binary);
  CHECK(cls.ndk_nodes[0].monospecies_reactant);
  CHECK(format_complex(sys.net.complexes[cls.ndk_nodes[0].reactant_complex],
                       sys.net.species) == "X1");
}

TEST_CASE("mass action kinetics is always PL-RDK") {
  for (const char* file : {"example1.json", "idhkp.json", "schmitz.json"}) {
    CAPTURE(file);
    KineticSystem ma = mass_action_system(load_fixture(file).net);
    CHECK(classify_kinetics(ma).is_rdk());
  }
}

TEST_CASE("SF-pair goldens from the paper examples") {
  KineticSystem ex1 = load_fixture("example1.json");
  CHECK(has_pair(find_sf_pairs(ex1), ex1, "R1", "R2", "A2"));

  KineticSystem idhkp = load_fixture("idhkp.json");
  CHECK(has_pair(find_sf_pairs(idhkp), idhkp, "R1", "R5", "I"));

  KineticSystem schmitz = load_fixture("schmitz.json");
  CHECK(has_pair(find_sf_pairs(schmitz), schmitz, "R2", "R8", "M1"));

  KineticSystem ex4 = load_fixture("example4.json");
  auto pairs = find_sf_pairs(ex4);
  CHECK(has_pair(pairs, ex4, "R1", "R4", "X1"));
  CHECK(has_pair(pairs, ex4, "R2", "R4", "X3"));
}

TEST_CASE("SF-pair filters") {
  KineticSystem ex1 = load_fixture("example1.json");
  // Example 1 is weakly reversible, so no reactant is nonterminal.
  CHECK(find_sf_pairs(ex1, SFPairFilter::NonterminalOnly).empty());
  CHECK(has_pair(find_sf_pairs(ex1, SFPairFilter::SameLinkageClass), ex1, "R1",
                 "R2", "A2"));
}

TEST_CASE("identical rows are not an SF-pair") {
  // IDHKP rows R2 and R3 are identical; they must not appear as a pair.
  KineticSystem idhkp = load_fixture("idhkp.json");
  for (const auto& p : find_sf_pairs(idhkp)) {
    CHECK(idhkp.F[p.reaction_a] != idhkp.F[p.reaction_b]);
  }
}

TEST_CASE("PL-RDK iff no SF-pair shares a reactant complex") {
  for (const char* file :
       {"example1.json", "idhkp.json", "schmitz.json", "example4.json"}) {
    CAPTURE(file);
    KineticSystem sys = load_fixture(file);
    bool rdk = classify_kinetics(sys).is_rdk();
    bool shares = false;
    for (const auto& p : find_sf_pairs(sys))
      if (sys.net.reactions[p.reaction_a].reactant ==
          sys.net.reactions[p.reaction_b].reactant)
        shares = true;
    // An SF-pair on one reactant is exactly an NDK witness whose two rows
    // differ in a single coordinate.
    if (shares) CHECK_FALSE(rdk);
    if (rdk) CHECK_FALSE(shares);
  }
}

TEST_CASE("mass action SF-pairs differ only in the named species (0/1 fixtures)") {
  KineticSystem ma = mass_action_system(load_fixture("idhkp.json").net);
  for (const auto& p : find_sf_pairs(ma)) {
    const Complex& y = ma.net.complexes[ma.net.reactions[p.reaction_a].reactant];
    const Complex& yp = ma.net.complexes[ma.net.reactions[p.reaction_b].reactant];
    bool zero_one = true;
    for (const auto& cx : {y, yp})
      for (const auto& [sp, c] : cx.coeffs)
        if (c != 0 && c != 1) zero_one = false;
    if (!zero_one) continue;
    for (std::size_t sp = 0; sp < ma.net.species.size(); ++sp)
      if (static_cast<int>(sp) != p.species)
        CHECK(y.coeff(static_cast<int>(sp)) == yp.coeff(static_cast<int>(sp)));
  }
}

TEST_CASE("T-tilde columns") {
  KineticSystem ex1 = load_fixture("example1.json");
  RationalMatrix T = t_tilde(ex1);
  int cx = ex1.net.reactions[ex1.reaction_index("R1")].reactant;  // A1 + 2A2
  CHECK(T[0][cx] == Rational(-68));
  CHECK(T[1][cx] == Rational(58, 100));
  CHECK(T[2][cx] == Rational(0));

  SUBCASE("pure product complexes get a zero column") {
    std::vector<Species> sp{{"A"}, {"B"}};
    Complex a, b;
    a.coeffs[0] = 1;
    b.coeffs[1] = 1;
    Network net = build_network(sp, {a, b}, {{0, 1, "R1"}});
    KineticSystem sys = make_kinetic_system(net, {{Rational(1), Rational(0)}});
    RationalMatrix T2 = t_tilde(sys);
    CHECK(T2[0][1] == 0);
    CHECK(T2[1][1] == 0);
  }

  SUBCASE("NDK input is rejected") {
    CHECK_THROWS_AS(t_tilde(load_fixture("schmitz.json")), ValidationError);
  }
}
