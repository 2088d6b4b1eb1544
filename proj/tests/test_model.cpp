#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace crn;

namespace {

// Independent reachability oracle: Floyd-Warshall closure over the complex
// digraph, used to recompute components without touching linkage_partitions.
struct ReachOracle {
  std::vector<std::vector<bool>> directed, undirected;

  explicit ReachOracle(const Network& net) {
    const int n = static_cast<int>(net.complexes.size());
    directed.assign(n, std::vector<bool>(n, false));
    undirected = directed;
    for (int v = 0; v < n; ++v) directed[v][v] = undirected[v][v] = true;
    for (const auto& rx : net.reactions) {
      directed[rx.reactant][rx.product] = true;
      undirected[rx.reactant][rx.product] = true;
      undirected[rx.product][rx.reactant] = true;
    }
    for (auto* m : {&directed, &undirected})
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if ((*m)[i][k] && (*m)[k][j]) (*m)[i][j] = true;
  }

  int weak_components() const {
    int count = 0;
    std::vector<bool> seen(undirected.size(), false);
    for (std::size_t v = 0; v < undirected.size(); ++v) {
      if (seen[v]) continue;
      ++count;
      for (std::size_t w = 0; w < undirected.size(); ++w)
        if (undirected[v][w]) seen[w] = true;
    }
    return count;
  }

  bool mutually_reachable(int a, int b) const {
    return directed[a][b] && directed[b][a];
  }
};

Network example1_network() {
  return load_fixture("example1.json").net;
}

}  // namespace

TEST_CASE("decimal parsing is exact") {
  CHECK(*parse_decimal("0.58") == Rational(58, 100));
  CHECK(*parse_decimal("-68") == Rational(-68));
  CHECK(*parse_decimal("9.4") == Rational(94, 10));
  CHECK(*parse_decimal("1/3") == Rational(1, 3));
  CHECK(*parse_decimal("2e-3") == Rational(2, 1000));
  CHECK(!parse_decimal("abc"));
  CHECK(!parse_decimal(""));
  CHECK(!parse_decimal("1.2.3"));
  CHECK(format_rational(Rational(58, 100)) == "0.58");
  CHECK(format_rational(Rational(-68)) == "-68");
  CHECK(format_rational(Rational(1, 3)) == "1/3");
}

TEST_CASE("build_network canonicalizes Example 1") {
  Network net = example1_network();
  CHECK(net.complexes.size() == 4);
  CHECK(net.reactions.size() == 4);
  CHECK(net.species.size() == 3);
}

TEST_CASE("build_network minimal and error cases") {
  std::vector<Species> sp{{"A"}, {"B"}};
  Complex a, b;
  a.coeffs[0] = 1;
  b.coeffs[1] = 1;

  SUBCASE("single reaction A->B") {
    Network net = build_network(sp, {a, b}, {{0, 1, "R1"}});
    CHECK(net.complexes.size() == 2);
    CHECK(net.reactions.size() == 1);
  }
  SUBCASE("loop A->A rejected") {
    CHECK_THROWS_AS(build_network(sp, {a, a}, {{0, 1, "R1"}}), ValidationError);
  }
  SUBCASE("duplicate species id") {
    CHECK_THROWS_AS(build_network({{"A"}, {"A"}}, {a, b}, {{0, 1, "R1"}}),
                    ValidationError);
  }
  SUBCASE("orphan species") {
    CHECK_THROWS_AS(build_network({{"A"}, {"B"}, {"C"}}, {a, b}, {{0, 1, "R1"}}),
                    ValidationError);
  }
  SUBCASE("orphan complex") {
    Complex c;
    c.coeffs[0] = 2;
    CHECK_THROWS_AS(build_network(sp, {a, b, c}, {{0, 1, "R1"}}), ValidationError);
  }
  SUBCASE("duplicate arc") {
    CHECK_THROWS_AS(build_network(sp, {a, b, a, b}, {{0, 1, "R1"}, {2, 3, "R2"}}),
                    ValidationError);
  }
}

TEST_CASE("linkage partitions of Example 1 match the reachability oracle") {
  Network net = example1_network();
  auto parts = linkage_partitions(net);
  ReachOracle oracle(net);

  CHECK(static_cast<int>(parts.linkage_classes.size()) == oracle.weak_components());
  CHECK(parts.linkage_classes.size() == 2);
  // Both linkage classes are 2-cycles, so each is a terminal strong class.
  CHECK(parts.strong_linkage_classes.size() == 2);
  CHECK(parts.terminal_strong_linkage_classes.size() == 2);
  for (const auto& slc : parts.strong_linkage_classes)
    for (int a : slc)
      for (int b : slc) CHECK(oracle.mutually_reachable(a, b));
}

TEST_CASE("IDHKP is a single strongly connected linkage class") {
  Network net = load_fixture("idhkp.json").net;
  auto parts = linkage_partitions(net);
  CHECK(parts.linkage_classes.size() == 1);
  CHECK(parts.linkage_classes[0].size() == 4);
  CHECK(parts.strong_linkage_classes.size() == 1);
}

TEST_CASE("A->B partitions") {
  std::vector<Species> sp{{"A"}, {"B"}};
  Complex a, b;
  a.coeffs[0] = 1;
  b.coeffs[1] = 1;
  Network net = build_network(sp, {a, b}, {{0, 1, "R1"}});
  auto parts = linkage_partitions(net);
  CHECK(parts.linkage_classes.size() == 1);
  CHECK(parts.strong_linkage_classes.size() == 2);
  REQUIRE(parts.terminal_strong_linkage_classes.size() == 1);
  CHECK(parts.terminal_strong_linkage_classes[0] == std::vector<int>{1});
}

TEST_CASE("structural summaries of the paper fixtures") {
  auto check = [](const char* file, int n, int l, int s, int delta, bool wr) {
    StructuralSummary sum = structural_summary(load_fixture(file).net);
    CAPTURE(file);
    CHECK(sum.n == n);
    CHECK(sum.l == l);
    CHECK(sum.s == s);
    CHECK(sum.delta == delta);
    CHECK(sum.weakly_reversible == wr);
  };
  check("example1.json", 4, 2, 2, 0, true);
  check("idhkp.json", 4, 1, 3, 0, true);
  check("schmitz.json", 6, 1, 5, 0, true);
  check("example4.json", 4, 1, 3, 0, true);
}

TEST_CASE("linear map identities") {
  for (const char* file :
       {"example1.json", "idhkp.json", "schmitz.json", "example4.json",
        "ex1_plus_block.json"}) {
    CAPTURE(file);
    Network net = load_fixture(file).net;
    LinearMaps maps = linear_maps(net);
    StructuralSummary sum = structural_summary(net);

    // N = Y * Ia entrywise.
    for (std::size_t i = 0; i < maps.N.size(); ++i)
      for (std::size_t j = 0; j < maps.N[i].size(); ++j) {
        Rational acc = 0;
        for (std::size_t t = 0; t < maps.Ia.size(); ++t)
          acc += maps.Y[i][t] * maps.Ia[t][j];
        CHECK(acc == maps.N[i][j]);
      }

    // Each incidence column has exactly one +1 and one -1.
    for (std::size_t j = 0; j < net.reactions.size(); ++j) {
      int plus = 0, minus = 0, other = 0;
      for (std::size_t i = 0; i < maps.Ia.size(); ++i) {
        if (maps.Ia[i][j] == 1) ++plus;
        else if (maps.Ia[i][j] == -1) ++minus;
        else if (maps.Ia[i][j] != 0) ++other;
      }
      CHECK(plus == 1);
      CHECK(minus == 1);
      CHECK(other == 0);
    }

    CHECK(rational_rank(maps.Ia) == sum.n - sum.l);
    CHECK(sum.delta >= 0);
    CHECK(sum.delta == sum.n - sum.l - sum.s);
    CHECK(sum.t >= sum.l);
    if (sum.weakly_reversible)
      CHECK(sum.nonterminal_complexes.empty());
  }
}

TEST_CASE("summary invariant under input permutation") {
  KineticSystem sys = load_fixture("schmitz.json");
  StructuralSummary base = structural_summary(sys.net);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> rx_order(sys.net.reactions.size());
    std::iota(rx_order.begin(), rx_order.end(), 0);
    std::shuffle(rx_order.begin(), rx_order.end(), rng);
    std::vector<int> sp_order(sys.net.species.size());
    std::iota(sp_order.begin(), sp_order.end(), 0);
    std::shuffle(sp_order.begin(), sp_order.end(), rng);

    std::vector<int> sp_back(sp_order.size());
    for (std::size_t i = 0; i < sp_order.size(); ++i) sp_back[sp_order[i]] = static_cast<int>(i);

    std::vector<Species> species;
    for (int i : sp_order) species.push_back(sys.net.species[i]);
    std::vector<Complex> complexes;
    std::vector<Reaction> reactions;
    for (std::size_t jj = 0; jj < rx_order.size(); ++jj) {
      const auto& rx = sys.net.reactions[rx_order[jj]];
      auto permute = [&](const Complex& c) {
        Complex out;
        for (const auto& [sp, v] : c.coeffs) out.coeffs[sp_back[sp]] = v;
        return out;
      };
      complexes.push_back(permute(sys.net.complexes[rx.reactant]));
      complexes.push_back(permute(sys.net.complexes[rx.product]));
      reactions.push_back({static_cast<int>(2 * jj), static_cast<int>(2 * jj + 1),
                           rx.label});
    }
    Network net = build_network(species, complexes, reactions);
    StructuralSummary sum = structural_summary(net);
    CHECK(sum.n == base.n);
    CHECK(sum.l == base.l);
    CHECK(sum.sl == base.sl);
    CHECK(sum.t == base.t);
    CHECK(sum.s == base.s);
    CHECK(sum.delta == base.delta);
    CHECK(sum.weakly_reversible == base.weakly_reversible);
  }
}

TEST_CASE("zero complex is accepted") {
  std::vector<Species> sp{{"A"}};
  Complex zero, a;
  a.coeffs[0] = 1;
  Network net = build_network(sp, {zero, a}, {{0, 1, "Rin"}, {1, 0, "Rout"}});
  StructuralSummary sum = structural_summary(net);
  CHECK(sum.n == 2);
  CHECK(sum.s == 1);
  CHECK(sum.delta == 0);
}
