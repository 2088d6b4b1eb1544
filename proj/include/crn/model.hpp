#pragma once

#include "crn/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace crn {

/// Structured validation failure naming the offending element.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct Species {
  std::string id;
};

/// A complex is a non-negative rational stoichiometric vector, stored
/// sparsely as species-index -> coefficient (zero entries omitted).
struct Complex {
  std::map<int, Rational> coeffs;

  bool operator==(const Complex& other) const { return coeffs == other.coeffs; }
  bool operator<(const Complex& other) const { return coeffs < other.coeffs; }

  Rational coeff(int species) const {
    auto it = coeffs.find(species);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  bool is_zero() const { return coeffs.empty(); }
  std::vector<int> support() const;
};

Complex complex_sum(const Complex& a, const Complex& b);
Complex complex_scale(const Complex& a, const Rational& factor);
std::string format_complex(const Complex& c, const std::vector<Species>& species);

struct Reaction {
  int reactant = -1;
  int product = -1;
  std::string label;
};

struct Network {
  std::vector<Species> species;
  std::vector<Complex> complexes;
  std::vector<Reaction> reactions;

  int species_index(const std::string& id) const;
};

/// Validates and canonicalizes: complexes deduplicated by coefficient map,
/// indices assigned in input order. Throws ValidationError.
Network build_network(std::vector<Species> species,
                      std::vector<Complex> complexes,
                      std::vector<Reaction> reactions);

struct LinkagePartitions {
  std::vector<std::vector<int>> linkage_classes;
  std::vector<std::vector<int>> strong_linkage_classes;
  std::vector<std::vector<int>> terminal_strong_linkage_classes;
  std::vector<int> linkage_of_complex;
  std::vector<int> scc_of_complex;
  std::vector<bool> complex_is_terminal;
};

/// Weakly connected components, SCCs, and terminal SCCs of the reaction
/// digraph. Partitions are ordered by smallest member index.
LinkagePartitions linkage_partitions(const Network& net);

struct StructuralSummary {
  int n = 0;       // complexes
  int l = 0;       // linkage classes
  int sl = 0;      // strong linkage classes
  int t = 0;       // terminal strong linkage classes
  int s = 0;       // rank of stoichiometric subspace
  int delta = 0;   // deficiency n - l - s
  bool weakly_reversible = false;
  std::vector<int> terminal_complexes;
  std::vector<int> nonterminal_complexes;
};

StructuralSummary structural_summary(const Network& net);

struct LinearMaps {
  RationalMatrix Y;   // m x n, column per complex
  RationalMatrix Ia;  // n x r, column per reaction
  RationalMatrix N;   // m x r, N = Y * Ia
};

LinearMaps linear_maps(const Network& net);

/// y' - y for reaction j, as a dense species vector.
RationalVector reaction_vector(const Network& net, int reaction);

}  // namespace crn
