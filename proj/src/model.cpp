#include "crn/model.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace crn {

std::vector<int> Complex::support() const {
  std::vector<int> out;
  for (const auto& [sp, c] : coeffs)
    if (c != 0) out.push_back(sp);
  return out;
}

Complex complex_sum(const Complex& a, const Complex& b) {
  Complex out = a;
  for (const auto& [sp, c] : b.coeffs) {
    Rational v = out.coeff(sp) + c;
    if (v == 0)
      out.coeffs.erase(sp);
    else
      out.coeffs[sp] = v;
  }
  return out;
}

Complex complex_scale(const Complex& a, const Rational& factor) {
  Complex out;
  if (factor == 0) return out;
  for (const auto& [sp, c] : a.coeffs) out.coeffs[sp] = c * factor;
  return out;
}

std::string format_complex(const Complex& c, const std::vector<Species>& species) {
  if (c.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sp, v] : c.coeffs) {
    if (!first) os << " + ";
    first = false;
    if (v != 1) os << format_rational(v) << " ";
    os << species.at(sp).id;
  }
  return os.str();
}

int Network::species_index(const std::string& id) const {
  for (std::size_t i = 0; i < species.size(); ++i)
    if (species[i].id == id) return static_cast<int>(i);
  return -1;
}

Network build_network(std::vector<Species> species,
                      std::vector<Complex> complexes,
                      std::vector<Reaction> reactions) {
  Network net;
  std::set<std::string> seen_ids;
  for (const auto& sp : species) {
    if (sp.id.empty()) throw ValidationError("empty species id");
    if (!seen_ids.insert(sp.id).second)
      throw ValidationError("duplicate species id: " + sp.id);
  }
  net.species = std::move(species);

  // Deduplicate complexes by coefficient map, keeping first-occurrence order.
  std::vector<int> remap(complexes.size(), -1);
  for (std::size_t i = 0; i < complexes.size(); ++i) {
    for (const auto& [sp, c] : complexes[i].coeffs) {
      if (sp < 0 || sp >= static_cast<int>(net.species.size()))
        throw ValidationError("complex references unknown species index");
      if (c < 0)
        throw ValidationError("negative stoichiometric coefficient in complex");
      if (c == 0)
        throw ValidationError("explicit zero coefficient in complex (omit instead)");
    }
    auto it = std::find(net.complexes.begin(), net.complexes.end(), complexes[i]);
    if (it == net.complexes.end()) {
      remap[i] = static_cast<int>(net.complexes.size());
      net.complexes.push_back(complexes[i]);
    } else {
      remap[i] = static_cast<int>(it - net.complexes.begin());
    }
  }

  std::set<std::string> labels;
  std::set<std::pair<int, int>> arcs;
  for (auto rx : reactions) {
    if (rx.reactant < 0 || rx.reactant >= static_cast<int>(remap.size()) ||
        rx.product < 0 || rx.product >= static_cast<int>(remap.size()))
      throw ValidationError("reaction " + rx.label + " references invalid complex index");
    rx.reactant = remap[rx.reactant];
    rx.product = remap[rx.product];
    if (rx.reactant == rx.product)
      throw ValidationError("loop reaction forbidden: " + rx.label);
    if (!labels.insert(rx.label).second)
      throw ValidationError("duplicate reaction label: " + rx.label);
    if (!arcs.insert({rx.reactant, rx.product}).second)
      throw ValidationError("duplicate reaction arc: " + rx.label);
    net.reactions.push_back(rx);
  }

  std::vector<bool> complex_used(net.complexes.size(), false);
  for (const auto& rx : net.reactions) {
    complex_used[rx.reactant] = true;
    complex_used[rx.product] = true;
  }
  for (std::size_t i = 0; i < complex_used.size(); ++i)
    if (!complex_used[i])
      throw ValidationError("orphan complex (appears in no reaction): " +
                            format_complex(net.complexes[i], net.species));

  std::vector<bool> species_used(net.species.size(), false);
  for (const auto& cx : net.complexes)
    for (const auto& [sp, c] : cx.coeffs)
      if (c != 0) species_used[sp] = true;
  for (std::size_t i = 0; i < species_used.size(); ++i)
    if (!species_used[i])
      throw ValidationError("orphan species (appears in no complex): " +
                            net.species[i].id);

  return net;
}

namespace {

void sort_partition(std::vector<std::vector<int>>& parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

LinkagePartitions linkage_partitions(const Network& net) {
  const int n = static_cast<int>(net.complexes.size());
  std::vector<std::vector<int>> out_adj(n), undirected(n);
  for (const auto& rx : net.reactions) {
    out_adj[rx.reactant].push_back(rx.product);
    undirected[rx.reactant].push_back(rx.product);
    undirected[rx.product].push_back(rx.reactant);
  }

  LinkagePartitions p;
  p.linkage_of_complex.assign(n, -1);

  // Weakly connected components.
  for (int start = 0; start < n; ++start) {
    if (p.linkage_of_complex[start] != -1) continue;
    int cls = static_cast<int>(p.linkage_classes.size());
    std::vector<int> stack{start}, members;
    p.linkage_of_complex[start] = cls;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : undirected[v])
        if (p.linkage_of_complex[w] == -1) {
          p.linkage_of_complex[w] = cls;
          stack.push_back(w);
        }
    }
    p.linkage_classes.push_back(std::move(members));
  }
  sort_partition(p.linkage_classes);
  for (std::size_t c = 0; c < p.linkage_classes.size(); ++c)
    for (int v : p.linkage_classes[c]) p.linkage_of_complex[v] = static_cast<int>(c);

  // Tarjan SCC.
  p.scc_of_complex.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0), stack;
  int next_index = 0;
  std::function<void(int)> strongconnect = [&](int v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w : out_adj[v]) {
      if (index[w] == -1) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> members;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        p.scc_of_complex[w] = static_cast<int>(p.strong_linkage_classes.size());
        members.push_back(w);
      } while (w != v);
      p.strong_linkage_classes.push_back(std::move(members));
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] == -1) strongconnect(v);
  sort_partition(p.strong_linkage_classes);
  for (std::size_t c = 0; c < p.strong_linkage_classes.size(); ++c)
    for (int v : p.strong_linkage_classes[c]) p.scc_of_complex[v] = static_cast<int>(c);

  // Terminal SCCs: no arc leaves the SCC.
  std::vector<bool> has_exit(p.strong_linkage_classes.size(), false);
  for (const auto& rx : net.reactions)
    if (p.scc_of_complex[rx.reactant] != p.scc_of_complex[rx.product])
      has_exit[p.scc_of_complex[rx.reactant]] = true;
  p.complex_is_terminal.assign(n, false);
  for (std::size_t c = 0; c < p.strong_linkage_classes.size(); ++c) {
    if (has_exit[c]) continue;
    p.terminal_strong_linkage_classes.push_back(p.strong_linkage_classes[c]);
    for (int v : p.strong_linkage_classes[c]) p.complex_is_terminal[v] = true;
  }
  sort_partition(p.terminal_strong_linkage_classes);
  return p;
}

StructuralSummary structural_summary(const Network& net) {
  StructuralSummary sum;
  const auto parts = linkage_partitions(net);
  sum.n = static_cast<int>(net.complexes.size());
  sum.l = static_cast<int>(parts.linkage_classes.size());
  sum.sl = static_cast<int>(parts.strong_linkage_classes.size());
  sum.t = static_cast<int>(parts.terminal_strong_linkage_classes.size());

  RationalMatrix vectors;
  for (std::size_t j = 0; j < net.reactions.size(); ++j)
    vectors.push_back(reaction_vector(net, static_cast<int>(j)));
  sum.s = rational_rank(vectors);
  sum.delta = sum.n - sum.l - sum.s;
  sum.weakly_reversible = (sum.sl == sum.l);
  for (int v = 0; v < sum.n; ++v) {
    if (parts.complex_is_terminal[v])
      sum.terminal_complexes.push_back(v);
    else
      sum.nonterminal_complexes.push_back(v);
  }
  return sum;
}

LinearMaps linear_maps(const Network& net) {
  const std::size_t m = net.species.size();
  const std::size_t n = net.complexes.size();
  const std::size_t r = net.reactions.size();
  LinearMaps maps;
  maps.Y.assign(m, RationalVector(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [sp, c] : net.complexes[j].coeffs) maps.Y[sp][j] = c;
  maps.Ia.assign(n, RationalVector(r, Rational(0)));
  for (std::size_t j = 0; j < r; ++j) {
    maps.Ia[net.reactions[j].product][j] += 1;
    maps.Ia[net.reactions[j].reactant][j] -= 1;
  }
  maps.N.assign(m, RationalVector(r, Rational(0)));
  for (std::size_t j = 0; j < r; ++j) {
    RationalVector v = reaction_vector(net, static_cast<int>(j));
    for (std::size_t i = 0; i < m; ++i) maps.N[i][j] = v[i];
  }
  return maps;
}

RationalVector reaction_vector(const Network& net, int reaction) {
  const auto& rx = net.reactions.at(reaction);
  RationalVector v(net.species.size(), Rational(0));
  for (const auto& [sp, c] : net.complexes[rx.product].coeffs) v[sp] += c;
  for (const auto& [sp, c] : net.complexes[rx.reactant].coeffs) v[sp] -= c;
  return v;
}

}  // namespace crn
