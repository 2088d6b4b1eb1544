#include "crn/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace crn {

namespace {

using nlohmann::json;

Rational coeff_from_json(const json& v, const std::string& context) {
  std::optional<Rational> parsed;
  if (v.is_number_integer()) {
    parsed = Rational(v.get<long long>());
  } else if (v.is_number_float()) {
    // dump() emits the shortest round-trip decimal; reject anything that
    // still fails exact decimal reading.
    parsed = parse_decimal(v.dump());
  } else if (v.is_string()) {
    parsed = parse_decimal(v.get<std::string>());
  }
  if (!parsed)
    throw ParseError(context + ": cannot read '" + v.dump() +
                     "' as an exact decimal");
  return *parsed;
}

Complex complex_from_json(const json& obj,
                          const std::vector<std::string>& species_ids,
                          const std::string& context) {
  if (!obj.is_object()) throw ParseError(context + ": expected an object");
  Complex c;
  for (const auto& [id, v] : obj.items()) {
    auto it = std::find(species_ids.begin(), species_ids.end(), id);
    if (it == species_ids.end())
      throw ParseError(context + ": unknown species '" + id + "'");
    Rational coeff = coeff_from_json(v, context + "." + id);
    if (coeff < 0) throw ParseError(context + "." + id + ": negative coefficient");
    if (coeff != 0)
      c.coeffs[static_cast<int>(it - species_ids.begin())] = coeff;
  }
  return c;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

KineticSystem parse_network_file(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("network file: expected a JSON object");
  if (doc.value("schema", 1) != 1)
    throw ParseError("network file: unsupported schema version");
  if (!doc.contains("species") || !doc["species"].is_array())
    throw ParseError("network file: missing species array");
  if (!doc.contains("reactions") || !doc["reactions"].is_array())
    throw ParseError("network file: missing reactions array");

  std::vector<std::string> species_ids;
  std::vector<Species> species;
  for (const auto& s : doc["species"]) {
    if (!s.is_string()) throw ParseError("species entries must be strings");
    species_ids.push_back(s.get<std::string>());
    species.push_back({s.get<std::string>()});
  }

  std::vector<Complex> complexes;
  std::vector<Reaction> reactions;
  RationalMatrix F;
  std::vector<Rate> rates;
  for (const auto& rx : doc["reactions"]) {
    std::string label = rx.value("label", "");
    if (label.empty()) throw ParseError("reaction without label");
    if (!rx.contains("reactant") || !rx.contains("product"))
      throw ParseError("reaction " + label + ": reactant and product required");
    Complex reactant = complex_from_json(rx["reactant"], species_ids,
                                         "reaction " + label + " reactant");
    Complex product = complex_from_json(rx["product"], species_ids,
                                        "reaction " + label + " product");
    int ri = static_cast<int>(complexes.size());
    complexes.push_back(std::move(reactant));
    int pi = static_cast<int>(complexes.size());
    complexes.push_back(std::move(product));
    reactions.push_back({ri, pi, label});

    RationalVector row(species.size(), Rational(0));
    if (rx.contains("kinetic_order")) {
      if (!rx["kinetic_order"].is_object())
        throw ParseError("reaction " + label + ": kinetic_order must be an object");
      for (const auto& [id, v] : rx["kinetic_order"].items()) {
        auto it = std::find(species_ids.begin(), species_ids.end(), id);
        if (it == species_ids.end())
          throw ParseError("reaction " + label + " kinetic_order: unknown species '" +
                           id + "'");
        row[it - species_ids.begin()] =
            coeff_from_json(v, "reaction " + label + " kinetic_order." + id);
      }
    }
    F.push_back(std::move(row));

    if (rx.contains("rate")) {
      const json& rv = rx["rate"];
      if (rv.is_string()) {
        auto parsed = parse_decimal(rv.get<std::string>());
        if (parsed) {
          if (*parsed <= 0)
            throw ParseError("reaction " + label + ": rate must be positive");
          rates.push_back(Rate::num(*parsed));
        } else {
          rates.push_back(Rate::sym(rv.get<std::string>()));
        }
      } else {
        Rational value = coeff_from_json(rv, "reaction " + label + " rate");
        if (value <= 0)
          throw ParseError("reaction " + label + ": rate must be positive");
        rates.push_back(Rate::num(value));
      }
    } else {
      rates.push_back(Rate::none());
    }
  }

  try {
    Network net = build_network(std::move(species), std::move(complexes),
                                std::move(reactions));
    return make_kinetic_system(std::move(net), std::move(F), std::move(rates));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("network file: ") + e.what());
  }
}

KineticSystem load_network_file(const std::string& path) {
  return parse_network_file(load_json(path));
}

nlohmann::json serialize_network_file(const KineticSystem& sys) {
  json doc;
  doc["schema"] = 1;
  doc["species"] = json::array();
  for (const auto& sp : sys.net.species) doc["species"].push_back(sp.id);
  doc["reactions"] = json::array();
  for (std::size_t j = 0; j < sys.net.reactions.size(); ++j) {
    const auto& rx = sys.net.reactions[j];
    json entry;
    entry["label"] = rx.label;
    auto complex_json = [&](const Complex& c) {
      json obj = json::object();
      for (const auto& [sp, v] : c.coeffs)
        obj[sys.net.species[sp].id] = format_rational(v);
      return obj;
    };
    entry["reactant"] = complex_json(sys.net.complexes[rx.reactant]);
    entry["product"] = complex_json(sys.net.complexes[rx.product]);
    json orders = json::object();
    for (std::size_t sp = 0; sp < sys.net.species.size(); ++sp)
      if (sys.F[j][sp] != 0)
        orders[sys.net.species[sp].id] = format_rational(sys.F[j][sp]);
    entry["kinetic_order"] = orders;
    switch (sys.rates[j].kind) {
      case Rate::Kind::Number:
        entry["rate"] = format_rational(sys.rates[j].value);
        break;
      case Rate::Kind::Symbol:
        entry["rate"] = sys.rates[j].symbol;
        break;
      case Rate::Kind::None:
        break;
    }
    doc["reactions"].push_back(std::move(entry));
  }
  return doc;
}

void save_network_file(const KineticSystem& sys, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << serialize_network_file(sys).dump(2) << "\n";
}

Decomposition parse_decomposition_file(const nlohmann::json& doc,
                                       const KineticSystem& sys) {
  const json* parts = nullptr;
  if (doc.is_array())
    parts = &doc;
  else if (doc.is_object() && doc.contains("parts"))
    parts = &doc.at("parts");
  if (!parts || !parts->is_array())
    throw ParseError("decomposition file: expected a list of label lists");
  Decomposition decomp;
  for (const auto& part : *parts) {
    if (!part.is_array())
      throw ParseError("decomposition file: each part must be a label list");
    std::vector<int> indices;
    for (const auto& label : part) {
      if (!label.is_string())
        throw ParseError("decomposition file: labels must be strings");
      int j = sys.reaction_index(label.get<std::string>());
      if (j < 0)
        throw ParseError("decomposition file: no reaction labeled " +
                         label.get<std::string>());
      indices.push_back(j);
    }
    decomp.parts.push_back(std::move(indices));
  }
  return decomp;
}

Decomposition load_decomposition_file(const std::string& path,
                                      const KineticSystem& sys) {
  return parse_decomposition_file(load_json(path), sys);
}

Eigen::VectorXd load_rate_file(const std::string& path, const KineticSystem& sys) {
  json doc = load_json(path);
  if (!doc.is_object() || !doc.contains("rates") || !doc["rates"].is_object())
    throw ParseError(path + ": expected {\"rates\": {label: value}}");
  Eigen::VectorXd k(sys.net.reactions.size());
  for (std::size_t j = 0; j < sys.net.reactions.size(); ++j) {
    const std::string& label = sys.net.reactions[j].label;
    if (!doc["rates"].contains(label))
      throw ParseError(path + ": missing rate for reaction " + label);
    double value = doc["rates"][label].get<double>();
    if (!(value > 0)) throw ParseError(path + ": rate for " + label + " must be positive");
    k(static_cast<Eigen::Index>(j)) = value;
  }
  return k;
}

nlohmann::json summary_to_json(const StructuralSummary& sum, const Network& net) {
  json j;
  j["n_complexes"] = sum.n;
  j["linkage_classes"] = sum.l;
  j["strong_linkage_classes"] = sum.sl;
  j["terminal_strong_linkage_classes"] = sum.t;
  j["rank"] = sum.s;
  j["deficiency"] = sum.delta;
  j["weakly_reversible"] = sum.weakly_reversible;
  auto names = [&](const std::vector<int>& ids) {
    json arr = json::array();
    for (int cx : ids) arr.push_back(format_complex(net.complexes[cx], net.species));
    return arr;
  };
  j["terminal_complexes"] = names(sum.terminal_complexes);
  j["nonterminal_complexes"] = names(sum.nonterminal_complexes);
  return j;
}

nlohmann::json classification_to_json(const KineticsClassification& cls,
                                      const KineticSystem& sys) {
  json j;
  j["kind"] = cls.is_rdk() ? "PL-RDK" : "PL-NDK";
  j["minimally_ndk"] = cls.minimally_ndk;
  j["ndk_nodes"] = json::array();
  for (const auto& node : cls.ndk_nodes) {
    json nj;
    nj["reactant_complex"] =
        format_complex(sys.net.complexes[node.reactant_complex], sys.net.species);
    nj["cf_subsets"] = json::array();
    for (const auto& subset : node.cf_subsets) {
      json labels = json::array();
      for (int rx : subset) labels.push_back(sys.net.reactions[rx].label);
      nj["cf_subsets"].push_back(std::move(labels));
    }
    nj["minimal"] = node.minimal;
    nj["binary"] = node.binary;
    nj["monospecies_reactant"] = node.monospecies_reactant;
    j["ndk_nodes"].push_back(std::move(nj));
  }
  return j;
}

nlohmann::json sf_pairs_to_json(const std::vector<SFPair>& pairs,
                                const KineticSystem& sys) {
  json arr = json::array();
  for (const auto& p : pairs) {
    json j;
    j["reactions"] = {sys.net.reactions[p.reaction_a].label,
                      sys.net.reactions[p.reaction_b].label};
    j["species"] = p.species_id;
    j["both_nonterminal_reactants"] = p.both_nonterminal_reactants;
    j["same_linkage_class"] = p.same_linkage_class;
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::json transform_to_json(const TransformRecord& record) {
  json j;
  j["moves"] = json::array();
  for (const auto& move : record.moves) {
    json mj;
    mj["reaction"] = move.reaction_label;
    mj["multiplier"] = move.multiplier;
    mj["new_reactant"] = format_complex(move.new_reactant, record.result.net.species);
    mj["new_product"] = format_complex(move.new_product, record.result.net.species);
    j["moves"].push_back(std::move(mj));
  }
  j["result_summary"] =
      summary_to_json(structural_summary(record.result.net), record.result.net);
  return j;
}

nlohmann::json decomposition_report_to_json(const DecompositionReport& report) {
  json j;
  j["independent"] = report.independent;
  j["incidence_independent"] = report.incidence_independent;
  j["bi_independent"] = report.bi_independent;
  j["c_decomposition"] = report.c_decomposition;
  j["deficiency_relation"] = report.deficiency_relation;
  j["whole_deficiency"] = report.whole.delta;
  j["part_deficiency_sum"] = report.delta_sum;
  j["parts"] = json::array();
  for (const auto& ps : report.parts) {
    json pj;
    pj["n"] = ps.n;
    pj["l"] = ps.l;
    pj["s"] = ps.s;
    pj["deficiency"] = ps.delta;
    pj["weakly_reversible"] = ps.weakly_reversible;
    j["parts"].push_back(std::move(pj));
  }
  return j;
}

namespace {

json ledger_to_json(const AssumptionLedger& ledger) {
  auto word = [](Evidence e) {
    switch (e) {
      case Evidence::Asserted: return "asserted";
      case Evidence::NumericEvidence: return "numeric-evidence";
      case Evidence::Unknown: return "unknown";
    }
    return "unknown";
  };
  json j;
  j["has_positive_equilibrium"] = word(ledger.positive_equilibrium);
  j["has_complex_balanced_equilibrium"] = word(ledger.complex_balanced);
  if (ledger.witness_state) {
    j["witness_state"] = *ledger.witness_state;
    j["witness_residual"] = ledger.witness_residual;
    j["witness_g_residual"] = ledger.witness_g_residual;
  }
  return j;
}

}  // namespace

nlohmann::json certificates_to_json(const CertifyResult& result) {
  json j;
  j["certificates"] = json::array();
  for (const auto& cert : result.certificates) {
    json cj;
    cj["kind"] = cert.kind == RobustnessCertificate::Kind::ACR ? "ACR" : "BCR";
    cj["species"] = cert.species;
    cj["theorem"] = theorem_name(cert.theorem);
    cj["conditional"] = cert.conditional;
    if (cert.sf_pair) cj["sf_pair_species"] = cert.sf_pair->species_id;
    if (cert.part_index) cj["part_index"] = *cert.part_index;
    if (cert.parent_delta) cj["parent_deficiency"] = *cert.parent_delta;
    if (!cert.notes.empty()) cj["notes"] = cert.notes;
    cj["assumptions"] = ledger_to_json(cert.assumptions);
    j["certificates"].push_back(std::move(cj));
  }
  j["reasons"] = result.reasons;
  return j;
}

nlohmann::json robustness_check_to_json(const RobustnessCheck& check,
                                        const std::string& species) {
  auto word = [](RobustnessCheck::Verdict v) {
    switch (v) {
      case RobustnessCheck::Verdict::Pass: return "pass";
      case RobustnessCheck::Verdict::Fail: return "fail";
      case RobustnessCheck::Verdict::InsufficientEvidence: return "insufficient-evidence";
    }
    return "insufficient-evidence";
  };
  json j;
  j["species"] = species;
  j["acr_verdict"] = word(check.acr_verdict);
  j["bcr_verdict"] = word(check.bcr_verdict);
  j["acr_spread"] = check.acr_spread;
  j["bcr_spread"] = check.bcr_spread;
  j["states_used"] = check.states_used;
  j["balanced_states_used"] = check.balanced_states_used;
  return j;
}

}  // namespace crn
