#include "crn/io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <set>

namespace {

using nlohmann::json;
using namespace crn;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct OutputOptions {
  std::string format = "text";
};

void emit(const json& report, const OutputOptions& out) {
  if (out.format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  // Compact text rendering of the same report tree.
  std::function<void(const json&, int)> walk = [&](const json& node, int indent) {
    std::string pad(indent, ' ');
    if (node.is_object()) {
      for (const auto& [key, value] : node.items()) {
        if (value.is_primitive())
          std::cout << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        else {
          std::cout << pad << key << ":\n";
          walk(value, indent + 2);
        }
      }
    } else if (node.is_array()) {
      for (const auto& value : node) {
        if (value.is_primitive())
          std::cout << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        else {
          std::cout << pad << "-\n";
          walk(value, indent + 2);
        }
      }
    }
  };
  walk(report, 0);
}

json analysis_block(const KineticSystem& sys) {
  json j;
  j["schema"] = 1;
  j["structural_summary"] = summary_to_json(structural_summary(sys.net), sys.net);
  j["classification"] = classification_to_json(classify_kinetics(sys), sys);
  j["sf_pairs"] = sf_pairs_to_json(find_sf_pairs(sys), sys);
  return j;
}

AssumptionLedger ledger_from_flags(const std::vector<std::string>& assumptions) {
  AssumptionLedger ledger;
  for (const auto& a : assumptions) {
    if (a == "positive-equilibrium")
      ledger.positive_equilibrium = Evidence::Asserted;
    else if (a == "complex-balanced") {
      ledger.complex_balanced = Evidence::Asserted;
      // A complex balanced steady state is in particular a positive one.
      if (ledger.positive_equilibrium == Evidence::Unknown)
        ledger.positive_equilibrium = Evidence::Asserted;
    } else
      throw ParseError("unknown assumption: " + a);
  }
  return ledger;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-law kinetic reaction network analyzer"};
  app.require_subcommand(1);

  OutputOptions out;
  app.add_option("--output", out.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string path;
  std::string decomposition_path, rate_path, out_path, force_label, species_filter;
  int multiplier = 0;
  int trials = 20;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze",
      "Structural summary, kinetics classification, and SF-pairs");
  analyze->add_option("network", path)->required();

  auto* classify = app.add_subcommand("classify", "Kinetics classification only");
  classify->add_option("network", path)->required();

  auto* transform = app.add_subcommand("transform",
      "CF-RM+ transformation to a dynamically equivalent PL-RDK realization");
  transform->add_option("network", path)->required();
  transform->add_option("--force-translate", force_label,
                        "Translate this reaction even for PL-RDK input");
  transform->add_option("--multiplier", multiplier,
                        "Fixed translation multiplier (with --force-translate)");
  transform->add_option("--out", out_path, "Write the transformed network file here");

  auto* decompose = app.add_subcommand("decompose", "Verify a decomposition");
  decompose->add_option("network", path)->required();
  decompose->add_option("--decomposition", decomposition_path,
                        "Partition file (default: linkage-class decomposition)");

  std::vector<std::string> assumptions;
  auto* certify = app.add_subcommand("certify", "Emit ACR/BCR certificates");
  certify->add_option("network", path)->required();
  certify->add_option("--decomposition", decomposition_path);
  certify->add_option("--assume", assumptions,
                      "positive-equilibrium and/or complex-balanced");
  certify->add_option("--verify", rate_path,
                      "k-file: gather numeric evidence and verify certificates");
  certify->add_option("--trials", trials)->capture_default_str();
  certify->add_option("--seed", seed)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Numeric steady-state robustness check");
  verify->add_option("network", path)->required();
  verify->add_option("--rates", rate_path, "k-file")->required();
  verify->add_option("--species", species_filter, "Restrict to one species");
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    const KineticSystem sys = load_network_file(path);

    if (analyze->parsed()) {
      emit(analysis_block(sys), out);
      return kExitOk;
    }

    if (classify->parsed()) {
      json j;
      j["classification"] = classification_to_json(classify_kinetics(sys), sys);
      emit(j, out);
      return kExitOk;
    }

    if (transform->parsed()) {
      TransformRecord record;
      if (!force_label.empty() && multiplier > 0) {
        int rx = sys.reaction_index(force_label);
        if (rx < 0) throw ParseError("no reaction labeled " + force_label);
        record.source = sys;
        record.result = translate_reaction(sys, rx, multiplier);
        record.moves.push_back(
            {force_label, multiplier,
             record.result.net.complexes[record.result.net.reactions[rx].reactant],
             record.result.net.complexes[record.result.net.reactions[rx].product]});
      } else {
        CfRmOptions opts;
        if (!force_label.empty()) opts.force_translate = force_label;
        record = cf_rm_plus(sys, opts);
      }
      auto eq = dynamically_equivalent(record.source, record.result);
      if (!eq.equivalent) {
        std::cerr << "internal error: transform is not dynamically equivalent\n";
        for (const auto& d : eq.discrepancies) std::cerr << "  " << d << "\n";
        return kExitInvariant;
      }
      json j = transform_to_json(record);
      j["dynamically_equivalent"] = true;
      if (record.moves.empty()) j["notice"] = "input is already PL-RDK; no-op";
      emit(j, out);
      if (!out_path.empty()) save_network_file(record.result, out_path);
      return kExitOk;
    }

    if (decompose->parsed()) {
      Decomposition decomp = decomposition_path.empty()
                                 ? linkage_class_decomposition(sys)
                                 : load_decomposition_file(decomposition_path, sys);
      emit(decomposition_report_to_json(check_decomposition(sys, decomp)), out);
      return kExitOk;
    }

    if (certify->parsed()) {
      AssumptionLedger ledger = ledger_from_flags(assumptions);
      json j;
      std::optional<Eigen::VectorXd> k;
      if (!rate_path.empty()) {
        k = load_rate_file(rate_path, sys);
        SolveOptions sopt;
        sopt.trials = trials;
        sopt.seed = seed;
        SteadyStateSet states = find_steady_states(sys, *k, sopt);
        if (!states.states.empty()) {
          ledger.positive_equilibrium = Evidence::NumericEvidence;
          ledger.witness_state = std::vector<double>(
              states.states[0].data(), states.states[0].data() + states.states[0].size());
          ledger.witness_residual = states.residuals[0];
          ledger.witness_g_residual = states.g_residuals[0];
          if (states.g_residuals[0] <= 1e-8)
            ledger.complex_balanced = Evidence::NumericEvidence;
        }
      }

      CertifyResult result = certify_single(sys, ledger);
      if (!decomposition_path.empty()) {
        Decomposition decomp = load_decomposition_file(decomposition_path, sys);
        CertifyResult dres = certify_with_decomposition(sys, decomp, ledger);
        result.certificates.insert(result.certificates.end(),
                                   dres.certificates.begin(), dres.certificates.end());
        result.reasons.insert(result.reasons.end(), dres.reasons.begin(),
                              dres.reasons.end());
      }
      j.update(certificates_to_json(result));
      j["birch"] = birch_check(result.certificates, sys);

      if (k) {
        json checks = json::array();
        std::set<std::string> species_done;
        for (const auto& cert : result.certificates) {
          if (!species_done.insert(cert.species).second) continue;
          int sp = sys.net.species_index(cert.species);
          SolveOptions sopt;
          sopt.trials = trials;
          sopt.seed = seed;
          checks.push_back(robustness_check_to_json(
              verify_robustness(sys, *k, sp, sopt), cert.species));
        }
        j["numeric_verification"] = checks;
      }
      emit(j, out);
      return kExitOk;
    }

    if (verify->parsed()) {
      Eigen::VectorXd k = load_rate_file(rate_path, sys);
      SolveOptions sopt;
      sopt.trials = trials;
      sopt.seed = seed;
      json checks = json::array();
      for (std::size_t sp = 0; sp < sys.net.species.size(); ++sp) {
        if (!species_filter.empty() && sys.net.species[sp].id != species_filter)
          continue;
        checks.push_back(robustness_check_to_json(
            verify_robustness(sys, k, static_cast<int>(sp), sopt),
            sys.net.species[sp].id));
      }
      json j;
      j["numeric_verification"] = checks;
      emit(j, out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}
