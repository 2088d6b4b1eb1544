#pragma once

#include "crn/certify.hpp"
#include "crn/numerics.hpp"
#include "crn/transform.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace crn {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// NetworkFile schema (version 1):
///   {"schema": 1,
///    "species": ["A1", ...],
///    "reactions": [{"label": "R1",
///                   "reactant": {"A1": "1", "A2": "2"},
///                   "product":  {...},
///                   "kinetic_order": {"A1": "-68", "A2": "0.58"},
///                   "rate": "1"            // optional; number, decimal
///                  }, ...]}                // string, or symbol string
/// Coefficients and exponents are decimal strings (or integers) parsed to
/// exact rationals; omitted kinetic-order entries mean 0.
KineticSystem parse_network_file(const nlohmann::json& doc);
KineticSystem load_network_file(const std::string& path);

nlohmann::json serialize_network_file(const KineticSystem& sys);
void save_network_file(const KineticSystem& sys, const std::string& path);

/// Partition file: list of lists of reaction labels, or {"parts": [...]}.
Decomposition parse_decomposition_file(const nlohmann::json& doc,
                                       const KineticSystem& sys);
Decomposition load_decomposition_file(const std::string& path,
                                      const KineticSystem& sys);

/// k-file: {"rates": {"R1": 1.0, ...}}.
Eigen::VectorXd load_rate_file(const std::string& path, const KineticSystem& sys);

// Report blocks (ReportFile is assembled by the CLI from these).
nlohmann::json summary_to_json(const StructuralSummary& sum, const Network& net);
nlohmann::json classification_to_json(const KineticsClassification& cls,
                                      const KineticSystem& sys);
nlohmann::json sf_pairs_to_json(const std::vector<SFPair>& pairs,
                                const KineticSystem& sys);
nlohmann::json transform_to_json(const TransformRecord& record);
nlohmann::json decomposition_report_to_json(const DecompositionReport& report);
nlohmann::json certificates_to_json(const CertifyResult& result);
nlohmann::json robustness_check_to_json(const RobustnessCheck& check,
                                        const std::string& species);

}  // namespace crn
