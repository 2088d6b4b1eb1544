#pragma once

#include "crn/kinetics.hpp"

#include <Eigen/Dense>

namespace crn {

struct Evaluation {
  Eigen::VectorXd K;  // per-reaction rates, size r
  Eigen::VectorXd f;  // species formation rate N K, size m
  Eigen::VectorXd g;  // complex formation rate Ia K, size n
};

/// Power-law rates K_i = k_i * prod_s c_s^{F_is} and the induced species /
/// complex formation rates. Throws for nonpositive concentrations.
Evaluation evaluate(const KineticSystem& sys, const Eigen::VectorXd& k,
                    const Eigen::VectorXd& c);

struct SolveOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  double dedupe_tol = 1e-6;
  double log10_box_lo = -2.0;
  double log10_box_hi = 2.0;
  int max_iterations = 200;
  int max_halvings = 50;
  bool parallel = true;  // OpenMP over multistart trials when available
};

struct SteadyStateSet {
  std::vector<Eigen::VectorXd> states;
  std::vector<double> residuals;    // ||f||_inf per state
  std::vector<double> g_residuals;  // ||g||_inf per state
  double dedupe_tol = 1e-6;
};

/// Damped Newton on u -> f(exp u) in log-concentration space from seeded
/// multistart; converged states are sorted lexicographically and deduped at
/// relative per-coordinate tolerance. Deterministic for a fixed seed.
SteadyStateSet find_steady_states(const KineticSystem& sys, const Eigen::VectorXd& k,
                                  const SolveOptions& options = {});

bool check_complex_balanced(const KineticSystem& sys, const Eigen::VectorXd& k,
                            const Eigen::VectorXd& c, double tol = 1e-8);

struct RobustnessCheck {
  enum class Verdict { Pass, Fail, InsufficientEvidence };
  Verdict acr_verdict = Verdict::InsufficientEvidence;
  Verdict bcr_verdict = Verdict::InsufficientEvidence;
  double acr_spread = 0.0;  // max - min of species over found steady states
  double bcr_spread = 0.0;  // same over the complex-balanced subset
  int states_used = 0;
  int balanced_states_used = 0;
};

/// Empirical check over found equilibria, not a proof.
RobustnessCheck verify_robustness(const KineticSystem& sys, const Eigen::VectorXd& k,
                                  int species, const SolveOptions& options = {},
                                  double tol_spread = 1e-6,
                                  double balance_tol = 1e-8);

struct KernelReport {
  std::vector<Eigen::VectorXd> basis;     // kernel vectors of A_kappa, size n
  std::vector<std::vector<int>> supports; // complex indices per basis vector
  int dim_ker_Ak = 0;
  int dim_ker_YAk = 0;
  std::vector<std::string> warnings;
};

/// n x n Laplacian matrix A_kappa of the reaction digraph.
Eigen::MatrixXd laplacian_matrix(const Network& net, const Eigen::VectorXd& kappa);

/// Kernel basis of A_kappa normalized to non-negative representatives
/// supported on the terminal strong linkage classes, plus dim Ker(Y A_kappa)
/// from an SVD with relative cutoff 1e-10.
KernelReport laplacian_kernel(const KineticSystem& sys, const Eigen::VectorXd& kappa);

}  // namespace crn
