#include "crn/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace crn {

namespace {

Eigen::MatrixXd to_dense(const RationalMatrix& mat) {
  if (mat.empty()) return {};
  Eigen::MatrixXd out(mat.size(), mat[0].size());
  for (std::size_t i = 0; i < mat.size(); ++i)
    for (std::size_t j = 0; j < mat[i].size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          to_double(mat[i][j]);
  return out;
}

struct DenseSystem {
  Eigen::MatrixXd N;  // m x r
  Eigen::MatrixXd Ia; // n x r
  Eigen::MatrixXd F;  // r x m
};

DenseSystem dense_of(const KineticSystem& sys) {
  const auto maps = linear_maps(sys.net);
  return {to_dense(maps.N), to_dense(maps.Ia), to_dense(sys.F)};
}

Eigen::VectorXd rates_at(const DenseSystem& d, const Eigen::VectorXd& k,
                         const Eigen::VectorXd& u) {
  // K_i = k_i * exp(F_i . u) with u = log c
  return k.array() * (d.F * u).array().exp();
}

int svd_rank(const Eigen::MatrixXd& mat, double rel_cutoff = 1e-10) {
  if (mat.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double cutoff = rel_cutoff * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

}  // namespace

Evaluation evaluate(const KineticSystem& sys, const Eigen::VectorXd& k,
                    const Eigen::VectorXd& c) {
  if (c.size() != static_cast<Eigen::Index>(sys.net.species.size()))
    throw ValidationError("evaluate: concentration vector has wrong size");
  if (k.size() != static_cast<Eigen::Index>(sys.net.reactions.size()))
    throw ValidationError("evaluate: rate vector has wrong size");
  if ((c.array() <= 0).any())
    throw ValidationError("evaluate: concentrations must be strictly positive");
  if ((k.array() <= 0).any())
    throw ValidationError("evaluate: rate constants must be strictly positive");
  const DenseSystem d = dense_of(sys);
  Evaluation ev;
  ev.K = rates_at(d, k, c.array().log().matrix());
  ev.f = d.N * ev.K;
  ev.g = d.Ia * ev.K;
  return ev;
}

namespace {

struct NewtonResult {
  bool converged = false;
  Eigen::VectorXd c;
  double residual = 0.0;
};

NewtonResult newton_from(const DenseSystem& d, const Eigen::VectorXd& k,
                         Eigen::VectorXd u, const SolveOptions& opt) {
  NewtonResult res;
  const Eigen::Index m = u.size();
  Eigen::VectorXd K = rates_at(d, k, u);
  Eigen::VectorXd f = d.N * K;
  double rnorm = f.lpNorm<Eigen::Infinity>();
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    if (rnorm <= opt.tol) {
      res.converged = true;
      break;
    }
    // J_{s,t} = sum_i N_{s,i} K_i F_{i,t}
    Eigen::MatrixXd J = d.N * K.asDiagonal() * d.F;
    Eigen::VectorXd step =
        J.completeOrthogonalDecomposition().solve(-f).eval();
    if (!step.allFinite()) break;
    double lambda = 1.0;
    bool improved = false;
    for (int h = 0; h < opt.max_halvings; ++h) {
      Eigen::VectorXd u_try = u + lambda * step;
      if (u_try.allFinite()) {
        Eigen::VectorXd K_try = rates_at(d, k, u_try);
        Eigen::VectorXd f_try = d.N * K_try;
        double r_try = f_try.lpNorm<Eigen::Infinity>();
        if (std::isfinite(r_try) && r_try < rnorm) {
          u = u_try;
          K = K_try;
          f = f_try;
          rnorm = r_try;
          improved = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!improved) break;
    (void)m;
  }
  if (rnorm <= opt.tol) res.converged = true;
  res.c = u.array().exp();
  res.residual = rnorm;
  return res;
}

bool states_close(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    double scale = std::max({1.0, std::abs(a(i)), std::abs(b(i))});
    if (std::abs(a(i) - b(i)) > tol * scale) return false;
  }
  return true;
}

}  // namespace

SteadyStateSet find_steady_states(const KineticSystem& sys, const Eigen::VectorXd& k,
                                  const SolveOptions& options) {
  if ((k.array() <= 0).any())
    throw ValidationError("find_steady_states: rate constants must be positive");
  const DenseSystem d = dense_of(sys);
  const int m = static_cast<int>(sys.net.species.size());

  // Starts are generated up front so parallel scheduling cannot affect them.
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> box(options.log10_box_lo, options.log10_box_hi);
  const double ln10 = std::log(10.0);
  std::vector<Eigen::VectorXd> starts(options.trials);
  for (auto& u : starts) {
    u.resize(m);
    for (int i = 0; i < m; ++i) u(i) = box(rng) * ln10;
  }

  std::vector<NewtonResult> results(starts.size());
#ifdef CRN_HAVE_OPENMP
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < starts.size(); ++i)
      results[i] = newton_from(d, k, starts[i], options);
  } else {
    for (std::size_t i = 0; i < starts.size(); ++i)
      results[i] = newton_from(d, k, starts[i], options);
  }
#else
  for (std::size_t i = 0; i < starts.size(); ++i)
    results[i] = newton_from(d, k, starts[i], options);
#endif

  std::vector<Eigen::VectorXd> converged;
  for (auto& res : results)
    if (res.converged) converged.push_back(std::move(res.c));
  std::sort(converged.begin(), converged.end(),
            [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
              return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                                  b.data(), b.data() + b.size());
            });

  SteadyStateSet set;
  set.dedupe_tol = options.dedupe_tol;
  for (const auto& c : converged) {
    bool duplicate = std::any_of(set.states.begin(), set.states.end(),
                                 [&](const Eigen::VectorXd& existing) {
                                   return states_close(existing, c, options.dedupe_tol);
                                 });
    if (duplicate) continue;
    Evaluation ev = evaluate(sys, k, c);
    set.states.push_back(c);
    set.residuals.push_back(ev.f.lpNorm<Eigen::Infinity>());
    set.g_residuals.push_back(ev.g.lpNorm<Eigen::Infinity>());
  }
  return set;
}

bool check_complex_balanced(const KineticSystem& sys, const Eigen::VectorXd& k,
                            const Eigen::VectorXd& c, double tol) {
  return evaluate(sys, k, c).g.lpNorm<Eigen::Infinity>() <= tol;
}

RobustnessCheck verify_robustness(const KineticSystem& sys, const Eigen::VectorXd& k,
                                  int species, const SolveOptions& options,
                                  double tol_spread, double balance_tol) {
  RobustnessCheck check;
  const SteadyStateSet set = find_steady_states(sys, k, options);
  check.states_used = static_cast<int>(set.states.size());

  auto spread_of = [&](const std::vector<const Eigen::VectorXd*>& states) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto* c : states) {
      lo = std::min(lo, (*c)(species));
      hi = std::max(hi, (*c)(species));
    }
    return hi - lo;
  };

  if (set.states.size() >= 2) {
    std::vector<const Eigen::VectorXd*> all;
    for (const auto& c : set.states) all.push_back(&c);
    check.acr_spread = spread_of(all);
    check.acr_verdict = check.acr_spread <= tol_spread
                            ? RobustnessCheck::Verdict::Pass
                            : RobustnessCheck::Verdict::Fail;
  }

  std::vector<const Eigen::VectorXd*> balanced;
  for (std::size_t i = 0; i < set.states.size(); ++i)
    if (set.g_residuals[i] <= balance_tol) balanced.push_back(&set.states[i]);
  check.balanced_states_used = static_cast<int>(balanced.size());
  if (balanced.size() >= 2) {
    check.bcr_spread = spread_of(balanced);
    check.bcr_verdict = check.bcr_spread <= tol_spread
                            ? RobustnessCheck::Verdict::Pass
                            : RobustnessCheck::Verdict::Fail;
  }
  return check;
}

Eigen::MatrixXd laplacian_matrix(const Network& net, const Eigen::VectorXd& kappa) {
  const int n = static_cast<int>(net.complexes.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < net.reactions.size(); ++j) {
    const auto& rx = net.reactions[j];
    A(rx.product, rx.reactant) += kappa(static_cast<Eigen::Index>(j));
    A(rx.reactant, rx.reactant) -= kappa(static_cast<Eigen::Index>(j));
  }
  return A;
}

KernelReport laplacian_kernel(const KineticSystem& sys, const Eigen::VectorXd& kappa) {
  if (kappa.size() != static_cast<Eigen::Index>(sys.net.reactions.size()))
    throw ValidationError("laplacian_kernel: kappa has wrong size");
  if ((kappa.array() <= 0).any())
    throw ValidationError("laplacian_kernel: kappa must be positive");

  const Network& net = sys.net;
  const int n = static_cast<int>(net.complexes.size());
  const Eigen::MatrixXd A = laplacian_matrix(net, kappa);
  const auto parts = linkage_partitions(net);

  KernelReport report;
  report.dim_ker_Ak = n - svd_rank(A);

  // One basis vector per terminal strong linkage class, computed from the
  // principal submatrix (all outgoing reactions of a terminal class stay
  // inside it).
  for (const auto& tslc : parts.terminal_strong_linkage_classes) {
    const int sz = static_cast<int>(tslc.size());
    Eigen::MatrixXd sub(sz, sz);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) sub(i, j) = A(tslc[i], tslc[j]);
    Eigen::VectorXd local;
    if (sz == 1) {
      local = Eigen::VectorXd::Ones(1);
    } else {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub, Eigen::ComputeFullV);
      local = svd.matrixV().col(sz - 1);
      if (local.sum() < 0) local = -local;
    }
    local /= local.cwiseAbs().maxCoeff();
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < sz; ++i) v(tslc[i]) = local(i);
    double res = (A * v).lpNorm<Eigen::Infinity>();
    if (res > 1e-9)
      report.warnings.push_back("kernel basis vector residual " + std::to_string(res) +
                                " exceeds 1e-9");
    if ((local.array() < 0).any())
      report.warnings.push_back("kernel basis vector has negative entries");
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (std::abs(v(i)) > 1e-12) support.push_back(i);
    report.basis.push_back(std::move(v));
    report.supports.push_back(std::move(support));
  }

  if (report.dim_ker_Ak != static_cast<int>(report.basis.size()))
    report.warnings.push_back(
        "dim Ker A_k from SVD (" + std::to_string(report.dim_ker_Ak) +
        ") disagrees with terminal class count (" +
        std::to_string(report.basis.size()) + ")");

  const Eigen::MatrixXd Y = to_dense(linear_maps(net).Y);
  report.dim_ker_YAk = n - svd_rank(Y * A);

  const StructuralSummary sum = structural_summary(net);
  if (sum.l == sum.t && report.dim_ker_YAk != sum.delta + sum.t)
    report.warnings.push_back(
        "dim Ker YA_k (" + std::to_string(report.dim_ker_YAk) +
        ") differs from delta + t (" + std::to_string(sum.delta + sum.t) + ")");
  return report;
}

}  // namespace crn
