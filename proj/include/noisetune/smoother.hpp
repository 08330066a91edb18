#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "noisetune/band_cholesky.hpp"
#include "noisetune/factors.hpp"

namespace noisetune {

struct SmootherOptions {
  /// Per-component tangent magnitude above which a variable's pending
  /// update triggers relinearization (beta). Zero means iterate to full
  /// Gauss-Newton convergence at every timestep.
  double relin_threshold = 0.1;
  /// Cap on relinearize-and-resolve rounds within one add_timestep call.
  int max_update_iterations = 100;
  /// Updates below this magnitude count as converged even when
  /// relin_threshold is zero.
  double convergence_tol = 1e-10;
};

struct SolveReport {
  int iterations = 0;
  double final_objective = 0.0;
  bool converged = false;
  int relinearized_count = 0;
  double wall_time_s = 0.0;
};

/// Incremental Gauss-Newton smoother over a growing SE(2) chain.
///
/// State estimates are kept as delta (+) linearization_point per
/// variable. Each add_timestep appends one variable, re-eliminates only
/// the suffix of the natural temporal ordering whose rows changed, and
/// relinearizes exactly the variables whose pending delta exceeds
/// relin_threshold, repeating until no variable is left pending.
///
/// Instances are single-owner mutable. Copies are independent and cheap
/// (contiguous value state), which is what the learner's parallel
/// finite differencing relies on; read-only queries on a quiescent
/// instance are safe from multiple threads.
class Smoother {
 public:
  explicit Smoother(const NoiseParams& theta, const SmootherOptions& opts = {});

  /// Appends one variable plus the factors arriving with it. Factors may
  /// reference only existing variables and the new one.
  SolveReport add_timestep(const std::vector<Factor>& new_factors,
                           const Pose2& new_pose_init);

  int num_poses() const { return static_cast<int>(lin_points_.size()); }
  const NoiseParams& theta() const { return theta_; }
  const SmootherOptions& options() const { return opts_; }

  /// delta (+) linearization_point for one variable.
  Pose2 current_estimate(int id) const;

  /// The MAP trajectory in id order. Throws on an empty state.
  std::vector<Pose2> map_estimate() const;

  /// Objective at the current estimate.
  double objective() const;

  /// Square-root information factor R (R^T R = J^T J of the whitened
  /// system at the current linearization points) as sparse triplets,
  /// plus the elimination ordering (natural temporal order).
  std::vector<std::tuple<int, int, double>> sqrt_information() const;
  std::vector<int> ordering() const;

  /// Writes R as "row col value" lines for offline inspection.
  void dump_sqrt_information(const std::string& path) const;

  /// log det R = 0.5 log det(J^T J); rank error on a singular factor.
  double log_det_r() const;

  /// Draws n joint trajectory samples from the Gaussian posterior
  /// induced by the current linearization: w ~ N(0, I), R xi = w,
  /// returning (delta + xi) (+) linearization points. Deterministic
  /// under the seed; rank error if the system is singular.
  std::vector<std::vector<Pose2>> sample_posterior(int n,
                                                   std::uint64_t seed) const;

  /// Deterministic variant fed an explicit whitened vector; w = 0
  /// reproduces the MAP trajectory.
  std::vector<Pose2> sample_from_whitened(const Eigen::VectorXd& w) const;

  /// Draws only the newest variable's component of a joint posterior
  /// sample (its block of R xi = w depends on nothing earlier). This is
  /// what an online trajectory sampler consumes at every step.
  Pose2 sample_latest(std::mt19937_64& rng) const;

 private:
  void rebuild_rows_from(int var);
  void relinearize_factor(std::size_t fi);
  int factor_max_var(const Factor& f) const;

  NoiseParams theta_;
  SmootherOptions opts_;
  std::vector<Pose2> lin_points_;
  std::vector<Eigen::Vector3d> delta_;
  std::vector<Factor> factors_;
  std::vector<FactorBlocks> blocks_;          // whitened, at lin points
  std::vector<std::vector<int>> var_factors_;  // factor ids touching var
  BandSystem sys_;
  BandCholesky chol_;
};

}  // namespace noisetune
