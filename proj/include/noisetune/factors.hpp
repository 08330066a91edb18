#pragma once

#include <Eigen/Core>
#include <vector>

#include "noisetune/noise_params.hpp"
#include "noisetune/pose2.hpp"

namespace noisetune {

enum class FactorKind {
  kGps,       // unary, 2-D position measurement
  kGpsPose3,  // unary, full-pose GPS variant (gps_mode = pose3)
  kOdom,      // binary, relative pose between consecutive variables
  kPosePrior  // unary, full-pose anchor weighted by the odom channels
};

/// A single measurement potential. Unary kinds reference pose_a only;
/// odom references the consecutive pair (pose_a, pose_b = pose_a + 1).
struct Factor {
  FactorKind kind = FactorKind::kGps;
  int pose_a = -1;
  int pose_b = -1;
  Eigen::Vector2d z_xy = Eigen::Vector2d::Zero();  // gps position
  Pose2 z_pose;  // odom relative pose / prior target / pose3 measurement
  // Heading variance of the pose3 GPS variant. The learned parameter
  // vector carries only two GPS channels, so this one stays fixed.
  double heading_var = 1.0;

  static Factor gps(int pose, const Eigen::Vector2d& z);
  static Factor gps_pose3(int pose, const Pose2& z, double heading_var = 1.0);
  static Factor odom(int prev, int next, const Pose2& z);
  static Factor pose_prior(int pose, const Pose2& z);

  bool is_unary() const { return kind != FactorKind::kOdom; }
  int residual_dim() const { return kind == FactorKind::kGps ? 2 : 3; }
};

/// Per-channel variances weighting this factor's residual, in residual
/// order.
Eigen::VectorXd factor_variances(const Factor& f, const NoiseParams& theta);

/// Unwhitened residual g_i(x_i) - z_i at the given assignment. Throws
/// ConfigError if a referenced variable id is missing.
///   gps:   (tx, ty) - z                       in R^2
///   odom:  Log(z^-1 * (x_prev^-1 * x_next))   in R^3
///   prior: Log(z^-1 * x)                      in R^3
Eigen::VectorXd residual(const Factor& f, const std::vector<Pose2>& states);

/// Residual with channel k divided by sqrt(variance_k), so the squared
/// 2-norm equals the Mahalanobis norm r^T diag(theta)^-1 r.
Eigen::VectorXd whitened_residual(const Factor& f,
                                  const std::vector<Pose2>& states,
                                  const NoiseParams& theta);

/// Analytic linearization under the left perturbation x -> Exp(tau) x.
/// jac_b is empty for unary factors. Blocks and residual are unwhitened.
struct FactorBlocks {
  Eigen::MatrixXd jac_a;
  Eigen::MatrixXd jac_b;
  Eigen::VectorXd residual;
};

FactorBlocks linearize(const Factor& f, const std::vector<Pose2>& states);

/// linearize() with rows scaled by the channel inverse standard
/// deviations; what the solvers consume.
FactorBlocks linearize_whitened(const Factor& f,
                                const std::vector<Pose2>& states,
                                const NoiseParams& theta);

}  // namespace noisetune
