#pragma once

#include <Eigen/Core>
#include <string>

namespace noisetune {

using Vector5d = Eigen::Matrix<double, 5, 1>;

/// Learnable per-channel observation variances: two GPS channels (m^2)
/// and three odometry channels (m^2, m^2, rad^2).
///
/// Entries are kept strictly positive by projecting onto
/// [kMinVariance, inf) at every construction and update, so the induced
/// diagonal covariances stay positive definite without reparameterizing.
/// The global flattening order is fixed:
/// [gps0, gps1, odom0, odom1, odom2].
class NoiseParams {
 public:
  static constexpr double kMinVariance = 1e-8;
  static constexpr int kNumParams = 5;

  NoiseParams();  // all channels at variance 1
  NoiseParams(const Eigen::Vector2d& gps, const Eigen::Vector3d& odom);

  static NoiseParams from_flat(const Vector5d& theta);

  const Eigen::Vector2d& gps() const { return gps_; }
  const Eigen::Vector3d& odom() const { return odom_; }

  Vector5d flatten() const;

  /// theta + tau * e_k, projected back onto the positive orthant.
  NoiseParams perturbed(int k, double tau) const;

  /// All five variances scaled by c > 0.
  NoiseParams scaled(double c) const;

  static const char* channel_name(int k);

 private:
  Eigen::Vector2d gps_;
  Eigen::Vector3d odom_;
};

}  // namespace noisetune
