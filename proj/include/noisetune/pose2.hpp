#pragma once

#include <Eigen/Core>

namespace noisetune {

/// Coordinates of the se(2) Lie algebra: (rho_x, rho_y, phi).
/// rho is the translational part in meters, phi the rotation in radians.
using TangentVec = Eigen::Vector3d;

/// An SE(2) group element: planar translation plus heading.
///
/// The heading is always stored wrapped to (-pi, pi]; construction
/// asserts finiteness. Instances are immutable values.
class Pose2 {
 public:
  Pose2() : tx_(0.0), ty_(0.0), theta_(0.0) {}
  Pose2(double tx, double ty, double theta);

  double tx() const { return tx_; }
  double ty() const { return ty_; }
  double theta() const { return theta_; }

  Eigen::Vector2d translation() const { return {tx_, ty_}; }
  Eigen::Matrix2d rotation() const;

  static Pose2 identity() { return Pose2(); }

  bool operator==(const Pose2& o) const {
    return tx_ == o.tx_ && ty_ == o.ty_ && theta_ == o.theta_;
  }

 private:
  double tx_;
  double ty_;
  double theta_;
};

/// Wraps an angle to the half-open interval (-pi, pi].
double wrap_angle(double theta);

/// Group composition a * b. Rotations add (wrapped); the translation of b
/// is rotated into a's frame and offset by a's translation.
Pose2 compose(const Pose2& a, const Pose2& b);

/// Group inverse: (-R(-theta) t, -theta).
Pose2 inverse(const Pose2& p);

/// Exact SE(2) exponential map. theta = phi and translation = V(phi) rho,
/// where V is the closed-form translation Jacobian
///   V(phi) = [[sin(phi)/phi, -(1-cos(phi))/phi],
///             [(1-cos(phi))/phi, sin(phi)/phi]].
/// A second-order Taylor expansion of V is used for |phi| < 1e-9.
Pose2 expmap(const TangentVec& tau);

/// Inverse of expmap: rho = V(theta)^-1 t. V^-1 stays finite on all of
/// (-pi, pi] but its conditioning degrades as |theta| approaches pi
/// (sin(theta)/theta -> 0); expect reduced roundtrip accuracy there.
TangentVec logmap(const Pose2& p);

/// Left (global-frame) perturbation: Exp(tau) * y.
Pose2 oplus(const TangentVec& tau, const Pose2& y);

/// Left difference: Log(y1 * y2^-1). Inverse of oplus in its first slot.
TangentVec ominus(const Pose2& y1, const Pose2& y2);

/// Adjoint matrix of g: maps tangent vectors across conjugation,
/// Exp(Ad_g tau) = g Exp(tau) g^-1.
Eigen::Matrix3d adjoint(const Pose2& g);

/// V(phi) as used by expmap (with the Taylor fallback near zero).
Eigen::Matrix2d translation_jacobian(double phi);

/// se(2) adjoint (little ad) of tau.
Eigen::Matrix3d se2_ad(const TangentVec& tau);

/// Inverse left Jacobian of the SE(2) exponential:
/// d/dtau Log(Exp(tau) Y)|_{tau=0} = Jl^-1(Log Y).
Eigen::Matrix3d left_jacobian_inverse(const TangentVec& tau);

}  // namespace noisetune
