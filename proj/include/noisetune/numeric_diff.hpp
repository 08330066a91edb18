#pragma once

#include <Eigen/Core>

#include "noisetune/pose2.hpp"

namespace noisetune {

/// Default absolute perturbation, roughly sqrt(machine epsilon).
inline constexpr double kDefaultFdStep = 1e-6;

/// Forward differences mirror the one-sided limit that defines the
/// directional derivative; central differences are the higher-accuracy
/// verification mode.
enum class FdScheme { kForward, kCentral };

/// Left Jacobian of f: SE(2) -> SE(2) at `at`, column j:
///   Log(f(step e_j (+) x) * f(x)^-1) / step.
template <typename F>
Eigen::Matrix3d numeric_left_jacobian(F&& f, const Pose2& at,
                                      double step = kDefaultFdStep,
                                      FdScheme scheme = FdScheme::kForward) {
  Eigen::Matrix3d jac;
  const Pose2 f0 = f(at);
  for (int j = 0; j < 3; ++j) {
    TangentVec e = TangentVec::Zero();
    e[j] = step;
    const Pose2 fp = f(oplus(e, at));
    if (scheme == FdScheme::kForward) {
      jac.col(j) = ominus(fp, f0) / step;
    } else {
      e[j] = -step;
      const Pose2 fm = f(oplus(e, at));
      jac.col(j) = ominus(fp, fm) / (2.0 * step);
    }
  }
  return jac;
}

/// Left Jacobian of f: R^k -> SE(2); the domain perturbation is plain
/// addition. Returns a 3 x k matrix.
template <typename F>
Eigen::MatrixXd numeric_left_jacobian_from_vec(
    F&& f, const Eigen::VectorXd& at, double step = kDefaultFdStep,
    FdScheme scheme = FdScheme::kForward) {
  const int k = static_cast<int>(at.size());
  Eigen::MatrixXd jac(3, k);
  const Pose2 f0 = f(at);
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXd xp = at;
    xp[j] += step;
    const Pose2 fp = f(xp);
    if (scheme == FdScheme::kForward) {
      jac.col(j) = ominus(fp, f0) / step;
    } else {
      Eigen::VectorXd xm = at;
      xm[j] -= step;
      jac.col(j) = ominus(fp, f(xm)) / (2.0 * step);
    }
  }
  return jac;
}

/// Jacobian of f: SE(2) -> R^n under the left perturbation; the codomain
/// difference is plain subtraction. Returns an n x 3 matrix.
template <typename F>
Eigen::MatrixXd numeric_jacobian_to_vec(F&& f, const Pose2& at,
                                        double step = kDefaultFdStep,
                                        FdScheme scheme = FdScheme::kForward) {
  const Eigen::VectorXd f0 = f(at);
  Eigen::MatrixXd jac(f0.size(), 3);
  for (int j = 0; j < 3; ++j) {
    TangentVec e = TangentVec::Zero();
    e[j] = step;
    const Eigen::VectorXd fp = f(oplus(e, at));
    if (scheme == FdScheme::kForward) {
      jac.col(j) = (fp - f0) / step;
    } else {
      e[j] = -step;
      const Eigen::VectorXd fm = f(oplus(e, at));
      jac.col(j) = (fp - fm) / (2.0 * step);
    }
  }
  return jac;
}

}  // namespace noisetune
