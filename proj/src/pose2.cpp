#include "noisetune/pose2.hpp"

#include <cmath>

#include "noisetune/errors.hpp"

namespace noisetune {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
// Below this |phi|, V and its inverse switch to series expansions.
constexpr double kSmallAngle = 1e-9;
}  // namespace

double wrap_angle(double theta) {
  double w = std::remainder(theta, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

Pose2::Pose2(double tx, double ty, double theta)
    : tx_(tx), ty_(ty), theta_(wrap_angle(theta)) {
  if (!std::isfinite(tx) || !std::isfinite(ty) || !std::isfinite(theta)) {
    throw NumericError("Pose2 built from non-finite fields");
  }
}

Eigen::Matrix2d Pose2::rotation() const {
  const double c = std::cos(theta_);
  const double s = std::sin(theta_);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

Pose2 compose(const Pose2& a, const Pose2& b) {
  const Eigen::Vector2d t = a.translation() + a.rotation() * b.translation();
  return Pose2(t.x(), t.y(), a.theta() + b.theta());
}

Pose2 inverse(const Pose2& p) {
  const double c = std::cos(p.theta());
  const double s = std::sin(p.theta());
  // -R(-theta) * t
  const double tx = -(c * p.tx() + s * p.ty());
  const double ty = -(-s * p.tx() + c * p.ty());
  return Pose2(tx, ty, -p.theta());
}

Eigen::Matrix2d translation_jacobian(double phi) {
  double a, b;  // V = [[a, -b], [b, a]]
  if (std::abs(phi) < kSmallAngle) {
    const double phi2 = phi * phi;
    a = 1.0 - phi2 / 6.0;
    b = phi / 2.0 - phi2 * phi / 24.0;
  } else {
    a = std::sin(phi) / phi;
    b = (1.0 - std::cos(phi)) / phi;
  }
  Eigen::Matrix2d v;
  v << a, -b, b, a;
  return v;
}

Pose2 expmap(const TangentVec& tau) {
  const Eigen::Vector2d t =
      translation_jacobian(tau.z()) * tau.head<2>();
  return Pose2(t.x(), t.y(), tau.z());
}

TangentVec logmap(const Pose2& p) {
  const double phi = p.theta();
  double a, b;
  if (std::abs(phi) < kSmallAngle) {
    const double phi2 = phi * phi;
    a = 1.0 - phi2 / 6.0;
    b = phi / 2.0 - phi2 * phi / 24.0;
  } else {
    a = std::sin(phi) / phi;
    b = (1.0 - std::cos(phi)) / phi;
  }
  // V^-1 = [[a, b], [-b, a]] / (a^2 + b^2); the denominator is
  // (2 - 2 cos(phi)) / phi^2 which stays positive on (-pi, pi].
  const double det = a * a + b * b;
  const Eigen::Vector2d t = p.translation();
  TangentVec tau;
  tau.x() = (a * t.x() + b * t.y()) / det;
  tau.y() = (-b * t.x() + a * t.y()) / det;
  tau.z() = phi;
  return tau;
}

Pose2 oplus(const TangentVec& tau, const Pose2& y) {
  return compose(expmap(tau), y);
}

TangentVec ominus(const Pose2& y1, const Pose2& y2) {
  return logmap(compose(y1, inverse(y2)));
}

Eigen::Matrix3d adjoint(const Pose2& g) {
  Eigen::Matrix3d ad = Eigen::Matrix3d::Identity();
  ad.topLeftCorner<2, 2>() = g.rotation();
  ad(0, 2) = g.ty();
  ad(1, 2) = -g.tx();
  return ad;
}

Eigen::Matrix3d se2_ad(const TangentVec& tau) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(0, 1) = -tau.z();
  m(1, 0) = tau.z();
  m(0, 2) = tau.y();
  m(1, 2) = -tau.x();
  return m;
}

Eigen::Matrix3d left_jacobian_inverse(const TangentVec& tau) {
  const double phi = tau.z();
  const double phi2 = phi * phi;
  double c;  // coefficient of ad^2 in Jl^-1 = I - ad/2 + c ad^2
  if (std::abs(phi) < 1e-4) {
    c = 1.0 / 12.0 + phi2 / 720.0;
  } else if (std::abs(std::sin(phi)) < 1e-9) {
    // |phi| ~ pi: (1 + cos)/(2 phi sin) -> (pi - |phi|)/(4 |phi|).
    c = 1.0 / phi2 - (kPi - std::abs(phi)) / (4.0 * std::abs(phi));
  } else {
    c = 1.0 / phi2 -
        (1.0 + std::cos(phi)) / (2.0 * phi * std::sin(phi));
  }
  const Eigen::Matrix3d ad = se2_ad(tau);
  return Eigen::Matrix3d::Identity() - 0.5 * ad + c * (ad * ad);
}

}  // namespace noisetune
