#include "noisetune/noise_params.hpp"

#include <cmath>

#include "noisetune/errors.hpp"

namespace noisetune {

namespace {
void check_finite(const Eigen::Ref<const Eigen::VectorXd>& v,
                  const char* what) {
  if (!v.allFinite()) {
    throw ConfigError(std::string("non-finite ") + what + " variances");
  }
}
}  // namespace

NoiseParams::NoiseParams()
    : gps_(Eigen::Vector2d::Ones()), odom_(Eigen::Vector3d::Ones()) {}

NoiseParams::NoiseParams(const Eigen::Vector2d& gps,
                         const Eigen::Vector3d& odom)
    : gps_(gps), odom_(odom) {
  check_finite(gps_, "gps");
  check_finite(odom_, "odom");
  gps_ = gps_.cwiseMax(kMinVariance);
  odom_ = odom_.cwiseMax(kMinVariance);
}

NoiseParams NoiseParams::from_flat(const Vector5d& theta) {
  return NoiseParams(theta.head<2>(), theta.tail<3>());
}

Vector5d NoiseParams::flatten() const {
  Vector5d theta;
  theta << gps_, odom_;
  return theta;
}

NoiseParams NoiseParams::perturbed(int k, double tau) const {
  Vector5d theta = flatten();
  theta[k] += tau;
  return from_flat(theta);
}

NoiseParams NoiseParams::scaled(double c) const {
  return from_flat(flatten() * c);
}

const char* NoiseParams::channel_name(int k) {
  static const char* names[kNumParams] = {"gps0", "gps1", "odom0", "odom1",
                                          "odom2"};
  return names[k];
}

}  // namespace noisetune
