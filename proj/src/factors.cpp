#include "noisetune/factors.hpp"

#include <string>

#include "noisetune/errors.hpp"

namespace noisetune {

Factor Factor::gps(int pose, const Eigen::Vector2d& z) {
  Factor f;
  f.kind = FactorKind::kGps;
  f.pose_a = pose;
  f.z_xy = z;
  return f;
}

Factor Factor::gps_pose3(int pose, const Pose2& z, double heading_var) {
  Factor f;
  f.kind = FactorKind::kGpsPose3;
  f.pose_a = pose;
  f.z_pose = z;
  f.heading_var = heading_var;
  return f;
}

Factor Factor::odom(int prev, int next, const Pose2& z) {
  Factor f;
  f.kind = FactorKind::kOdom;
  f.pose_a = prev;
  f.pose_b = next;
  f.z_pose = z;
  return f;
}

Factor Factor::pose_prior(int pose, const Pose2& z) {
  Factor f;
  f.kind = FactorKind::kPosePrior;
  f.pose_a = pose;
  f.z_pose = z;
  return f;
}

Eigen::VectorXd factor_variances(const Factor& f, const NoiseParams& theta) {
  switch (f.kind) {
    case FactorKind::kGps:
      return theta.gps();
    case FactorKind::kGpsPose3: {
      Eigen::Vector3d v;
      v << theta.gps(), f.heading_var;
      return v;
    }
    case FactorKind::kOdom:
    case FactorKind::kPosePrior:
      return theta.odom();
  }
  throw ConfigError("unknown factor kind");
}

namespace {

const Pose2& state_at(const std::vector<Pose2>& states, int id) {
  if (id < 0 || id >= static_cast<int>(states.size())) {
    throw ConfigError("factor references unknown variable id " +
                      std::to_string(id));
  }
  return states[static_cast<std::size_t>(id)];
}

// d(position of Exp(tau) x)/dtau at tau = 0: the translation moves
// directly and the heading channel rotates x about the origin.
Eigen::Matrix<double, 2, 3> gps_jacobian(const Pose2& x) {
  Eigen::Matrix<double, 2, 3> j;
  j << 1.0, 0.0, -x.ty(), 0.0, 1.0, x.tx();
  return j;
}

}  // namespace

Eigen::VectorXd residual(const Factor& f, const std::vector<Pose2>& states) {
  switch (f.kind) {
    case FactorKind::kGps:
      return state_at(states, f.pose_a).translation() - f.z_xy;
    case FactorKind::kGpsPose3:
    case FactorKind::kPosePrior:
      return ominus(state_at(states, f.pose_a), f.z_pose);
    case FactorKind::kOdom: {
      const Pose2 rel = compose(inverse(state_at(states, f.pose_a)),
                                state_at(states, f.pose_b));
      return logmap(compose(inverse(f.z_pose), rel));
    }
  }
  throw ConfigError("unknown factor kind");
}

Eigen::VectorXd whitened_residual(const Factor& f,
                                  const std::vector<Pose2>& states,
                                  const NoiseParams& theta) {
  const Eigen::VectorXd sigma = factor_variances(f, theta).cwiseSqrt();
  return residual(f, states).cwiseQuotient(sigma);
}

FactorBlocks linearize(const Factor& f, const std::vector<Pose2>& states) {
  FactorBlocks out;
  out.residual = residual(f, states);
  switch (f.kind) {
    case FactorKind::kGps:
      out.jac_a = gps_jacobian(state_at(states, f.pose_a));
      break;
    case FactorKind::kGpsPose3:
    case FactorKind::kPosePrior: {
      // r(tau) = Log(z^-1 Exp(tau) x) = Log(Exp(Ad_{z^-1} tau) z^-1 x),
      // so dr/dtau = Jl^-1(r) Ad(z^-1).
      out.jac_a = left_jacobian_inverse(out.residual) * adjoint(inverse(f.z_pose));
      break;
    }
    case FactorKind::kOdom: {
      // With c = z^-1 x_a^-1, perturbing either endpoint inserts
      // Exp(+/-tau) at the same spot: r(tau) = Log(c Exp(+/-tau) x_b),
      // giving dr/dtau_b = Jl^-1(r) Ad(c) and dr/dtau_a = -dr/dtau_b.
      const Pose2 c =
          compose(inverse(f.z_pose), inverse(state_at(states, f.pose_a)));
      out.jac_b = left_jacobian_inverse(out.residual) * adjoint(c);
      out.jac_a = -out.jac_b;
      break;
    }
  }
  return out;
}

FactorBlocks linearize_whitened(const Factor& f,
                                const std::vector<Pose2>& states,
                                const NoiseParams& theta) {
  FactorBlocks out = linearize(f, states);
  const Eigen::VectorXd inv_sigma =
      factor_variances(f, theta).cwiseSqrt().cwiseInverse();
  out.residual = out.residual.cwiseProduct(inv_sigma);
  out.jac_a = inv_sigma.asDiagonal() * out.jac_a;
  if (out.jac_b.size() > 0) {
    out.jac_b = inv_sigma.asDiagonal() * out.jac_b;
  }
  return out;
}

}  // namespace noisetune
