#include "noisetune/factor_graph.hpp"

#include <string>

#include "noisetune/errors.hpp"

namespace noisetune {

int FactorGraph::add_pose(const Pose2& initial) {
  initials_.push_back(initial);
  return static_cast<int>(initials_.size()) - 1;
}

void FactorGraph::add_factor(const Factor& f) {
  auto check_id = [this](int id) {
    if (id < 0 || id >= num_poses()) {
      throw ConfigError("factor references unknown variable id " +
                        std::to_string(id));
    }
  };
  check_id(f.pose_a);
  if (f.kind == FactorKind::kOdom) {
    check_id(f.pose_b);
    if (f.pose_b != f.pose_a + 1) {
      throw ConfigError("odom factor must connect consecutive poses, got (" +
                        std::to_string(f.pose_a) + ", " +
                        std::to_string(f.pose_b) + ")");
    }
  }
  factors_.push_back(f);
}

void FactorGraph::validate() const {
  if (initials_.empty()) {
    throw ConfigError("factor graph has no variables");
  }
  std::vector<bool> linked(static_cast<std::size_t>(num_poses()), false);
  for (const Factor& f : factors_) {
    if (f.kind == FactorKind::kOdom) {
      linked[static_cast<std::size_t>(f.pose_a)] = true;
    }
  }
  for (int i = 0; i + 1 < num_poses(); ++i) {
    if (!linked[static_cast<std::size_t>(i)]) {
      throw ConfigError("graph is disconnected: no odom factor between poses " +
                        std::to_string(i) + " and " + std::to_string(i + 1));
    }
  }
}

void FactorGraph::validate_dataset_topology() const {
  validate();
  std::vector<int> gps_count(static_cast<std::size_t>(num_poses()), 0);
  std::vector<int> odom_count(static_cast<std::size_t>(num_poses()), 0);
  for (const Factor& f : factors_) {
    switch (f.kind) {
      case FactorKind::kGps:
      case FactorKind::kGpsPose3:
        ++gps_count[static_cast<std::size_t>(f.pose_a)];
        break;
      case FactorKind::kOdom:
        ++odom_count[static_cast<std::size_t>(f.pose_a)];
        break;
      default:
        throw ConfigError("dataset graphs allow only gps and odom factors");
    }
  }
  for (int i = 0; i < num_poses(); ++i) {
    if (gps_count[static_cast<std::size_t>(i)] != 1) {
      throw ConfigError("pose " + std::to_string(i) + " has " +
                        std::to_string(gps_count[static_cast<std::size_t>(i)]) +
                        " gps factors, expected exactly 1");
    }
    const int expected = (i + 1 < num_poses()) ? 1 : 0;
    if (odom_count[static_cast<std::size_t>(i)] != expected) {
      throw ConfigError("pose pair (" + std::to_string(i) + ", " +
                        std::to_string(i + 1) + ") has " +
                        std::to_string(odom_count[static_cast<std::size_t>(i)]) +
                        " odom factors, expected " + std::to_string(expected));
    }
  }
}

double total_objective(const std::vector<Factor>& factors,
                       const std::vector<Pose2>& states,
                       const NoiseParams& theta) {
  double obj = 0.0;
  for (const Factor& f : factors) {
    obj += 0.5 * whitened_residual(f, states, theta).squaredNorm();
  }
  return obj;
}

double total_objective(const FactorGraph& graph,
                       const std::vector<Pose2>& states,
                       const NoiseParams& theta) {
  return total_objective(graph.factors(), states, theta);
}

}  // namespace noisetune
