#pragma once

#include <vector>

#include "noisetune/factors.hpp"

namespace noisetune {

/// Pose variables (ids 0..n-1 with initial values) plus the factors over
/// them. Immutable once handed to a solver; construction is
/// single-threaded.
class FactorGraph {
 public:
  /// Appends a variable and returns its id.
  int add_pose(const Pose2& initial);

  /// Adds a factor; referenced ids must already exist and odom factors
  /// must connect a consecutive pair.
  void add_factor(const Factor& f);

  int num_poses() const { return static_cast<int>(initials_.size()); }
  const std::vector<Pose2>& initials() const { return initials_; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Structural check: non-empty and connected (every consecutive pair
  /// bridged by at least one odom factor).
  void validate() const;

  /// The strict dataset shape: exactly one gps factor per pose and one
  /// odom factor per consecutive pair, nothing else. Loaders enforce
  /// this; hand-built graphs (tests, toys) only need validate().
  void validate_dataset_topology() const;

 private:
  std::vector<Pose2> initials_;
  std::vector<Factor> factors_;
};

/// 0.5 * sum of squared whitened residuals; the inner objective and the
/// energy of the energy-based baseline.
double total_objective(const FactorGraph& graph,
                       const std::vector<Pose2>& states,
                       const NoiseParams& theta);

double total_objective(const std::vector<Factor>& factors,
                       const std::vector<Pose2>& states,
                       const NoiseParams& theta);

}  // namespace noisetune
