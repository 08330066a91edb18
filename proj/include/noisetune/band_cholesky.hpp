#pragma once

#include <Eigen/Core>
#include <vector>

namespace noisetune {

/// Symmetric positive-semidefinite system in upper-band storage.
///
/// Chain-ordered SE(2) graphs (unary factors plus consecutive binary
/// factors) produce a block-tridiagonal normal matrix; with 3-dof
/// variables that is a scalar band of half-width 5. Row i stores
/// H(i, i..i+kBand) contiguously.
class BandSystem {
 public:
  static constexpr int kBand = 5;

  int rows() const { return rows_; }

  /// Grows to `rows` scalar rows, zero-initializing new storage.
  void resize(int rows);

  /// Zeros H rows and gradient entries from `row0` on (suffix rebuild).
  void clear_from(int row0);

  /// Accumulates jac^T jac and -jac^T r for a whitened factor block
  /// whose columns start at scalar column `col0`, touching only rows
  /// >= row_min (already-final rows keep their previous contribution).
  void add_block(int col0, const Eigen::MatrixXd& jac,
                 const Eigen::VectorXd& whitened_residual, int row_min);

  /// Cross term jac_a^T jac_b between two blocks of one factor.
  void add_cross_block(int col_a, const Eigen::MatrixXd& jac_a, int col_b,
                       const Eigen::MatrixXd& jac_b, int row_min);

  double h(int i, int off) const { return band_[idx(i, off)]; }
  double g(int i) const { return grad_[static_cast<std::size_t>(i)]; }

 private:
  std::size_t idx(int i, int off) const {
    return static_cast<std::size_t>(i) * (kBand + 1) +
           static_cast<std::size_t>(off);
  }

  int rows_ = 0;
  std::vector<double> band_;
  std::vector<double> grad_;
};

/// Upper-triangular square-root factor R with R^T R equal to the band
/// system's matrix, plus the forward-substituted right-hand side y
/// solving R^T y = g.
///
/// Exactly singular directions are tolerated when consistent: a vanishing
/// pivot with vanishing transformed right-hand side yields a zero step
/// along that direction (minimum-norm convention); a vanishing pivot with
/// non-vanishing right-hand side raises RankDeficiencyError naming the
/// variable.
class BandCholesky {
 public:
  static constexpr int kBand = BandSystem::kBand;

  /// (Re)factors rows [row0, sys.rows()); rows below row0 must already
  /// hold a valid factorization of an unchanged prefix.
  void factor_from(const BandSystem& sys, int row0);

  int rows() const { return rows_; }
  bool has_zero_pivot() const;

  /// Solves R delta = y (the Gauss-Newton step).
  Eigen::VectorXd back_substitute() const;

  /// Solves R xi = w for an arbitrary right-hand side (posterior
  /// sampling); zero pivots raise RankDeficiencyError.
  Eigen::VectorXd solve_upper(const Eigen::VectorXd& w) const;

  /// Like solve_upper but only for the trailing `tail` entries of xi,
  /// which depend on nothing earlier; w holds those entries.
  Eigen::VectorXd solve_upper_tail(const Eigen::VectorXd& w) const;

  double r(int i, int off) const { return band_[idx(i, off)]; }
  double y(int i) const { return y_[static_cast<std::size_t>(i)]; }

  /// Sparse triplets (row, col, value) of R, skipping zeros.
  std::vector<std::tuple<int, int, double>> triplets() const;

 private:
  std::size_t idx(int i, int off) const {
    return static_cast<std::size_t>(i) * (kBand + 1) +
           static_cast<std::size_t>(off);
  }

  int rows_ = 0;
  std::vector<double> band_;
  std::vector<double> y_;
  std::vector<char> zero_pivot_;
};

}  // namespace noisetune
