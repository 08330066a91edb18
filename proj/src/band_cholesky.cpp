#include "noisetune/band_cholesky.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "noisetune/errors.hpp"

namespace noisetune {

namespace {
constexpr double kPivotTol = 1e-12;
constexpr double kConsistencyTol = 1e-9;
}  // namespace

void BandSystem::resize(int rows) {
  rows_ = rows;
  band_.resize(static_cast<std::size_t>(rows) * (kBand + 1), 0.0);
  grad_.resize(static_cast<std::size_t>(rows), 0.0);
}

void BandSystem::clear_from(int row0) {
  std::fill(band_.begin() + idx(row0, 0), band_.end(), 0.0);
  std::fill(grad_.begin() + row0, grad_.end(), 0.0);
}

void BandSystem::add_block(int col0, const Eigen::MatrixXd& jac,
                           const Eigen::VectorXd& whitened_residual,
                           int row_min) {
  const int w = static_cast<int>(jac.cols());
  for (int a = 0; a < w; ++a) {
    const int i = col0 + a;
    if (i < row_min) continue;
    for (int b = a; b < w; ++b) {
      band_[idx(i, b - a)] += jac.col(a).dot(jac.col(b));
    }
    grad_[static_cast<std::size_t>(i)] -= jac.col(a).dot(whitened_residual);
  }
}

void BandSystem::add_cross_block(int col_a, const Eigen::MatrixXd& jac_a,
                                 int col_b, const Eigen::MatrixXd& jac_b,
                                 int row_min) {
  for (int a = 0; a < jac_a.cols(); ++a) {
    const int i = col_a + a;
    if (i < row_min) continue;
    for (int b = 0; b < jac_b.cols(); ++b) {
      band_[idx(i, col_b + b - i)] += jac_a.col(a).dot(jac_b.col(b));
    }
  }
}

void BandCholesky::factor_from(const BandSystem& sys, int row0) {
  rows_ = sys.rows();
  band_.resize(static_cast<std::size_t>(rows_) * (kBand + 1));
  y_.resize(static_cast<std::size_t>(rows_));
  zero_pivot_.resize(static_cast<std::size_t>(rows_));

  double g_scale = 1.0;
  for (int i = 0; i < rows_; ++i) {
    g_scale = std::max(g_scale, std::abs(sys.g(i)));
  }
  const double rhs_tol = kConsistencyTol * g_scale;

  for (int i = row0; i < rows_; ++i) {
    const int p_lo = std::max(0, i - kBand);
    // Diagonal pivot first.
    double diag = sys.h(i, 0);
    for (int p = p_lo; p < i; ++p) {
      const double rpi = band_[idx(p, i - p)];
      diag -= rpi * rpi;
    }
    const double pivot_floor = kPivotTol * std::max(1.0, sys.h(i, 0));
    if (diag <= pivot_floor) {
      zero_pivot_[static_cast<std::size_t>(i)] = 1;
      for (int off = 0; off <= kBand; ++off) band_[idx(i, off)] = 0.0;
    } else {
      zero_pivot_[static_cast<std::size_t>(i)] = 0;
      const double rii = std::sqrt(diag);
      band_[idx(i, 0)] = rii;
      for (int off = 1; off <= kBand && i + off < rows_; ++off) {
        double sum = sys.h(i, off);
        for (int p = std::max(p_lo, i + off - kBand); p < i; ++p) {
          sum -= band_[idx(p, i - p)] * band_[idx(p, i + off - p)];
        }
        band_[idx(i, off)] = sum / rii;
      }
    }
    // Forward substitution for y: R^T y = g.
    double num = sys.g(i);
    for (int p = p_lo; p < i; ++p) {
      num -= band_[idx(p, i - p)] * y_[static_cast<std::size_t>(p)];
    }
    if (zero_pivot_[static_cast<std::size_t>(i)]) {
      if (std::abs(num) > rhs_tol) {
        throw RankDeficiencyError(
            "rank-deficient system: zero pivot with inconsistent right-hand "
            "side at variable " +
                std::to_string(i / 3),
            i / 3);
      }
      y_[static_cast<std::size_t>(i)] = 0.0;
    } else {
      y_[static_cast<std::size_t>(i)] = num / band_[idx(i, 0)];
    }
  }
}

bool BandCholesky::has_zero_pivot() const {
  for (char z : zero_pivot_) {
    if (z) return true;
  }
  return false;
}

Eigen::VectorXd BandCholesky::back_substitute() const {
  Eigen::VectorXd delta(rows_);
  for (int i = rows_ - 1; i >= 0; --i) {
    if (zero_pivot_[static_cast<std::size_t>(i)]) {
      delta[i] = 0.0;
      continue;
    }
    double sum = y_[static_cast<std::size_t>(i)];
    for (int off = 1; off <= kBand && i + off < rows_; ++off) {
      sum -= band_[idx(i, off)] * delta[i + off];
    }
    delta[i] = sum / band_[idx(i, 0)];
  }
  return delta;
}

Eigen::VectorXd BandCholesky::solve_upper(const Eigen::VectorXd& w) const {
  Eigen::VectorXd xi(rows_);
  for (int i = rows_ - 1; i >= 0; --i) {
    if (zero_pivot_[static_cast<std::size_t>(i)]) {
      throw RankDeficiencyError(
          "cannot sample a rank-deficient posterior (zero pivot at variable " +
              std::to_string(i / 3) + ")",
          i / 3);
    }
    double sum = w[i];
    for (int off = 1; off <= kBand && i + off < rows_; ++off) {
      sum -= band_[idx(i, off)] * xi[i + off];
    }
    xi[i] = sum / band_[idx(i, 0)];
  }
  return xi;
}

Eigen::VectorXd BandCholesky::solve_upper_tail(const Eigen::VectorXd& w) const {
  const int tail = static_cast<int>(w.size());
  Eigen::VectorXd xi(tail);
  const int base = rows_ - tail;
  for (int k = tail - 1; k >= 0; --k) {
    const int i = base + k;
    if (zero_pivot_[static_cast<std::size_t>(i)]) {
      throw RankDeficiencyError(
          "cannot sample a rank-deficient posterior (zero pivot at variable " +
              std::to_string(i / 3) + ")",
          i / 3);
    }
    double sum = w[k];
    for (int off = 1; off <= kBand && i + off < rows_; ++off) {
      sum -= band_[idx(i, off)] * xi[k + off];
    }
    xi[k] = sum / band_[idx(i, 0)];
  }
  return xi;
}

std::vector<std::tuple<int, int, double>> BandCholesky::triplets() const {
  std::vector<std::tuple<int, int, double>> out;
  for (int i = 0; i < rows_; ++i) {
    for (int off = 0; off <= kBand && i + off < rows_; ++off) {
      const double v = band_[idx(i, off)];
      if (v != 0.0) out.emplace_back(i, i + off, v);
    }
  }
  return out;
}

}  // namespace noisetune
