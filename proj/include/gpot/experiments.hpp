#ifndef GPOT_EXPERIMENTS_HPP
#define GPOT_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gpot/simulation.hpp"

namespace gpot {

enum class SweepMode { GramSweep, SampleSweep };

struct ExperimentConfig {
  int d = 1;
  KernelSpec kernel1;
  KernelSpec kernel2;
  std::vector<int> m_grid;
  std::vector<int> n_grid;
  std::vector<double> eps_list{0.1, 0.5};
  int trials = 20;
  std::uint64_t seed = 0;
  double delta = 0.5;
  SweepMode mode = SweepMode::GramSweep;
  Innovation innovation = Innovation::Gaussian;

  void validate() const;
};

/// One (trial, sweep point, metric, epsilon) measurement. epsilon is NaN for
/// metrics that do not depend on it (w2_sq, hs_sq).
struct ResultRow {
  std::string mode;
  int sweep_value = 0;
  int trial = 0;
  std::string metric;
  double epsilon = std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
};

/// Divergences between (1/m)K1[X] and (1/m)K2[X] over the m grid.
std::vector<ResultRow> run_gram_sweep(const ExperimentConfig& cfg);

/// Plug-in estimates over the N grid, at fixed X of size m_grid[0].
std::vector<ResultRow> run_sample_sweep(const ExperimentConfig& cfg);

/// Deterministic row order: (mode, sweep_value, trial, metric, epsilon).
void sort_rows(std::vector<ResultRow>& rows);

enum class BoundId {
  Thm45GramBounded,
  Thm48GramGeneral,
  Thm51CovEst,
  Thm52SamplesBounded,
  Thm61W2Gram,
  Thm62W2Cov,
  Thm63W2Samples,
  Thm22HsContinuity,
  ThmScoSampleCovOp,
  ThmScoFiniteSample,
};

BoundId parse_bound_id(const std::string& id);

struct BoundQuery {
  BoundId bound_id = BoundId::Thm45GramBounded;
  double kappa1_sq = 1.0;
  double kappa2_sq = 1.0;
  int m = 0;  // 0 means absent
  int n = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::optional<int> dim_hk2;
};

/// Exact evaluation of the selected high-probability error-bound right-hand
/// side.
double bound_value(const BoundQuery& q);

/// dim of the polynomial-kernel RKHS on [0,1]^d: C(D+d-1, d-1).
double polynomial_rkhs_dim(int degree, int d);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& xs,
                    const std::vector<double>& ys);

}  // namespace gpot

#endif
