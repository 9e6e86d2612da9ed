#ifndef GPOT_DIVERGENCES_HPP
#define GPOT_DIVERGENCES_HPP

#include <map>
#include <vector>

#include "gpot/kernels.hpp"
#include "gpot/psd.hpp"

namespace gpot {

/// Gaussian measure N(mean, cov); mean defaults to zero.
struct GaussianParams {
  Vector mean;
  SymMatrix cov;

  explicit GaussianParams(SymMatrix c)
      : mean(Vector::Zero(c.dim())), cov(std::move(c)) {}
  GaussianParams(Vector m, SymMatrix c) : mean(std::move(m)), cov(std::move(c)) {
    if (mean.size() != cov.dim())
      throw DimMismatch("GaussianParams: mean length != cov dim");
  }
};

/// Regularization strength; c = 4/epsilon is the scale of the spectral map.
struct EntropicParams {
  double epsilon;
  double c;

  explicit EntropicParams(double eps) : epsilon(eps), c(4.0 / eps) {
    if (!(eps > 0.0)) throw InvalidEpsilon("EntropicParams: epsilon must be > 0");
  }
};

/// All divergences of one covariance pair, per regularization strength.
struct DivergenceReport {
  double w2_sq = 0.0;
  std::map<double, double> ot_eps;
  std::map<double, double> sinkhorn;
  double hs_sq = 0.0;
};

// Divergence values within kClampTol below zero are round-off and clamp to 0;
// larger negatives raise NumericalInconsistency.
inline constexpr double kClampTol = 1e-9;

/// Exact squared 2-Wasserstein distance between Gaussians.
double w2_squared(const GaussianParams& g0, const GaussianParams& g1,
                  const PsdPolicy& policy = {});

/// Entropic-regularized OT cost.
double entropic_ot(const GaussianParams& g0, const GaussianParams& g1,
                   const EntropicParams& p, const PsdPolicy& policy = {});

/// Debiased Sinkhorn divergence (zero iff the Gaussians coincide).
double sinkhorn(const GaussianParams& g0, const GaussianParams& g1,
                const EntropicParams& p, const PsdPolicy& policy = {});

/// Off-diagonal block of the optimal entropic joint plan's covariance.
Matrix optimal_plan_cross_cov(const GaussianParams& g0, const GaussianParams& g1,
                              const EntropicParams& p,
                              const PsdPolicy& policy = {});

/// G(A) = tr M(A) - log det(I + M(A)/2), evaluated on the spectrum of A.
double g_func(const Vector& lams, double c);

/// Sinkhorn divergence of N(0,(1/m)K1) vs N(0,(1/m)K2) assembled from the
/// Gram-level spectra (1/m^2)(K^i)^2 and (1/m^2)K1 K2.
double sinkhorn_via_rkhs_representation(const SymMatrix& k1gram,
                                        const SymMatrix& k2gram, int m,
                                        const EntropicParams& p,
                                        const PsdPolicy& policy = {});

/// Squared Frobenius distance.
double hs_distance_sq(const SymMatrix& a, const SymMatrix& b);

/// Monte-Carlo estimate (1/(mn)) ||K[X,Y]||_F^2 of the squared HS norm of the
/// covariance operator of k.
double hs_norm_sq_estimate(const KernelSpec& k, const Matrix& x_points,
                           const Matrix& y_points);

/// Full report for one pair of covariance matrices over a list of epsilons.
DivergenceReport divergence_report(const GaussianParams& g0,
                                   const GaussianParams& g1,
                                   const std::vector<double>& eps_list,
                                   const PsdPolicy& policy = {});

}  // namespace gpot

#endif
