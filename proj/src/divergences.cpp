#include "gpot/divergences.hpp"

#include <cmath>

namespace gpot {

namespace {

// Everything below is a spectral function of these three ingredients, so we
// decompose each covariance once and derive all reports from the result.
struct PairSpectra {
  double mean_sq = 0.0;
  double tr0 = 0.0, tr1 = 0.0;
  Vector lam0, lam1;  // projected eigenvalues of C0, C1 (descending)
  Vector cross;       // spectrum of C0^{1/2} C1 C0^{1/2}
  Vector cross_sqrt;  // its elementwise square root
};

void require_psd(const Vector& eigenvalues, const char* who) {
  if (eigenvalues.size() > 0 &&
      eigenvalues.minCoeff() <
          -(kNegEigRelTol * std::max(eigenvalues.maxCoeff(), 0.0) + 1e-300))
    throw NotPsd(std::string(who) + " covariance is not PSD");
}

PairSpectra pair_spectra(const GaussianParams& g0, const GaussianParams& g1,
                         const PsdPolicy& policy) {
  if (g0.cov.dim() != g1.cov.dim() || g0.mean.size() != g1.mean.size())
    throw DimMismatch("divergence: dimension mismatch");
  PairSpectra ps;
  ps.mean_sq = (g0.mean - g1.mean).squaredNorm();
  ps.tr0 = g0.cov.trace();
  ps.tr1 = g1.cov.trace();
  const Spectrum s0 = eig_sym(g0.cov);
  const Spectrum s1 = eig_sym(g1.cov);
  require_psd(s0.eigenvalues, "divergence: first");
  require_psd(s1.eigenvalues, "divergence: second");
  const Spectrum p0 = psd_project(s0, policy);
  const Spectrum p1 = psd_project(s1, policy);
  ps.lam0 = p0.eigenvalues;
  ps.lam1 = p1.eigenvalues;

  // sqrt of the cross spectrum as singular values of C0^{1/2} C1^{1/2}. The
  // singular values equal sqrt(eig(C0^{1/2} C1 C0^{1/2})) exactly, but avoid
  // taking sqrt of nearly-zero sandwich eigenvalues, which loses half the
  // working precision right where W2 needs it.
  const Matrix root0 = p0.basis * p0.eigenvalues.cwiseSqrt().asDiagonal() *
                       p0.basis.transpose();
  const Matrix root1 = p1.basis * p1.eigenvalues.cwiseSqrt().asDiagonal() *
                       p1.basis.transpose();
  ps.cross_sqrt = Eigen::BDCSVD<Matrix>(root0 * root1).singularValues();
  ps.cross = ps.cross_sqrt.cwiseAbs2();
  return ps;
}

double clamp_nonneg(double v, const char* who) {
  if (v >= 0.0) return v;
  if (v >= -kClampTol) return 0.0;
  throw NumericalInconsistency(std::string(who) +
                               ": negative value beyond round-off tolerance");
}

double w2_from(const PairSpectra& ps) {
  const double v = ps.mean_sq + ps.tr0 + ps.tr1 - 2.0 * ps.cross_sqrt.sum();
  return clamp_nonneg(v, "w2_squared");
}

double log_term(const Vector& m) {
  double s = 0.0;
  for (Index k = 0; k < m.size(); ++k) s += std::log1p(0.5 * m(k));
  return s;
}

double ot_from(const PairSpectra& ps, double eps) {
  const Vector m01 = entropic_map_spectrum(ps.cross, 4.0 / eps);
  return ps.mean_sq + ps.tr0 + ps.tr1 - 0.5 * eps * m01.sum() +
         0.5 * eps * log_term(m01);
}

double sinkhorn_from(const PairSpectra& ps, double eps) {
  const double c = 4.0 / eps;
  const Vector m00 = entropic_map_spectrum(ps.lam0.cwiseAbs2(), c);
  const Vector m11 = entropic_map_spectrum(ps.lam1.cwiseAbs2(), c);
  const Vector m01 = entropic_map_spectrum(ps.cross, c);
  const double v =
      ps.mean_sq + 0.25 * eps * (m00.sum() - 2.0 * m01.sum() + m11.sum()) +
      0.25 * eps *
          (2.0 * log_term(m01) - log_term(m00) - log_term(m11));
  return clamp_nonneg(v, "sinkhorn");
}

}  // namespace

double w2_squared(const GaussianParams& g0, const GaussianParams& g1,
                  const PsdPolicy& policy) {
  return w2_from(pair_spectra(g0, g1, policy));
}

double entropic_ot(const GaussianParams& g0, const GaussianParams& g1,
                   const EntropicParams& p, const PsdPolicy& policy) {
  return ot_from(pair_spectra(g0, g1, policy), p.epsilon);
}

double sinkhorn(const GaussianParams& g0, const GaussianParams& g1,
                const EntropicParams& p, const PsdPolicy& policy) {
  return sinkhorn_from(pair_spectra(g0, g1, policy), p.epsilon);
}

Matrix optimal_plan_cross_cov(const GaussianParams& g0, const GaussianParams& g1,
                              const EntropicParams& p,
                              const PsdPolicy& policy) {
  if (g0.cov.dim() != g1.cov.dim())
    throw DimMismatch("optimal_plan_cross_cov: dimension mismatch");
  const SymMatrix root = psd_sqrt(g0.cov, policy);
  const SymMatrix sandwich(root.mat() * g1.cov.mat() * root.mat());
  Spectrum s = eig_sym(sandwich);
  if (s.eigenvalues.size() > 0 &&
      s.eigenvalues.minCoeff() <
          -(kNegEigRelTol * std::max(s.eigenvalues.maxCoeff(), 0.0) + 1e-300))
    throw NotPsd("optimal_plan_cross_cov: cross operator is not PSD");
  s = psd_project(s, policy);
  const Vector m01 = entropic_map_spectrum(s.eigenvalues, p.c);
  // (I + M01/2)^{-1} in the eigenbasis of the sandwich
  const Vector inv = (1.0 + 0.5 * m01.array()).inverse().matrix();
  const Matrix resolvent = s.basis * inv.asDiagonal() * s.basis.transpose();
  return (2.0 / p.epsilon) * root.mat() * resolvent * root.mat() *
         g1.cov.mat();
}

double g_func(const Vector& lams, double c) {
  const Vector m = entropic_map_spectrum(lams, c);
  return m.sum() - log_term(m);
}

double sinkhorn_via_rkhs_representation(const SymMatrix& k1gram,
                                        const SymMatrix& k2gram, int m,
                                        const EntropicParams& p,
                                        const PsdPolicy& policy) {
  if (m < 1) throw InvalidInput("sinkhorn_via_rkhs_representation: m must be >= 1");
  if (k1gram.dim() != m || k2gram.dim() != m)
    throw DimMismatch("sinkhorn_via_rkhs_representation: Gram size != m");
  const double md = static_cast<double>(m);

  const Vector lam1 = psd_project(eig_sym(k1gram), policy).eigenvalues / md;
  const Vector lam2 = psd_project(eig_sym(k2gram), policy).eigenvalues / md;
  const Vector cross = cross_spectrum(SymMatrix(k1gram.mat() / md),
                                      SymMatrix(k2gram.mat() / md), policy);

  const double v = (1.0 / p.c) * (g_func(lam1.cwiseAbs2(), p.c) +
                                  g_func(lam2.cwiseAbs2(), p.c) -
                                  2.0 * g_func(cross, p.c));
  return clamp_nonneg(v, "sinkhorn_via_rkhs_representation");
}

double hs_distance_sq(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatch("hs_distance_sq: dimension mismatch");
  return (a.mat() - b.mat()).squaredNorm();
}

double hs_norm_sq_estimate(const KernelSpec& k, const Matrix& x_points,
                           const Matrix& y_points) {
  const Matrix g = cross_gram(k, x_points, y_points);
  return g.squaredNorm() / static_cast<double>(g.rows() * g.cols());
}

DivergenceReport divergence_report(const GaussianParams& g0,
                                   const GaussianParams& g1,
                                   const std::vector<double>& eps_list,
                                   const PsdPolicy& policy) {
  const PairSpectra ps = pair_spectra(g0, g1, policy);
  DivergenceReport rep;
  rep.w2_sq = w2_from(ps);
  rep.hs_sq = hs_distance_sq(g0.cov, g1.cov);
  for (double eps : eps_list) {
    if (!(eps > 0.0)) throw InvalidEpsilon("divergence_report: epsilon must be > 0");
    rep.ot_eps[eps] = ot_from(ps, eps);
    rep.sinkhorn[eps] = sinkhorn_from(ps, eps);
  }
  return rep;
}

}  // namespace gpot
