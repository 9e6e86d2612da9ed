#include "gpot/simulation.hpp"

#include <cmath>

namespace gpot {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] so the log is finite
  const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer on the index, xor-folded into the base seed
  std::uint64_t z = index + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return base ^ z;
}

PointSample sample_points(int d, int m, std::uint64_t seed) {
  if (d < 1 || m < 1) throw InvalidInput("sample_points: d, m must be >= 1");
  Rng rng(seed);
  Matrix coords(m, d);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < d; ++j) coords(i, j) = rng.uniform01();
  return PointSample{d, m, std::move(coords), seed};
}

PathSample sample_paths(const GramMatrix& g, int n, Innovation innovation,
                        std::uint64_t seed, const PsdPolicy& policy) {
  if (n < 1) throw InvalidInput("sample_paths: n must be >= 1");
  const Index m = g.base.dim();

  Spectrum s = eig_sym(g.base);
  if (s.eigenvalues.minCoeff() <
      -(kNegEigRelTol * std::max(s.eigenvalues.maxCoeff(), 0.0) + 1e-300))
    throw NotPsd("sample_paths: Gram matrix is not PSD");
  s = psd_project(s, policy);
  // spectral factor: clipping composes cleanly here even when the Gram
  // matrix is numerically singular, unlike a Cholesky factor
  const Matrix factor = s.basis * s.eigenvalues.cwiseSqrt().asDiagonal();

  Rng rng(seed);
  const double half_width = std::sqrt(3.0);
  Matrix innovations(m, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i)
      innovations(i, j) = innovation == Innovation::Gaussian
                              ? rng.normal()
                              : half_width * (2.0 * rng.uniform01() - 1.0);

  PathSample out;
  out.x = PointSample{static_cast<int>(g.points.cols()),
                      static_cast<int>(m), g.points, 0};
  out.z = factor * innovations;
  out.n = n;
  out.innovation = innovation;
  out.seed = seed;
  return out;
}

EmpiricalCov empirical_cov(const PathSample& z, bool subtract_mean) {
  const int min_n = subtract_mean ? 2 : 1;
  if (z.n < min_n || z.z.cols() < min_n)
    throw InsufficientSamples("empirical_cov: too few realizations");
  Matrix centered = z.z;
  if (subtract_mean) centered.colwise() -= z.z.rowwise().mean();
  Matrix k = (centered * centered.transpose()) / static_cast<double>(z.z.cols());
  return EmpiricalCov{SymMatrix(std::move(k)), z.n};
}

DivergenceReport estimate_from_samples(const PathSample& z1,
                                       const PathSample& z2,
                                       const std::vector<double>& eps_list,
                                       bool subtract_mean,
                                       const PsdPolicy& policy) {
  if (z1.z.rows() != z2.z.rows())
    throw GridMismatch("estimate_from_samples: differing site counts");
  if (z1.x.coords.size() > 0 && z2.x.coords.size() > 0 &&
      (z1.x.coords.rows() != z2.x.coords.rows() ||
       z1.x.coords.cols() != z2.x.coords.cols() ||
       z1.x.coords != z2.x.coords))
    throw GridMismatch("estimate_from_samples: differing site sets");

  const double m = static_cast<double>(z1.z.rows());
  const SymMatrix k1(empirical_cov(z1, subtract_mean).mat.mat() / m);
  const SymMatrix k2(empirical_cov(z2, subtract_mean).mat.mat() / m);
  return divergence_report(GaussianParams(k1), GaussianParams(k2), eps_list,
                           policy);
}

}  // namespace gpot
