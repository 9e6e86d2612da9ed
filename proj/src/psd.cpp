#include "gpot/psd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace gpot {

SymMatrix::SymMatrix(const Matrix& a) {
  if (a.rows() < 1 || a.rows() != a.cols())
    throw InvalidMatrix("SymMatrix: matrix must be square with dim >= 1");
  if (!a.allFinite()) throw InvalidMatrix("SymMatrix: non-finite entries");
  mat_ = 0.5 * (a + a.transpose());
}

Spectrum eig_sym(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat());
  if (solver.info() != Eigen::Success)
    throw NumericalError("eig_sym: eigendecomposition failed");

  const Index n = a.dim();
  Spectrum s;
  s.eigenvalues.resize(n);
  s.basis.resize(n, n);
  // Eigen returns ascending order; reverse to descending. Equal eigenvalues
  // keep the factorization's order, which is stable under this reversal.
  for (Index k = 0; k < n; ++k) {
    s.eigenvalues(k) = solver.eigenvalues()(n - 1 - k);
    Vector v = solver.eigenvectors().col(n - 1 - k);
    Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0) v = -v;
    s.basis.col(k) = v;
  }
  return s;
}

Spectrum psd_project(const Spectrum& s, const PsdPolicy& policy) {
  const double lmax = s.eigenvalues.size() > 0
                          ? std::max(s.eigenvalues.maxCoeff(), 0.0)
                          : 0.0;
  const double floor =
      std::max(policy.clip_floor_abs, policy.clip_floor_rel * lmax);
  Spectrum out = s;
  for (Index k = 0; k < out.eigenvalues.size(); ++k) {
    double l = std::max(out.eigenvalues(k), 0.0);
    out.eigenvalues(k) = (l < floor) ? 0.0 : l;
  }
  return out;
}

namespace {

void require_psd_up_to_roundoff(const Vector& lams, const char* who) {
  if (lams.size() == 0) return;
  const double lmax = std::max(lams.maxCoeff(), 0.0);
  const double lmin = lams.minCoeff();
  if (lmin < -(kNegEigRelTol * lmax + 1e-300))
    throw NotPsd(std::string(who) + ": matrix is not positive semidefinite");
}

}  // namespace

SymMatrix psd_sqrt(const SymMatrix& a, const PsdPolicy& policy) {
  Spectrum s = eig_sym(a);
  require_psd_up_to_roundoff(s.eigenvalues, "psd_sqrt");
  s = psd_project(s, policy);
  return SymMatrix(s.basis * s.eigenvalues.cwiseSqrt().asDiagonal() *
                   s.basis.transpose());
}

Vector cross_spectrum(const SymMatrix& a, const SymMatrix& b,
                      const PsdPolicy& policy) {
  if (a.dim() != b.dim())
    throw DimMismatch("cross_spectrum: dimension mismatch");
  const SymMatrix root = psd_sqrt(a, policy);
  const SymMatrix sandwich(root.mat() * b.mat() * root.mat());
  Spectrum s = eig_sym(sandwich);
  require_psd_up_to_roundoff(s.eigenvalues, "cross_spectrum");
  return psd_project(s, policy).eigenvalues;
}

Vector cross_spectrum(const Spectrum& a_spec, const SymMatrix& b,
                      const PsdPolicy& policy) {
  if (a_spec.eigenvalues.size() != b.dim())
    throw DimMismatch("cross_spectrum: dimension mismatch");
  require_psd_up_to_roundoff(a_spec.eigenvalues, "cross_spectrum");
  const Spectrum proj = psd_project(a_spec, policy);
  const Matrix root = proj.basis * proj.eigenvalues.cwiseSqrt().asDiagonal() *
                      proj.basis.transpose();
  const SymMatrix sandwich(root * b.mat() * root);
  Spectrum s = eig_sym(sandwich);
  require_psd_up_to_roundoff(s.eigenvalues, "cross_spectrum");
  return psd_project(s, policy).eigenvalues;
}

Vector entropic_map_spectrum(const Vector& lams, double c) {
  if (!(c > 0.0)) throw InvalidEpsilon("entropic_map_spectrum: c must be > 0");
  if (lams.size() > 0 && lams.minCoeff() < 0.0)
    throw NotPsd("entropic_map_spectrum: negative eigenvalue");
  Vector m(lams.size());
  for (Index k = 0; k < lams.size(); ++k) {
    // -1 + sqrt(1+x) written to stay accurate for small x
    const double x = c * c * lams(k);
    m(k) = x / (1.0 + std::sqrt(1.0 + x));
  }
  return m;
}

}  // namespace gpot
