#ifndef GPOT_PSD_HPP
#define GPOT_PSD_HPP

#include <Eigen/Dense>

#include "gpot/errors.hpp"

namespace gpot {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dense real symmetric matrix. Symmetrized on construction, so
/// mat()(i,j) == mat()(j,i) holds exactly.
class SymMatrix {
 public:
  explicit SymMatrix(const Matrix& a);

  Index dim() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }
  double trace() const { return mat_.trace(); }

 private:
  Matrix mat_;
};

/// Eigenvalues (descending) and orthonormal eigenbasis of a SymMatrix.
struct Spectrum {
  Vector eigenvalues;  // sorted descending
  Matrix basis;        // columns are eigenvectors, same order

  Matrix reconstruct() const {
    return basis * eigenvalues.asDiagonal() * basis.transpose();
  }
};

/// Clipping floors for projecting round-off negatives to zero.
struct PsdPolicy {
  double clip_floor_rel = 1e-12;
  double clip_floor_abs = 1e-14;
};

// Inputs whose most-negative eigenvalue is above -kNegEigRelTol * lambda_max
// are treated as PSD-up-to-round-off; anything below raises NotPsd.
inline constexpr double kNegEigRelTol = 1e-8;

/// Self-adjoint eigendecomposition with deterministic ordering and
/// eigenvector sign (largest-magnitude component made positive).
Spectrum eig_sym(const SymMatrix& a);

/// Clamp eigenvalues to [0, inf) and zero out everything below
/// max(clip_floor_abs, clip_floor_rel * lambda_max).
Spectrum psd_project(const Spectrum& s, const PsdPolicy& policy = {});

/// Symmetric PSD square root via the spectral path.
SymMatrix psd_sqrt(const SymMatrix& a, const PsdPolicy& policy = {});

/// Eigenvalues of sqrt(a) * b * sqrt(a), projected to >= 0, descending.
/// This is the symmetric realization of the nonzero spectrum of a*b.
Vector cross_spectrum(const SymMatrix& a, const SymMatrix& b,
                      const PsdPolicy& policy = {});

/// Same, reusing an existing decomposition of the first factor.
Vector cross_spectrum(const Spectrum& a_spec, const SymMatrix& b,
                      const PsdPolicy& policy = {});

/// Elementwise lambda -> -1 + sqrt(1 + c^2 * lambda).
Vector entropic_map_spectrum(const Vector& lams, double c);

}  // namespace gpot

#endif
