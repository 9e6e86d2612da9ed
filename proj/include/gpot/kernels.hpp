#ifndef GPOT_KERNELS_HPP
#define GPOT_KERNELS_HPP

#include <string>

#include "gpot/psd.hpp"

namespace gpot {

/// Positive-definite kernel on T = [0,1]^d.
struct KernelSpec {
  enum class Family { SquaredExponential, Exponential, Polynomial };

  Family family = Family::SquaredExponential;
  double param = 1.0;  // sigma for SE, a for Exponential; unused for Polynomial
  int degree = 1;      // Polynomial only
  int domain_dim = 1;

  static KernelSpec squared_exponential(double sigma, int d);
  static KernelSpec exponential(double a, int d);
  static KernelSpec polynomial(int degree, int d);

  std::string name() const;
};

/// Gram matrix of a kernel over a finite point set (rows of `points`).
struct GramMatrix {
  SymMatrix base;
  KernelSpec kernel;
  Matrix points;  // m x d
};

double kernel_eval(const KernelSpec& k, const Eigen::Ref<const Vector>& x,
                   const Eigen::Ref<const Vector>& y);

GramMatrix gram(const KernelSpec& k, const Matrix& points);

/// Rectangular matrix of K(x_i, y_j).
Matrix cross_gram(const KernelSpec& k, const Matrix& x_points,
                  const Matrix& y_points);

/// kappa^2 = sup of K(x,x) over the unit cube.
double kernel_sup_bound(const KernelSpec& k);

}  // namespace gpot

#endif
