#include "gpot/kernels.hpp"

#include <cmath>

namespace gpot {

KernelSpec KernelSpec::squared_exponential(double sigma, int d) {
  if (!(sigma > 0.0)) throw InvalidConfig("SE kernel: sigma must be > 0");
  if (d < 1) throw InvalidConfig("kernel: domain_dim must be >= 1");
  return {Family::SquaredExponential, sigma, 1, d};
}

KernelSpec KernelSpec::exponential(double a, int d) {
  if (!(a > 0.0)) throw InvalidConfig("Exponential kernel: a must be > 0");
  if (d < 1) throw InvalidConfig("kernel: domain_dim must be >= 1");
  return {Family::Exponential, a, 1, d};
}

KernelSpec KernelSpec::polynomial(int degree, int d) {
  if (degree < 1) throw InvalidConfig("Polynomial kernel: degree must be >= 1");
  if (d < 1) throw InvalidConfig("kernel: domain_dim must be >= 1");
  return {Family::Polynomial, 0.0, degree, d};
}

std::string KernelSpec::name() const {
  switch (family) {
    case Family::SquaredExponential:
      return "se";
    case Family::Exponential:
      return "exp";
    case Family::Polynomial:
      return "poly";
  }
  return "?";
}

double kernel_eval(const KernelSpec& k, const Eigen::Ref<const Vector>& x,
                   const Eigen::Ref<const Vector>& y) {
  if (x.size() != k.domain_dim || y.size() != k.domain_dim)
    throw DimMismatch("kernel_eval: point dimension mismatch");
  switch (k.family) {
    case KernelSpec::Family::SquaredExponential:
      return std::exp(-(x - y).squaredNorm() / (k.param * k.param));
    case KernelSpec::Family::Exponential:
      return std::exp(-k.param * (x - y).norm());
    case KernelSpec::Family::Polynomial:
      return std::pow(x.dot(y), k.degree);
  }
  return 0.0;
}

GramMatrix gram(const KernelSpec& k, const Matrix& points) {
  if (points.rows() < 1) throw EmptyInput("gram: empty point set");
  if (points.cols() != k.domain_dim)
    throw DimMismatch("gram: point dimension mismatch");
  const Index m = points.rows();
  Matrix g(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j <= i; ++j) {
      const double v = kernel_eval(k, points.row(i), points.row(j));
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return GramMatrix{SymMatrix(g), k, points};
}

Matrix cross_gram(const KernelSpec& k, const Matrix& x_points,
                  const Matrix& y_points) {
  if (x_points.rows() < 1 || y_points.rows() < 1)
    throw EmptyInput("cross_gram: empty point set");
  if (x_points.cols() != k.domain_dim || y_points.cols() != k.domain_dim)
    throw DimMismatch("cross_gram: point dimension mismatch");
  Matrix g(x_points.rows(), y_points.rows());
  for (Index i = 0; i < x_points.rows(); ++i)
    for (Index j = 0; j < y_points.rows(); ++j)
      g(i, j) = kernel_eval(k, x_points.row(i), y_points.row(j));
  return g;
}

double kernel_sup_bound(const KernelSpec& k) {
  switch (k.family) {
    case KernelSpec::Family::SquaredExponential:
    case KernelSpec::Family::Exponential:
      return 1.0;
    case KernelSpec::Family::Polynomial:
      // sup of <x,x>^D over [0,1]^d is d^D, attained at x = (1,...,1)
      return std::pow(static_cast<double>(k.domain_dim), k.degree);
  }
  return 0.0;
}

}  // namespace gpot
