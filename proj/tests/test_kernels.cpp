#include <doctest.h>

#include "gpot/kernels.hpp"
#include "test_helpers.hpp"

using namespace gpot;

TEST_CASE("kernel_eval closed-form values") {
  Vector x(1), y(1);

  const auto se = KernelSpec::squared_exponential(0.1, 1);
  x << 0.3, y << 0.3;
  CHECK(kernel_eval(se, x, y) == doctest::Approx(1.0));
  y << 0.4;
  CHECK(kernel_eval(se, x, y) == doctest::Approx(std::exp(-1.0)));

  const auto ex = KernelSpec::exponential(1.0, 1);
  x << 0.0, y << 1.0;
  CHECK(kernel_eval(ex, x, y) == doctest::Approx(std::exp(-1.0)));

  const auto poly = KernelSpec::polynomial(3, 1);
  x << 0.5, y << 0.5;
  CHECK(kernel_eval(poly, x, y) == doctest::Approx(std::pow(0.25, 3)));
}

TEST_CASE("kernel_eval rejects mismatched point dimensions") {
  const auto se = KernelSpec::squared_exponential(0.1, 2);
  Vector x(1), y(2);
  x << 0.0;
  y << 0.0, 0.0;
  CHECK_THROWS_AS(kernel_eval(se, x, y), DimMismatch);
}

TEST_CASE("gram closed-form cases") {
  const auto se = KernelSpec::squared_exponential(0.1, 1);

  Matrix one(1, 1);
  one << 0.7;
  const GramMatrix g1 = gram(se, one);
  CHECK(g1.base.dim() == 1);
  CHECK(g1.base.mat()(0, 0) == doctest::Approx(1.0));

  Matrix line(3, 1);
  line << 0.1, 0.2, 0.3;
  const GramMatrix g3 = gram(se, line);
  for (int i = 0; i < 3; ++i) CHECK(g3.base.mat()(i, i) == doctest::Approx(1.0));
  CHECK(g3.base.mat()(0, 1) == doctest::Approx(std::exp(-1.0)));
  CHECK(g3.base.mat()(0, 2) == doctest::Approx(std::exp(-4.0)));

  CHECK_THROWS_AS(gram(se, Matrix(0, 1)), EmptyInput);
}

TEST_CASE("cross_gram matches kernel_eval entrywise") {
  const auto ex = KernelSpec::exponential(1.0, 2);
  test::Rng rng(7);
  Matrix x(4, 2), y(3, 2);
  for (Index i = 0; i < x.size(); ++i) x.data()[i] = rng.uniform01();
  for (Index i = 0; i < y.size(); ++i) y.data()[i] = rng.uniform01();

  const Matrix g = cross_gram(ex, x, y);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 3; ++j)
      CHECK(g(i, j) == kernel_eval(ex, x.row(i), y.row(j)));

  // coincident grids reduce to the square Gram matrix
  CHECK((cross_gram(ex, x, x) - gram(ex, x).base.mat()).norm() == 0.0);
}

TEST_CASE("kernel_sup_bound") {
  CHECK(kernel_sup_bound(KernelSpec::squared_exponential(0.1, 3)) == 1.0);
  CHECK(kernel_sup_bound(KernelSpec::exponential(2.0, 1)) == 1.0);
  CHECK(kernel_sup_bound(KernelSpec::polynomial(2, 3)) == doctest::Approx(9.0));
}

TEST_CASE("gram matrices are PSD up to round-off on random point sets") {
  test::Rng rng(13);
  const std::vector<KernelSpec> kernels = {
      KernelSpec::squared_exponential(0.1, 2), KernelSpec::exponential(1.0, 2),
      KernelSpec::polynomial(2, 2)};
  for (int rep = 0; rep < 100; ++rep) {
    const auto& k = kernels[rep % kernels.size()];
    Matrix pts(12, 2);
    for (Index i = 0; i < pts.size(); ++i) pts.data()[i] = rng.uniform01();
    const Spectrum s = eig_sym(gram(k, pts).base);
    const double lmax = std::max(s.eigenvalues.maxCoeff(), 0.0);
    CHECK(s.eigenvalues.minCoeff() >= -1e-10 * lmax);
    // diagonal never exceeds the sup bound
    CHECK(gram(k, pts).base.mat().diagonal().maxCoeff() <=
          kernel_sup_bound(k) + 1e-12);
  }
}

TEST_CASE("SE and exponential Gram matrices are translation invariant") {
  test::Rng rng(19);
  Matrix pts(8, 1);
  for (Index i = 0; i < 8; ++i) pts(i, 0) = 0.5 * rng.uniform01();
  const Matrix shifted = pts.array() + 0.25;

  for (const auto& k : {KernelSpec::squared_exponential(0.1, 1),
                        KernelSpec::exponential(1.0, 1)}) {
    const Matrix a = gram(k, pts).base.mat();
    const Matrix b = gram(k, shifted).base.mat();
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
  }
}
