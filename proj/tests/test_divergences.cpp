#include <doctest.h>

#include "gpot/divergences.hpp"
#include "test_helpers.hpp"

using namespace gpot;
namespace scalar = gpot::test::scalar;

namespace {

SymMatrix scalar_mat(double v) {
  Matrix m(1, 1);
  m << v;
  return SymMatrix(m);
}

GaussianParams scalar_gauss(double v) { return GaussianParams(scalar_mat(v)); }

SymMatrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return SymMatrix(m);
}

double trace_norm(const Matrix& m) {
  return eig_sym(SymMatrix(m)).eigenvalues.cwiseAbs().sum();
}

}  // namespace

TEST_CASE("w2_squared closed-form cases") {
  test::Rng rng(3);
  const GaussianParams g(test::random_psd(rng, 4));
  CHECK(w2_squared(g, g) == doctest::Approx(0.0).epsilon(1e-9));

  CHECK(w2_squared(scalar_gauss(1.0), scalar_gauss(4.0)) ==
        doctest::Approx(1.0));

  CHECK(w2_squared(GaussianParams(diag2(1.0, 2.0)),
                   GaussianParams(diag2(4.0, 8.0))) == doctest::Approx(3.0));
}

TEST_CASE("w2_squared with means matches the scalar closed form") {
  test::Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const double a = 0.1 + 3.0 * rng.uniform01();
    const double b = 0.1 + 3.0 * rng.uniform01();
    const double dm = 2.0 * rng.uniform01() - 1.0;
    Vector m0(1), m1(1);
    m0 << dm, m1 << 0.0;
    CHECK(w2_squared(GaussianParams(m0, scalar_mat(a)),
                     GaussianParams(m1, scalar_mat(b))) ==
          doctest::Approx(scalar::w2_sq(dm, a, b)).epsilon(1e-10));
  }
}

TEST_CASE("entropic_ot scalar oracle and limits") {
  // zero covariances, zero means: every term vanishes
  CHECK(entropic_ot(GaussianParams(diag2(0.0, 0.0)),
                    GaussianParams(diag2(0.0, 0.0)),
                    EntropicParams(1.0)) == doctest::Approx(0.0));

  test::Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const double a = 0.1 + 2.0 * rng.uniform01();
    const double eps = 0.05 + 2.0 * rng.uniform01();
    CHECK(entropic_ot(scalar_gauss(a), scalar_gauss(a), EntropicParams(eps)) ==
          doctest::Approx(scalar::entropic_ot(0.0, a, a, eps)).epsilon(1e-10));
  }

  // epsilon -> infinity: approaches tr C0 + tr C1
  const double big = entropic_ot(scalar_gauss(1.0), scalar_gauss(1.0),
                                 EntropicParams(1e8));
  CHECK(big == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("sinkhorn scalar oracle and divergence axioms") {
  test::Rng rng(9);
  const GaussianParams g(test::random_psd(rng, 5));
  CHECK(sinkhorn(g, g, EntropicParams(0.5)) == doctest::Approx(0.0));

  CHECK(sinkhorn(scalar_gauss(1.0), scalar_gauss(4.0), EntropicParams(0.5)) ==
        doctest::Approx(scalar::sinkhorn(0.0, 1.0, 4.0, 0.5)).epsilon(1e-10));

  // epsilon -> infinity with centered Gaussians: S -> 0
  const GaussianParams g2(test::random_psd(rng, 5));
  CHECK(std::abs(sinkhorn(g, g2, EntropicParams(1e8))) < 1e-4);
}

TEST_CASE("sinkhorn is symmetric and nonnegative on random pairs") {
  test::Rng rng(13);
  for (int rep = 0; rep < 25; ++rep) {
    const GaussianParams g0(test::random_psd(rng, 5));
    const GaussianParams g1(test::random_psd(rng, 5));
    const EntropicParams p(0.25);
    const double s01 = sinkhorn(g0, g1, p);
    const double s10 = sinkhorn(g1, g0, p);
    CHECK(s01 >= 0.0);
    CHECK(std::abs(s01 - s10) < 1e-9);
    CHECK(std::abs(w2_squared(g0, g1) - w2_squared(g1, g0)) < 1e-9);
    CHECK(sinkhorn(g0, g0, p) == doctest::Approx(0.0));
  }
}

TEST_CASE("sinkhorn converges to w2_squared as epsilon -> 0") {
  test::Rng rng(15);
  const GaussianParams g0(test::random_psd(rng, 5));
  const GaussianParams g1(test::random_psd(rng, 5));
  const double w2 = w2_squared(g0, g1);

  std::vector<double> gaps;
  for (double eps : {1.0, 0.1, 0.01, 0.001})
    gaps.push_back(std::abs(sinkhorn(g0, g1, EntropicParams(eps)) - w2));
  CHECK(gaps.back() < gaps.front());
  CHECK(gaps.back() < 1e-2 * (1.0 + w2));
}

TEST_CASE("w2_squared is dominated by the trace norm of the difference") {
  test::Rng rng(17);
  for (int rep = 0; rep < 25; ++rep) {
    const SymMatrix c0 = test::random_psd(rng, 5);
    const SymMatrix c1 = test::random_psd(rng, 5);
    CHECK(w2_squared(GaussianParams(c0), GaussianParams(c1)) <=
          trace_norm(c0.mat() - c1.mat()) + 1e-8);
  }
}

TEST_CASE("optimal_plan_cross_cov closed-form cases") {
  test::Rng rng(19);
  const SymMatrix c0 = test::random_psd(rng, 4);
  const Matrix zero_plan = optimal_plan_cross_cov(
      GaussianParams(c0), GaussianParams(SymMatrix(Matrix::Zero(4, 4))),
      EntropicParams(0.5));
  CHECK(zero_plan.norm() < 1e-12);

  for (int rep = 0; rep < 10; ++rep) {
    const double a = 0.1 + 2.0 * rng.uniform01();
    const double b = 0.1 + 2.0 * rng.uniform01();
    const double eps = 0.05 + rng.uniform01();
    const Matrix plan = optimal_plan_cross_cov(scalar_gauss(a),
                                               scalar_gauss(b),
                                               EntropicParams(eps));
    CHECK(plan(0, 0) ==
          doctest::Approx(scalar::plan_cross_cov(a, b, eps)).epsilon(1e-10));
  }

  // epsilon -> 0 recovers the deterministic coupling sqrt(a*b)
  const Matrix tight = optimal_plan_cross_cov(scalar_gauss(2.0),
                                              scalar_gauss(3.0),
                                              EntropicParams(1e-8));
  CHECK(tight(0, 0) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-6));
}

TEST_CASE("optimal plan block covariance is PSD up to round-off") {
  test::Rng rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    const SymMatrix c0 = test::random_psd(rng, 4);
    const SymMatrix c1 = test::random_psd(rng, 4);
    const Matrix cxy = optimal_plan_cross_cov(
        GaussianParams(c0), GaussianParams(c1), EntropicParams(0.5));
    Matrix block(8, 8);
    block << c0.mat(), cxy, cxy.transpose(), c1.mat();
    const Spectrum s = eig_sym(SymMatrix(block));
    CHECK(s.eigenvalues.minCoeff() >= -1e-8 * s.eigenvalues.maxCoeff());
  }
}

TEST_CASE("g_func closed-form values") {
  Vector z(2);
  z << 0.0, 0.0;
  CHECK(g_func(z, 1.0) == doctest::Approx(0.0));

  Vector one(1);
  one << 2.0;
  CHECK(g_func(one, 2.0) == doctest::Approx(2.0 - std::log(2.0)));

  Vector two(2);
  two << 1.0, 1.0;
  const double expected =
      2.0 * ((std::sqrt(2.0) - 1.0) - std::log((1.0 + std::sqrt(2.0)) / 2.0));
  CHECK(g_func(two, 1.0) == doctest::Approx(expected));
}

TEST_CASE("g_func satisfies the trace-norm Lipschitz bound") {
  test::Rng rng(23);
  const double c = 4.0 / 0.5;
  for (int rep = 0; rep < 25; ++rep) {
    const SymMatrix a = test::random_psd(rng, 5);
    const SymMatrix b = test::random_psd(rng, 5);
    const double ga = g_func(psd_project(eig_sym(a)).eigenvalues, c);
    const double gb = g_func(psd_project(eig_sym(b)).eigenvalues, c);
    CHECK(std::abs(ga - gb) <=
          0.75 * c * c * trace_norm(a.mat() - b.mat()) + 1e-8);
  }
}

TEST_CASE("sinkhorn satisfies the HS-continuity bound") {
  test::Rng rng(27);
  const double eps = 0.5;
  for (int rep = 0; rep < 15; ++rep) {
    const SymMatrix a = test::random_psd(rng, 5);
    const SymMatrix b = test::random_psd(rng, 5);
    const SymMatrix an(a.mat() + 0.05 * test::random_psd(rng, 5).mat());
    const SymMatrix bn(b.mat() + 0.05 * test::random_psd(rng, 5).mat());

    const double lhs =
        std::abs(sinkhorn(GaussianParams(an), GaussianParams(bn),
                          EntropicParams(eps)) -
                 sinkhorn(GaussianParams(a), GaussianParams(b),
                          EntropicParams(eps)));
    const double na = a.mat().norm(), nan_ = an.mat().norm();
    const double nb = b.mat().norm(), nbn = bn.mat().norm();
    const double rhs =
        (3.0 / eps) * (nan_ + na + 2.0 * nb) * (an.mat() - a.mat()).norm() +
        (3.0 / eps) * (2.0 * nan_ + na + nb) * (bn.mat() - b.mat()).norm();
    (void)nbn;
    CHECK(lhs <= rhs + 1e-8);
  }
}

TEST_CASE("sinkhorn_via_rkhs_representation equals the direct path") {
  test::Rng rng(29);
  const EntropicParams p(0.25);

  const SymMatrix k = test::random_psd(rng, 6, 3.0);
  CHECK(sinkhorn_via_rkhs_representation(k, k, 6, p) == doctest::Approx(0.0));

  for (int rep = 0; rep < 20; ++rep) {
    const int m = 10;
    const SymMatrix k1 = test::random_psd(rng, m, 2.0);
    const SymMatrix k2 = test::random_psd(rng, m, 2.0);
    const double via_gram = sinkhorn_via_rkhs_representation(k1, k2, m, p);
    const double direct =
        sinkhorn(GaussianParams(SymMatrix(k1.mat() / m)),
                 GaussianParams(SymMatrix(k2.mat() / m)), p);
    CHECK(via_gram == doctest::Approx(direct).epsilon(1e-8));
  }

  // m = 1 reduces to the scalar Sinkhorn divergence
  const double a = 1.3, b = 0.4;
  CHECK(sinkhorn_via_rkhs_representation(scalar_mat(a), scalar_mat(b), 1, p) ==
        doctest::Approx(scalar::sinkhorn(0.0, a, b, p.epsilon)).epsilon(1e-10));
}

TEST_CASE("hs_distance_sq") {
  test::Rng rng(31);
  const SymMatrix a = test::random_psd(rng, 4);
  CHECK(hs_distance_sq(a, a) == 0.0);

  CHECK(hs_distance_sq(diag2(1.0, 2.0), diag2(2.0, 2.0)) ==
        doctest::Approx(1.0));

  const SymMatrix b = test::random_psd(rng, 4);
  double sum = 0.0;
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      sum += (a.mat()(i, j) - b.mat()(i, j)) * (a.mat()(i, j) - b.mat()(i, j));
  CHECK(hs_distance_sq(a, b) == doctest::Approx(sum));

  CHECK_THROWS_AS(hs_distance_sq(a, test::random_psd(rng, 3)), DimMismatch);
}

TEST_CASE("hs_norm_sq_estimate trivial cases") {
  const auto se = KernelSpec::squared_exponential(0.1, 1);

  Matrix same = Matrix::Constant(5, 1, 0.5);
  CHECK(hs_norm_sq_estimate(se, same, same) == doctest::Approx(1.0));

  Matrix x(1, 1), y(1, 1);
  x << 0.2, y << 0.35;
  const double kxy = kernel_eval(se, x.row(0), y.row(0));
  CHECK(hs_norm_sq_estimate(se, x, y) == doctest::Approx(kxy * kxy));
}

TEST_CASE("divergence_report bundles consistent values") {
  test::Rng rng(37);
  const GaussianParams g0(test::random_psd(rng, 5));
  const GaussianParams g1(test::random_psd(rng, 5));
  const std::vector<double> eps = {0.1, 0.5};
  const DivergenceReport rep = divergence_report(g0, g1, eps);

  CHECK(rep.w2_sq == doctest::Approx(w2_squared(g0, g1)));
  CHECK(rep.hs_sq == doctest::Approx(hs_distance_sq(g0.cov, g1.cov)));
  for (double e : eps) {
    CHECK(rep.ot_eps.at(e) ==
          doctest::Approx(entropic_ot(g0, g1, EntropicParams(e))));
    CHECK(rep.sinkhorn.at(e) ==
          doctest::Approx(sinkhorn(g0, g1, EntropicParams(e))));
  }
}
