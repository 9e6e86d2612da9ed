#include "gpot/experiments.hpp"

#include <algorithm>
#include <cmath>

namespace gpot {

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) return false;
  return true;
}

constexpr std::uint64_t kPointsTag = 1;
constexpr std::uint64_t kProcess1Tag = 2;
constexpr std::uint64_t kProcess2Tag = 3;

std::uint64_t chain(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                    std::uint64_t c) {
  return derive_seed(derive_seed(derive_seed(seed, a), b), c);
}

void emit_report(std::vector<ResultRow>& rows, const std::string& mode,
                 int sweep_value, int trial, const DivergenceReport& rep,
                 bool with_ot) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  rows.push_back({mode, sweep_value, trial, "hs_sq", nan, rep.hs_sq});
  rows.push_back({mode, sweep_value, trial, "w2_sq", nan, rep.w2_sq});
  for (const auto& [eps, v] : rep.sinkhorn)
    rows.push_back({mode, sweep_value, trial, "sinkhorn", eps, v});
  if (with_ot)
    for (const auto& [eps, v] : rep.ot_eps)
      rows.push_back({mode, sweep_value, trial, "ot_eps", eps, v});
}

}  // namespace

void ExperimentConfig::validate() const {
  if (d < 1) throw InvalidConfig("config: d must be >= 1");
  if (kernel1.domain_dim != d || kernel2.domain_dim != d)
    throw InvalidConfig("config: kernel domain_dim must equal d");
  if (m_grid.empty()) throw InvalidConfig("config: m_grid must be nonempty");
  if (!strictly_increasing(m_grid) || m_grid.front() < 1)
    throw InvalidConfig("config: m_grid must be positive, strictly increasing");
  if (mode == SweepMode::SampleSweep) {
    if (n_grid.empty()) throw InvalidConfig("config: n_grid must be nonempty");
    if (!strictly_increasing(n_grid) || n_grid.front() < 1)
      throw InvalidConfig("config: n_grid must be positive, strictly increasing");
  }
  for (double e : eps_list)
    if (!(e > 0.0)) throw InvalidConfig("config: eps_list must be positive");
  if (eps_list.empty()) throw InvalidConfig("config: eps_list must be nonempty");
  if (trials < 1) throw InvalidConfig("config: trials must be >= 1");
  if (!(delta > 0.0 && delta < 1.0))
    throw InvalidConfig("config: delta must be in (0,1)");
}

std::vector<ResultRow> run_gram_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.mode != SweepMode::GramSweep)
    throw InvalidConfig("run_gram_sweep: config mode is not gram_sweep");

  std::vector<ResultRow> rows;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    for (int m : cfg.m_grid) {
      const PointSample x = sample_points(
          cfg.d, m, chain(cfg.seed, kPointsTag, trial, m));
      const double md = static_cast<double>(m);
      const SymMatrix c1(gram(cfg.kernel1, x.coords).base.mat() / md);
      const SymMatrix c2(gram(cfg.kernel2, x.coords).base.mat() / md);
      const DivergenceReport rep = divergence_report(
          GaussianParams(c1), GaussianParams(c2), cfg.eps_list);
      emit_report(rows, "gram_sweep", m, trial, rep, /*with_ot=*/false);
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> run_sample_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.mode != SweepMode::SampleSweep)
    throw InvalidConfig("run_sample_sweep: config mode is not sample_sweep");

  const int m = cfg.m_grid.front();
  std::vector<ResultRow> rows;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const PointSample x =
        sample_points(cfg.d, m, chain(cfg.seed, kPointsTag, trial, m));
    const GramMatrix g1 = gram(cfg.kernel1, x.coords);
    const GramMatrix g2 = gram(cfg.kernel2, x.coords);
    for (int n : cfg.n_grid) {
      const PathSample z1 = sample_paths(
          g1, n, cfg.innovation, chain(cfg.seed, kProcess1Tag, trial, n));
      const PathSample z2 = sample_paths(
          g2, n, cfg.innovation, chain(cfg.seed, kProcess2Tag, trial, n));
      const DivergenceReport rep =
          estimate_from_samples(z1, z2, cfg.eps_list);
      emit_report(rows, "sample_sweep", n, trial, rep, /*with_ot=*/true);
    }
  }
  sort_rows(rows);
  return rows;
}

void sort_rows(std::vector<ResultRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     if (a.mode != b.mode) return a.mode < b.mode;
                     if (a.sweep_value != b.sweep_value)
                       return a.sweep_value < b.sweep_value;
                     if (a.trial != b.trial) return a.trial < b.trial;
                     if (a.metric != b.metric) return a.metric < b.metric;
                     const double ae = std::isnan(a.epsilon) ? -1.0 : a.epsilon;
                     const double be = std::isnan(b.epsilon) ? -1.0 : b.epsilon;
                     return ae < be;
                   });
}

BoundId parse_bound_id(const std::string& id) {
  if (id == "thm_4_5_gram_bounded") return BoundId::Thm45GramBounded;
  if (id == "thm_4_8_gram_general") return BoundId::Thm48GramGeneral;
  if (id == "thm_5_1_cov_est") return BoundId::Thm51CovEst;
  if (id == "thm_5_2_samples_bounded") return BoundId::Thm52SamplesBounded;
  if (id == "thm_6_1_w2_gram") return BoundId::Thm61W2Gram;
  if (id == "thm_6_2_w2_cov") return BoundId::Thm62W2Cov;
  if (id == "thm_6_3_w2_samples") return BoundId::Thm63W2Samples;
  if (id == "thm_2_2_hs_continuity") return BoundId::Thm22HsContinuity;
  if (id == "thm_sco_sample_cov_op") return BoundId::ThmScoSampleCovOp;
  if (id == "thm_sco_finite_sample") return BoundId::ThmScoFiniteSample;
  throw InvalidConfig("unknown bound id: " + id);
}

namespace {

void need_m(const BoundQuery& q) {
  if (q.m < 1) throw MissingParameter("bound_value: m is required");
}
void need_n(const BoundQuery& q) {
  if (q.n < 1) throw MissingParameter("bound_value: n is required");
}
void need_eps(const BoundQuery& q) {
  if (!(q.epsilon > 0.0)) throw MissingParameter("bound_value: epsilon is required");
}
void need_delta(const BoundQuery& q) {
  if (!(q.delta > 0.0 && q.delta < 1.0))
    throw MissingParameter("bound_value: delta in (0,1) is required");
}
int need_dim_hk2(const BoundQuery& q) {
  if (!q.dim_hk2 || *q.dim_hk2 < 1)
    throw MissingParameter("bound_value: dim_hk2 is required");
  return *q.dim_hk2;
}

// 2 log(a/delta)/m + sqrt(2 log(a/delta)/m)
double concentration_term(double a_over_delta, int m) {
  const double t = 2.0 * std::log(a_over_delta) / static_cast<double>(m);
  return t + std::sqrt(t);
}

}  // namespace

double bound_value(const BoundQuery& q) {
  if (!(q.kappa1_sq >= 0.0) || !(q.kappa2_sq >= 0.0))
    throw InvalidConfig("bound_value: kappa^2 must be >= 0");
  const double k1sq = q.kappa1_sq, k2sq = q.kappa2_sq;
  const double sum_sq = k1sq + k2sq;
  const double sqrt3 = std::sqrt(3.0);

  switch (q.bound_id) {
    case BoundId::Thm45GramBounded: {
      need_m(q), need_eps(q), need_delta(q);
      return (6.0 / q.epsilon) * sum_sq * sum_sq *
             concentration_term(6.0 / q.delta, q.m);
    }
    case BoundId::Thm48GramGeneral: {
      need_m(q), need_eps(q), need_delta(q);
      return (18.0 / q.epsilon) * sum_sq * sum_sq * (1.0 + 6.0 / q.delta) /
             (std::sqrt(static_cast<double>(q.m)) * q.delta);
    }
    case BoundId::Thm51CovEst: {
      need_n(q), need_eps(q), need_delta(q);
      const double bracket = (1.0 + 4.0 / q.delta) * k1sq * k1sq +
                             (3.0 + 8.0 / q.delta) * k1sq * k2sq +
                             k2sq * k2sq;
      return (12.0 * sqrt3 / (q.epsilon * q.delta)) * bracket /
             std::sqrt(static_cast<double>(q.n));
    }
    case BoundId::Thm52SamplesBounded: {
      need_m(q), need_n(q), need_eps(q), need_delta(q);
      const double gram_part = (6.0 / q.epsilon) * sum_sq * sum_sq *
                               concentration_term(12.0 / q.delta, q.m);
      const double bracket = (1.0 + 8.0 / q.delta) * k1sq * k1sq +
                             (3.0 + 16.0 / q.delta) * k1sq * k2sq +
                             k2sq * k2sq;
      const double sample_part = (24.0 * sqrt3 / (q.epsilon * q.delta)) *
                                 bracket /
                                 std::sqrt(static_cast<double>(q.n));
      return gram_part + sample_part;
    }
    case BoundId::Thm61W2Gram: {
      need_m(q), need_delta(q);
      const int dim = need_dim_hk2(q);
      const double u = concentration_term(6.0 / q.delta, q.m);
      return sum_sq * u + 2.0 * std::sqrt(2.0) * std::sqrt(k1sq * k2sq) *
                              std::sqrt(static_cast<double>(dim)) *
                              std::sqrt(u);
    }
    case BoundId::Thm62W2Cov: {
      need_m(q), need_n(q), need_delta(q);
      const double sn = std::sqrt(static_cast<double>(q.n));
      const double sm = std::sqrt(static_cast<double>(q.m));
      return 3.0 * (std::sqrt(k1sq) + std::sqrt(k2sq)) *
             std::sqrt(4.0 / (q.n * q.delta * q.delta) +
                       (sm / (sn * q.delta)) * (3.0 + 4.0 / (sn * q.delta)));
    }
    case BoundId::Thm63W2Samples: {
      need_m(q), need_n(q), need_delta(q);
      const int dim = need_dim_hk2(q);
      const double u = concentration_term(12.0 / q.delta, q.m);
      const double gram_part =
          std::sqrt(sum_sq * u + 2.0 * std::sqrt(2.0) *
                                     std::sqrt(k1sq * k2sq) *
                                     std::sqrt(static_cast<double>(dim)) *
                                     std::sqrt(u));
      const double sn = std::sqrt(static_cast<double>(q.n));
      const double sm = std::sqrt(static_cast<double>(q.m));
      const double sample_part =
          3.0 * (std::sqrt(k1sq) + std::sqrt(k2sq)) *
          std::sqrt(16.0 / (q.n * q.delta * q.delta) +
                    (2.0 * sm / (sn * q.delta)) * (3.0 + 8.0 / (sn * q.delta)));
      return gram_part + sample_part;
    }
    case BoundId::Thm22HsContinuity: {
      // HS-continuity coefficients with the operator norms replaced by their
      // high-probability envelopes: ||C|| <= kappa^2, perturbed operators
      // <= 2 kappa^2 / delta, and deviations <= 2 sqrt(3) kappa^2 /
      // (sqrt(N) delta).
      need_n(q), need_eps(q), need_delta(q);
      const double dev1 = 2.0 * sqrt3 * k1sq /
                          (std::sqrt(static_cast<double>(q.n)) * q.delta);
      const double dev2 = 2.0 * sqrt3 * k2sq /
                          (std::sqrt(static_cast<double>(q.n)) * q.delta);
      const double a_env = 2.0 * k1sq / q.delta;
      return (3.0 / q.epsilon) * (a_env + k1sq + 2.0 * k2sq) * dev1 +
             (3.0 / q.epsilon) * (2.0 * a_env + k1sq + k2sq) * dev2;
    }
    case BoundId::ThmScoSampleCovOp: {
      need_n(q), need_eps(q), need_delta(q);
      const double bracket = (1.0 + 4.0 / q.delta) * k1sq * k1sq +
                             (3.0 + 8.0 / q.delta) * k1sq * k2sq +
                             k2sq * k2sq;
      return (12.0 * sqrt3 / (q.epsilon * q.delta)) * bracket /
             std::sqrt(static_cast<double>(q.n));
    }
    case BoundId::ThmScoFiniteSample: {
      need_m(q), need_n(q), need_eps(q), need_delta(q);
      const double bracket = (1.0 + 16.0 / q.delta) * k1sq * k1sq +
                             (3.0 + 32.0 / q.delta) * k1sq * k2sq +
                             k2sq * k2sq;
      return (48.0 * sqrt3 / (q.epsilon * q.delta)) * bracket /
                 std::sqrt(static_cast<double>(q.n)) +
             (864.0 / (q.epsilon * q.delta)) * sum_sq * sum_sq *
                 (1.0 + 12.0 / q.delta) /
                 std::sqrt(static_cast<double>(q.m));
    }
  }
  throw InvalidConfig("bound_value: unknown bound id");
}

double polynomial_rkhs_dim(int degree, int d) {
  if (degree < 1 || d < 1)
    throw InvalidConfig("polynomial_rkhs_dim: degree, d must be >= 1");
  // C(D+d-1, d-1)
  double v = 1.0;
  for (int i = 1; i <= d - 1; ++i)
    v *= static_cast<double>(degree + i) / static_cast<double>(i);
  return std::round(v);
}

double loglog_slope(const std::vector<double>& xs,
                    const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw InvalidInput("loglog_slope: need matching lengths >= 3");
  const std::size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
      throw NonPositiveData("loglog_slope: data must be positive");
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double nd = static_cast<double>(n);
  return (nd * sxy - sx * sy) / (nd * sxx - sx * sx);
}

}  // namespace gpot
